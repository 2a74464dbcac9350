#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "starq/scalar_traits.hpp"

namespace starq {

namespace detail {

// Sign of interleaving blade b after blade a into ascending order,
// i.e. (-1)^{#(i,j): i in a, j in b, i > j}. Zero overlap assumed.
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  std::uint32_t bb = b;
  while (bb) {
    const int j = std::countr_zero(bb);
    bb &= bb - 1;
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

// Left Grassmann derivative sign: d_i applied from the left.
inline int left_deriv_sign(std::uint32_t mask, int i) {
  return (std::popcount(mask & ((1u << i) - 1u)) & 1) ? -1 : 1;
}

// Right Grassmann derivative sign: d_i applied from the right.
inline int right_deriv_sign(std::uint32_t mask, int i) {
  return (std::popcount(mask >> (i + 1)) & 1) ? -1 : 1;
}

}  // namespace detail

// Element of the Grassmann algebra on d generators, stored as a sparse map
// from generator bitmask to coefficient. Bit i set <=> generator theta_{i+1}
// present, canonical ascending order.
template <class R>
class Multivector {
 public:
  using Traits = scalar_traits<R>;
  using TermMap = std::map<std::uint32_t, R>;

  Multivector() : dim_(0) {}
  explicit Multivector(int dim) : dim_(dim) { check_dim(dim); }

  static Multivector zero(int dim) { return Multivector(dim); }
  static Multivector scalar(int dim, R value) {
    Multivector out(dim);
    out.add_term(0u, std::move(value));
    return out;
  }
  static Multivector unit(int dim) { return scalar(dim, Traits::one()); }
  // Generators are numbered 1..d.
  static Multivector generator(int dim, int index) {
    if (index < 1 || index > dim) throw std::out_of_range("generator index out of range");
    Multivector out(dim);
    out.add_term(1u << (index - 1), Traits::one());
    return out;
  }
  static Multivector blade(int dim, std::uint32_t mask, R coeff) {
    if (mask >= (1u << dim)) throw std::out_of_range("blade mask out of range");
    Multivector out(dim);
    out.add_term(mask, std::move(coeff));
    return out;
  }

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coeff(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Traits::zero() : it->second;
  }
  R scalar_part() const { return coeff(0u); }

  void add_term(std::uint32_t mask, R value) {
    if (Traits::is_zero(value)) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      terms_.emplace(mask, std::move(value));
    } else {
      it->second += value;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  // Relative pruning for the float backend; exact terms prune on insert.
  void prune() {
    if constexpr (!Traits::exact) {
      double mx = 0.0;
      for (const auto& [m, v] : terms_) mx = std::max(mx, std::abs(v));
      if (mx == 0.0) {
        terms_.clear();
        return;
      }
      for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < 1e-14 * mx)
          it = terms_.erase(it);
        else
          ++it;
      }
    }
  }

  Multivector operator-() const {
    Multivector out(dim_);
    for (const auto& [m, v] : terms_) out.terms_[m] = -v;
    return out;
  }
  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [m, v] : o.terms_) add_term(m, v);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [m, v] : o.terms_) add_term(m, -v);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

  friend Multivector operator*(const R& s, const Multivector& u) {
    Multivector out(u.dim_);
    for (const auto& [m, v] : u.terms_) out.add_term(m, s * v);
    return out;
  }
  friend Multivector operator*(const Multivector& u, const R& s) { return s * u; }

  // Grassmann (wedge) product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector out(a.dim_);
    for (const auto& [ma, va] : a.terms_)
      for (const auto& [mb, vb] : b.terms_) {
        if (ma & mb) continue;
        const int sign = detail::wedge_sign(ma, mb);
        R prod = va * vb;
        out.add_term(ma | mb, sign > 0 ? std::move(prod) : -std::move(prod));
      }
    out.prune();
    return out;
  }

  Multivector grade_part(int k) const {
    Multivector out(dim_);
    for (const auto& [m, v] : terms_)
      if (std::popcount(m) == k) out.terms_[m] = v;
    return out;
  }
  int max_grade() const {
    int g = 0;
    for (const auto& [m, v] : terms_) g = std::max(g, std::popcount(m));
    return g;
  }
  bool is_homogeneous(int* grade_out = nullptr) const {
    int g = -1;
    for (const auto& [m, v] : terms_) {
      const int k = std::popcount(m);
      if (g == -1) g = k;
      else if (g != k) return false;
    }
    if (grade_out) *grade_out = g < 0 ? 0 : g;
    return true;
  }

  // Conjugate-linear antiautomorphism with fixed generators: reverse each
  // monomial and conjugate the coefficient.
  Multivector involution() const {
    Multivector out(dim_);
    for (const auto& [m, v] : terms_) {
      const int k = std::popcount(m);
      const bool flip = ((k * (k - 1)) / 2) % 2 != 0;
      R c = Traits::conj(v);
      out.terms_[m] = flip ? -c : c;
    }
    return out;
  }

  // Levi-Civita completion, grade r -> grade d-r.
  Multivector hodge() const {
    const std::uint32_t full = (1u << dim_) - 1u;
    Multivector out(dim_);
    for (const auto& [m, v] : terms_) {
      const std::uint32_t comp = full & ~m;
      const int sign = detail::wedge_sign(m, comp);
      out.terms_[comp] = sign > 0 ? v : -v;
    }
    return out;
  }

  // Berezin integral with measure d theta_d ... d theta_1 and
  // int d theta_i theta_j = hbar delta_ij: picks hbar^d times the
  // coefficient of the ascending top monomial.
  R berezin_integral(const R& hbar) const {
    R acc = coeff((1u << dim_) - 1u);
    for (int k = 0; k < dim_; ++k) acc = acc * hbar;
    return acc;
  }

  // trace(u) = (N / hbar^d) * berezin(hodge(u)); default N = 2^{floor(d/2)}.
  R trace(const R& hbar, long normalization = 0) const {
    if (normalization == 0) normalization = 1L << (dim_ / 2);
    R top = hodge().berezin_integral(hbar);
    R hbar_d = Traits::one();
    for (int k = 0; k < dim_; ++k) hbar_d = hbar_d * hbar;
    return Traits::from_rational(normalization) * top * Traits::inverse(hbar_d);
  }

  // Left derivative d/d theta_{i+1} acting from the left (0-based index).
  Multivector left_derivative(int i) const {
    Multivector out(dim_);
    const std::uint32_t bit = 1u << i;
    for (const auto& [m, v] : terms_) {
      if (!(m & bit)) continue;
      const int sign = detail::left_deriv_sign(m, i);
      out.add_term(m & ~bit, sign > 0 ? v : -v);
    }
    return out;
  }

  Multivector<std::complex<double>> to_complex(double hbar_value, double c_value) const
    requires Traits::exact
  {
    Multivector<std::complex<double>> out(dim_);
    for (const auto& [m, v] : terms_) out.add_term(m, v.to_complex(hbar_value, c_value));
    out.prune();
    return out;
  }

  double norm_inf(double hbar_value = 1.0, double c_value = 1.0) const {
    double mx = 0.0;
    for (const auto& [m, v] : terms_) {
      if constexpr (Traits::exact)
        mx = std::max(mx, std::abs(v.to_complex(hbar_value, c_value)));
      else
        mx = std::max(mx, std::abs(v));
    }
    return mx;
  }

  bool operator==(const Multivector& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << term_string(v) << ")";
      std::uint32_t mm = m;
      while (mm) {
        const int i = std::countr_zero(mm);
        mm &= mm - 1;
        os << "*t" << (i + 1);
      }
    }
    return os.str();
  }

 private:
  static void check_dim(int dim) {
    if (dim < 0 || dim > 16) throw std::invalid_argument("dimension must be in 0..16");
  }
  void check_same(const Multivector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  }
  static std::string term_string(const R& v) {
    if constexpr (Traits::exact) {
      return v.to_string();
    } else {
      std::ostringstream os;
      os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
      return os.str();
    }
  }

  int dim_;
  TermMap terms_;
};

using MultivectorX = Multivector<ExactScalar>;
using MultivectorC = Multivector<std::complex<double>>;

// Bilinear form B on the generators, with cached symmetric part g and
// antisymmetric part A.
template <class R>
class BilinearForm {
 public:
  using Traits = scalar_traits<R>;

  BilinearForm() : dim_(0) {}
  BilinearForm(int dim, std::vector<R> entries) : dim_(dim), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != dim * dim)
      throw std::invalid_argument("bilinear form needs d*d entries");
  }
  static BilinearForm zero(int dim) {
    return BilinearForm(dim, std::vector<R>(static_cast<std::size_t>(dim) * dim, Traits::zero()));
  }
  // B = (hbar/2) * identity: the Cliffordization behind the Pauli product.
  static BilinearForm pauli(int dim)
    requires Traits::exact
  {
    BilinearForm out = zero(dim);
    for (int i = 0; i < dim; ++i) out.set(i, i, ExactScalar::h(2));
    return out;
  }

  int dim() const { return dim_; }
  const R& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, R v) { entries_[static_cast<std::size_t>(i) * dim_ + j] = std::move(v); }

  R g(int i, int j) const {
    return ((*this)(i, j) + (*this)(j, i)) * Traits::from_rational(1, 2);
  }
  R a(int i, int j) const {
    return ((*this)(i, j) - (*this)(j, i)) * Traits::from_rational(1, 2);
  }

  BilinearForm symmetric_part() const {
    BilinearForm out = zero(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out.set(i, j, g(i, j));
    return out;
  }
  BilinearForm antisymmetric_part() const {
    BilinearForm out = zero(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out.set(i, j, a(i, j));
    return out;
  }

  BilinearForm<std::complex<double>> to_complex(double hbar_value, double c_value) const
    requires Traits::exact
  {
    std::vector<std::complex<double>> entries;
    entries.reserve(entries_.size());
    for (const auto& v : entries_) entries.push_back(v.to_complex(hbar_value, c_value));
    return BilinearForm<std::complex<double>>(dim_, std::move(entries));
  }

  bool operator==(const BilinearForm& o) const { return dim_ == o.dim_ && entries_ == o.entries_; }

 private:
  int dim_;
  std::vector<R> entries_;
};

using BilinearFormX = BilinearForm<ExactScalar>;
using BilinearFormC = BilinearForm<std::complex<double>>;

}  // namespace starq
