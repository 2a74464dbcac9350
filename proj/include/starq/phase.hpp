#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "starq/contraction.hpp"

namespace starq {

// Packed exponent vector for up to 8 phase symbols, 8 bits each.
struct Mono {
  std::uint64_t bits = 0;

  static Mono one() { return {}; }
  static Mono var(int i, int e = 1) {
    Mono m;
    m.bits = static_cast<std::uint64_t>(e) << (8 * i);
    return m;
  }
  int exp(int i) const { return static_cast<int>((bits >> (8 * i)) & 0xFFu); }
  int total_degree() const {
    int s = 0;
    for (int i = 0; i < 8; ++i) s += exp(i);
    return s;
  }
  bool is_one() const { return bits == 0; }
  Mono dec(int i) const {
    Mono m = *this;
    m.bits -= std::uint64_t(1) << (8 * i);
    return m;
  }
  Mono inc(int i) const {
    if (exp(i) == 255) throw std::overflow_error("monomial exponent overflow");
    Mono m = *this;
    m.bits += std::uint64_t(1) << (8 * i);
    return m;
  }
  friend Mono operator*(Mono a, Mono b) {
    for (int i = 0; i < 8; ++i)
      if (a.exp(i) + b.exp(i) > 255) throw std::overflow_error("monomial exponent overflow");
    return Mono{a.bits + b.bits};
  }
  auto operator<=>(const Mono&) const = default;
};

struct SymbolSet {
  std::vector<std::string> names;

  SymbolSet() = default;
  SymbolSet(std::initializer_list<std::string> list) : names(list) {
    if (names.size() > 8) throw std::invalid_argument("at most 8 phase symbols");
  }
  explicit SymbolSet(std::vector<std::string> list) : names(std::move(list)) {
    if (names.size() > 8) throw std::invalid_argument("at most 8 phase symbols");
  }
  int size() const { return static_cast<int>(names.size()); }
  int index(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    throw std::invalid_argument("unknown phase symbol: " + std::string(name));
  }
  bool operator==(const SymbolSet&) const = default;
};

// Exponent of a Gaussian factor: sum_{i<=j} quad[{i,j}] x_i x_j + sum lin[i] x_i + c0.
template <class R>
struct GaussExp {
  using Traits = scalar_traits<R>;
  std::map<std::pair<int, int>, R> quad;
  std::map<int, R> lin;
  R c0 = Traits::zero();

  bool is_zero() const { return quad.empty() && lin.empty() && Traits::is_zero(c0); }

  void add_quad(int i, int j, const R& v) {
    if (i > j) std::swap(i, j);
    auto it = quad.find({i, j});
    if (it == quad.end()) {
      if (!Traits::is_zero(v)) quad.emplace(std::make_pair(i, j), v);
    } else {
      it->second += v;
      if (Traits::is_zero(it->second)) quad.erase(it);
    }
  }
  void add_lin(int i, const R& v) {
    auto it = lin.find(i);
    if (it == lin.end()) {
      if (!Traits::is_zero(v)) lin.emplace(i, v);
    } else {
      it->second += v;
      if (Traits::is_zero(it->second)) lin.erase(it);
    }
  }

  GaussExp operator+(const GaussExp& o) const {
    GaussExp out = *this;
    for (const auto& [k, v] : o.quad) out.add_quad(k.first, k.second, v);
    for (const auto& [k, v] : o.lin) out.add_lin(k, v);
    out.c0 += o.c0;
    return out;
  }

  // d/dx_i of the exponent: a linear polynomial, returned as (symbol, coeff)
  // pairs plus the constant part.
  std::pair<std::vector<std::pair<int, R>>, R> gradient(int i) const {
    std::vector<std::pair<int, R>> terms;
    for (const auto& [k, v] : quad) {
      const auto [p, q] = k;
      if (p == i && q == i) {
        terms.emplace_back(i, v + v);
      } else if (p == i) {
        terms.emplace_back(q, v);
      } else if (q == i) {
        terms.emplace_back(p, v);
      }
    }
    R constant = Traits::zero();
    auto it = lin.find(i);
    if (it != lin.end()) constant = it->second;
    return {std::move(terms), std::move(constant)};
  }

  bool touches(int i) const {
    if (lin.count(i)) return true;
    for (const auto& [k, v] : quad)
      if (k.first == i || k.second == i) return true;
    return false;
  }

  bool operator==(const GaussExp& o) const {
    return quad == o.quad && lin == o.lin && c0 == o.c0;
  }
};

template <class R>
int compare(const GaussExp<R>& a, const GaussExp<R>& b) {
  auto ia = a.quad.begin(), ib = b.quad.begin();
  for (; ia != a.quad.end() && ib != b.quad.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = compare(ia->second, ib->second)) return c;
  }
  if (ia != a.quad.end()) return 1;
  if (ib != b.quad.end()) return -1;
  auto ja = a.lin.begin(), jb = b.lin.begin();
  for (; ja != a.lin.end() && jb != b.lin.end(); ++ja, ++jb) {
    if (ja->first != jb->first) return ja->first < jb->first ? -1 : 1;
    if (int c = compare(ja->second, jb->second)) return c;
  }
  if (ja != a.lin.end()) return 1;
  if (jb != b.lin.end()) return -1;
  return compare(a.c0, b.c0);
}

// Finite sum of (polynomial in phase symbols) * exp(Gaussian) * (Grassmann
// factor); the Grassmann factor rides as the polynomial coefficient.
template <class R>
class PhaseFunction {
 public:
  using Traits = scalar_traits<R>;
  using Poly = std::map<Mono, Multivector<R>>;
  struct Part {
    GaussExp<R> gauss;
    Poly poly;
  };

  PhaseFunction() = default;
  PhaseFunction(SymbolSet syms, int gdim) : syms_(std::move(syms)), gdim_(gdim) {}

  static PhaseFunction constant(SymbolSet syms, int gdim, Multivector<R> value) {
    PhaseFunction out(std::move(syms), gdim);
    out.add_term({}, Mono::one(), std::move(value));
    return out;
  }
  static PhaseFunction scalar(SymbolSet syms, int gdim, R value) {
    const int d = gdim;
    return constant(std::move(syms), gdim, Multivector<R>::scalar(d, std::move(value)));
  }
  static PhaseFunction unit(SymbolSet syms, int gdim) {
    return scalar(std::move(syms), gdim, Traits::one());
  }
  static PhaseFunction symbol(const SymbolSet& syms, int gdim, std::string_view name) {
    PhaseFunction out(syms, gdim);
    out.add_term({}, Mono::var(syms.index(name)), Multivector<R>::unit(gdim));
    return out;
  }

  const SymbolSet& symbols() const { return syms_; }
  int grassmann_dim() const { return gdim_; }
  const std::vector<Part>& parts() const { return parts_; }
  bool is_zero() const {
    for (const auto& p : parts_)
      if (!p.poly.empty()) return false;
    return true;
  }

  void add_term(const GaussExp<R>& gauss, Mono mono, Multivector<R> coeff) {
    coeff.prune();
    if (coeff.is_zero()) return;
    for (auto& part : parts_) {
      if (part.gauss == gauss) {
        auto it = part.poly.find(mono);
        if (it == part.poly.end()) {
          part.poly.emplace(mono, std::move(coeff));
        } else {
          it->second += coeff;
          it->second.prune();
          if (it->second.is_zero()) part.poly.erase(it);
        }
        return;
      }
    }
    Part p;
    p.gauss = gauss;
    p.poly.emplace(mono, std::move(coeff));
    parts_.push_back(std::move(p));
  }

  void normalize() {
    for (auto& part : parts_) {
      for (auto it = part.poly.begin(); it != part.poly.end();) {
        it->second.prune();
        it = it->second.is_zero() ? part.poly.erase(it) : std::next(it);
      }
    }
    parts_.erase(std::remove_if(parts_.begin(), parts_.end(),
                                [](const Part& p) { return p.poly.empty(); }),
                 parts_.end());
    std::sort(parts_.begin(), parts_.end(),
              [](const Part& a, const Part& b) { return compare(a.gauss, b.gauss) < 0; });
  }

  PhaseFunction operator-() const {
    PhaseFunction out(syms_, gdim_);
    for (const auto& part : parts_)
      for (const auto& [m, v] : part.poly) out.add_term(part.gauss, m, -v);
    return out;
  }
  PhaseFunction& operator+=(const PhaseFunction& o) {
    check_compatible(o);
    for (const auto& part : o.parts_)
      for (const auto& [m, v] : part.poly) add_term(part.gauss, m, v);
    return *this;
  }
  PhaseFunction& operator-=(const PhaseFunction& o) { return *this += -o; }
  friend PhaseFunction operator+(PhaseFunction a, const PhaseFunction& b) { return a += b; }
  friend PhaseFunction operator-(PhaseFunction a, const PhaseFunction& b) { return a -= b; }
  friend PhaseFunction operator*(const R& s, const PhaseFunction& f) {
    PhaseFunction out(f.syms_, f.gdim_);
    for (const auto& part : f.parts_)
      for (const auto& [m, v] : part.poly) out.add_term(part.gauss, m, s * v);
    return out;
  }
  friend PhaseFunction operator*(const PhaseFunction& f, const R& s) { return s * f; }

  // Plain (pointwise) product; Grassmann coefficients multiply by wedge.
  PhaseFunction pointwise_product(const PhaseFunction& o) const {
    check_compatible(o);
    PhaseFunction out(syms_, gdim_);
    for (const auto& pa : parts_)
      for (const auto& pb : o.parts_) {
        GaussExp<R> gauss = pa.gauss + pb.gauss;
        for (const auto& [ma, va] : pa.poly)
          for (const auto& [mb, vb] : pb.poly) out.add_term(gauss, ma * mb, va * vb);
      }
    out.normalize();
    return out;
  }

  PhaseFunction pow_pointwise(int n) const {
    PhaseFunction out = unit(syms_, gdim_);
    for (int k = 0; k < n; ++k) out = out.pointwise_product(*this);
    return out;
  }

  // Partial derivative with respect to symbol i (chain rule through the
  // Gaussian exponents).
  PhaseFunction derivative(int i) const {
    PhaseFunction out(syms_, gdim_);
    for (const auto& part : parts_) {
      const auto [grad, gconst] = part.gauss.gradient(i);
      for (const auto& [m, v] : part.poly) {
        if (m.exp(i) > 0)
          out.add_term(part.gauss, m.dec(i), Traits::from_rational(m.exp(i)) * v);
        for (const auto& [k, coeff] : grad) out.add_term(part.gauss, m.inc(k), coeff * v);
        if (!Traits::is_zero(gconst)) out.add_term(part.gauss, m, gconst * v);
      }
    }
    out.normalize();
    return out;
  }

  // Substitute symbol i by a constant value.
  PhaseFunction bind_symbol(int i, const R& value) const {
    PhaseFunction out(syms_, gdim_);
    for (const auto& part : parts_) {
      GaussExp<R> gauss;
      gauss.c0 = part.gauss.c0;
      R lin_extra = Traits::zero();
      for (const auto& [k, v] : part.gauss.quad) {
        const auto [p, q] = k;
        if (p == i && q == i)
          gauss.c0 += v * value * value;
        else if (p == i)
          gauss.add_lin(q, v * value);
        else if (q == i)
          gauss.add_lin(p, v * value);
        else
          gauss.add_quad(p, q, v);
      }
      for (const auto& [k, v] : part.gauss.lin) {
        if (k == i)
          gauss.c0 += v * value;
        else
          gauss.add_lin(k, v);
      }
      (void)lin_extra;
      for (const auto& [m, v] : part.poly) {
        R factor = Traits::one();
        for (int e = 0; e < m.exp(i); ++e) factor = factor * value;
        Mono reduced = m;
        reduced.bits &= ~(std::uint64_t(0xFF) << (8 * i));
        out.add_term(gauss, reduced, factor * v);
      }
    }
    out.normalize();
    return out;
  }

  // Substitute every old symbol by a linear combination of new symbols:
  // x_i -> sum_j T[i][j] y_j.
  PhaseFunction substitute_linear(const std::vector<std::vector<R>>& T,
                                  const SymbolSet& new_syms) const {
    PhaseFunction out(new_syms, gdim_);
    const int n_old = syms_.size();
    // images of old symbols as polynomials over the new symbols
    auto image_poly = [&](int i) {
      std::map<Mono, R> poly;
      for (int j = 0; j < new_syms.size(); ++j)
        if (!Traits::is_zero(T[i][j])) poly[Mono::var(j)] = T[i][j];
      return poly;
    };
    std::vector<std::map<Mono, R>> images;
    images.reserve(n_old);
    for (int i = 0; i < n_old; ++i) images.push_back(image_poly(i));

    auto poly_mul = [](const std::map<Mono, R>& a, const std::map<Mono, R>& b) {
      std::map<Mono, R> out_poly;
      for (const auto& [ma, va] : a)
        for (const auto& [mb, vb] : b) {
          auto key = ma * mb;
          auto it = out_poly.find(key);
          if (it == out_poly.end())
            out_poly.emplace(key, va * vb);
          else
            it->second += va * vb;
        }
      return out_poly;
    };

    for (const auto& part : parts_) {
      GaussExp<R> gauss;
      gauss.c0 = part.gauss.c0;
      for (const auto& [k, v] : part.gauss.quad) {
        auto prod = poly_mul(images[k.first], images[k.second]);
        for (const auto& [m, coeff] : prod) {
          // monomials here are products of two new symbols
          int i1 = -1, i2 = -1;
          for (int s = 0; s < new_syms.size(); ++s)
            for (int e = 0; e < m.exp(s); ++e) (i1 < 0 ? i1 : i2) = s;
          gauss.add_quad(i1, i2, v * coeff);
        }
      }
      for (const auto& [k, v] : part.gauss.lin)
        for (const auto& [m, coeff] : images[k])
          for (int s = 0; s < new_syms.size(); ++s)
            if (m.exp(s) > 0) gauss.add_lin(s, v * coeff);
      for (const auto& [m, v] : part.poly) {
        std::map<Mono, R> acc{{Mono::one(), Traits::one()}};
        for (int i = 0; i < n_old; ++i)
          for (int e = 0; e < m.exp(i); ++e) acc = poly_mul(acc, images[i]);
        for (const auto& [mm, coeff] : acc) out.add_term(gauss, mm, coeff * v);
      }
    }
    out.normalize();
    return out;
  }

  // Multiply by a constant Grassmann factor from the right (wedge).
  friend PhaseFunction operator*(const PhaseFunction& f, const Multivector<R>& u) {
    PhaseFunction out(f.syms_, f.gdim_);
    for (const auto& part : f.parts_)
      for (const auto& [m, v] : part.poly) out.add_term(part.gauss, m, v * u);
    out.normalize();
    return out;
  }
  friend PhaseFunction operator*(const Multivector<R>& u, const PhaseFunction& f) {
    PhaseFunction out(f.syms_, f.gdim_);
    for (const auto& part : f.parts_)
      for (const auto& [m, v] : part.poly) out.add_term(part.gauss, m, u * v);
    out.normalize();
    return out;
  }

  PhaseFunction<std::complex<double>> to_complex(double hbar_value, double c_value) const
    requires Traits::exact
  {
    PhaseFunction<std::complex<double>> out(syms_, gdim_);
    for (const auto& part : parts_) {
      GaussExp<std::complex<double>> gauss;
      for (const auto& [k, v] : part.gauss.quad)
        gauss.add_quad(k.first, k.second, v.to_complex(hbar_value, c_value));
      for (const auto& [k, v] : part.gauss.lin) gauss.add_lin(k, v.to_complex(hbar_value, c_value));
      gauss.c0 = part.gauss.c0.to_complex(hbar_value, c_value);
      for (const auto& [m, v] : part.poly)
        out.add_term(gauss, m, v.to_complex(hbar_value, c_value));
    }
    out.normalize();
    return out;
  }

  double norm_inf(double hbar_value = 1.0, double c_value = 1.0) const {
    double mx = 0.0;
    for (const auto& part : parts_)
      for (const auto& [m, v] : part.poly) mx = std::max(mx, v.norm_inf(hbar_value, c_value));
    return mx;
  }

  bool equals(const PhaseFunction& o) const {
    PhaseFunction diff = *this - o;
    diff.normalize();
    return diff.is_zero();
  }

  int max_total_degree() const {
    int deg = 0;
    for (const auto& part : parts_)
      for (const auto& [m, v] : part.poly) deg = std::max(deg, m.total_degree());
    return deg;
  }

  // Map every scalar coefficient (inside Grassmann coefficients; Gaussian
  // exponents stay untouched) through fn; used for c-power truncation.
  template <class Fn>
  PhaseFunction map_coefficients(Fn&& fn) const {
    PhaseFunction out(syms_, gdim_);
    for (const auto& part : parts_)
      for (const auto& [m, v] : part.poly) {
        Multivector<R> mapped(v.dim());
        for (const auto& [mask, coeff] : v.terms()) mapped.add_term(mask, fn(coeff));
        out.add_term(part.gauss, m, std::move(mapped));
      }
    out.normalize();
    return out;
  }

  // Map every Grassmann coefficient through fn (Multivector -> Multivector).
  template <class Fn>
  PhaseFunction map_grassmann(Fn&& fn) const {
    PhaseFunction out(syms_, gdim_);
    for (const auto& part : parts_)
      for (const auto& [m, v] : part.poly) out.add_term(part.gauss, m, fn(v));
    out.normalize();
    return out;
  }

 private:
  void check_compatible(const PhaseFunction& o) const {
    if (!(syms_ == o.syms_) || gdim_ != o.gdim_)
      throw std::invalid_argument("phase function symbol mismatch");
  }

  SymbolSet syms_;
  int gdim_ = 0;
  std::vector<Part> parts_;
};

using PhaseFunctionX = PhaseFunction<ExactScalar>;
using PhaseFunctionC = PhaseFunction<std::complex<double>>;

// Star-product data: bosonic pairing table kappa (coefficient of <-d_i ->d_j)
// and the bilinear form driving the fermionic factor product.
template <class R>
struct PhaseStarSpec {
  SymbolSet syms;
  int gdim = 0;
  std::vector<R> kappa;  // syms.size() x syms.size(), row-major
  BilinearForm<R> ferm;  // dimension gdim

  const R& pairing(int i, int j) const { return kappa[static_cast<std::size_t>(i) * syms.size() + j]; }
  void set_pairing(int i, int j, R v) { kappa[static_cast<std::size_t>(i) * syms.size() + j] = std::move(v); }

  static PhaseStarSpec make(SymbolSet syms, int gdim, BilinearForm<R> ferm) {
    PhaseStarSpec out;
    out.syms = std::move(syms);
    out.gdim = gdim;
    out.kappa.assign(static_cast<std::size_t>(out.syms.size()) * out.syms.size(),
                     scalar_traits<R>::zero());
    out.ferm = std::move(ferm);
    return out;
  }

  PhaseStarSpec<std::complex<double>> to_complex(double hbar_value, double c_value) const
    requires scalar_traits<R>::exact
  {
    auto out = PhaseStarSpec<std::complex<double>>::make(syms, gdim, ferm.to_complex(hbar_value, c_value));
    for (int i = 0; i < syms.size(); ++i)
      for (int j = 0; j < syms.size(); ++j)
        out.set_pairing(i, j, pairing(i, j).to_complex(hbar_value, c_value));
    return out;
  }
};

namespace detail {

// d/dx_sym of a polynomial times exp(gauss), as a polynomial (same Gaussian).
template <class R>
typename PhaseFunction<R>::Poly derive_poly(const typename PhaseFunction<R>::Poly& poly,
                                            const GaussExp<R>& gauss, int sym) {
  using Traits = scalar_traits<R>;
  typename PhaseFunction<R>::Poly out;
  auto deposit = [&out](Mono m, Multivector<R> v) {
    auto it = out.find(m);
    if (it == out.end()) {
      out.emplace(m, std::move(v));
    } else {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  const auto [grad, gconst] = gauss.gradient(sym);
  for (const auto& [m, v] : poly) {
    if (m.exp(sym) > 0) deposit(m.dec(sym), Traits::from_rational(m.exp(sym)) * v);
    for (const auto& [k, coeff] : grad) deposit(m.inc(k), coeff * v);
    if (!Traits::is_zero(gconst)) deposit(m, gconst * v);
  }
  return out;
}

template <class R>
std::vector<int> part_support(const typename PhaseFunction<R>::Part& part) {
  std::vector<bool> used(8, false);
  for (const auto& [m, v] : part.poly)
    for (int i = 0; i < 8; ++i)
      if (m.exp(i) > 0) used[i] = true;
  for (const auto& [k, v] : part.gauss.quad) used[k.first] = used[k.second] = true;
  for (const auto& [k, v] : part.gauss.lin) used[k] = true;
  std::vector<int> out;
  for (int i = 0; i < 8; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

}  // namespace detail

// Star product of the configured family. Class restriction: for every pair of
// parts, either one side carries no Gaussian factor (the bidifferential series
// then terminates) or the two supports are unpaired by kappa (pointwise).
template <class R>
PhaseFunction<R> star_product(const PhaseFunction<R>& F, const PhaseFunction<R>& G,
                              const PhaseStarSpec<R>& spec) {
  using Traits = scalar_traits<R>;
  if (!(F.symbols() == spec.syms) || !(G.symbols() == spec.syms))
    throw std::invalid_argument("phase function symbol mismatch with product spec");
  PhaseFunction<R> out(spec.syms, spec.gdim);
  const int nsym = spec.syms.size();

  for (const auto& pa : F.parts()) {
    for (const auto& pb : G.parts()) {
      const bool ga = !pa.gauss.is_zero(), gb = !pb.gauss.is_zero();
      if (ga && gb) {
        const auto sa = detail::part_support<R>(pa);
        const auto sb = detail::part_support<R>(pb);
        bool coupled = false;
        for (int i : sa)
          for (int j : sb)
            if (!Traits::is_zero(spec.pairing(i, j)) || !Traits::is_zero(spec.pairing(j, i)))
              coupled = true;
        if (coupled)
          throw std::domain_error(
              "unsupported operand class: both factors Gaussian with paired symbols");
        GaussExp<R> gauss = pa.gauss + pb.gauss;
        for (const auto& [ma, va] : pa.poly)
          for (const auto& [mb, vb] : pb.poly)
            out.add_term(gauss, ma * mb, circle_product(va, vb, spec.ferm));
        continue;
      }
      GaussExp<R> gauss = pa.gauss + pb.gauss;
      // nonzero kernel pairs
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < nsym; ++i)
        for (int j = 0; j < nsym; ++j)
          if (!Traits::is_zero(spec.pairing(i, j))) pairs.emplace_back(i, j);
      // exp(sum kappa <-d ->d) expanded over multi-indices of the kernel
      // pairs: both sides are differentiated as whole polynomials, and a
      // leaf contributes (prod kappa^m/m!) (D^row L)(D^col R).
      auto accumulate = [&](const typename PhaseFunction<R>::Poly& L,
                            const typename PhaseFunction<R>::Poly& Rp, const R& coeff) {
        for (const auto& [ma, va] : L)
          for (const auto& [mb, vb] : Rp) {
            Multivector<R> w = circle_product(va, vb, spec.ferm);
            if (w.is_zero()) continue;
            out.add_term(gauss, ma * mb, coeff * w);
          }
      };
      auto recurse = [&](auto&& self, std::size_t k, const typename PhaseFunction<R>::Poly& L,
                         const typename PhaseFunction<R>::Poly& Rp, const R& coeff) -> void {
        if (L.empty() || Rp.empty()) return;
        if (k == pairs.size()) {
          accumulate(L, Rp, coeff);
          return;
        }
        const auto [i, j] = pairs[k];
        const R& kap = spec.pairing(i, j);
        typename PhaseFunction<R>::Poly curL = L, curR = Rp;
        R factor = coeff;
        for (int count = 0;; ++count) {
          if (count > 0) factor = factor * kap * Traits::from_rational(1, count);
          self(self, k + 1, curL, curR, factor);
          curL = detail::derive_poly<R>(curL, pa.gauss, i);
          if (curL.empty()) break;
          curR = detail::derive_poly<R>(curR, pb.gauss, j);
          if (curR.empty()) break;
        }
      };
      recurse(recurse, 0, pa.poly, pb.poly, Traits::one());
    }
  }
  out.normalize();
  return out;
}

template <class R>
PhaseFunction<R> star_commutator(const PhaseFunction<R>& a, const PhaseFunction<R>& b,
                                 const PhaseStarSpec<R>& spec) {
  return star_product(a, b, spec) - star_product(b, a, spec);
}

template <class R>
PhaseFunction<R> star_anticommutator(const PhaseFunction<R>& a, const PhaseFunction<R>& b,
                                     const PhaseStarSpec<R>& spec) {
  return star_product(a, b, spec) + star_product(b, a, spec);
}

template <class R>
PhaseFunction<R> star_power(const PhaseFunction<R>& a, int n, const PhaseStarSpec<R>& spec) {
  PhaseFunction<R> out = PhaseFunction<R>::unit(spec.syms, spec.gdim);
  for (int k = 0; k < n; ++k) out = star_product(out, a, spec);
  return out;
}

// Gaussian functional (1/2 pi hbar)^{n/2} integral over all phase symbols of
// poly * exp(gauss); centered Gaussians only, float backend.
inline MultivectorC gaussian_moment(const PhaseFunctionC& f, double hbar) {
  const int n = f.symbols().size();
  if (n % 2 != 0) throw std::invalid_argument("gaussian moment needs an even symbol count");
  MultivectorC acc(f.grassmann_dim());
  for (const auto& part : f.parts()) {
    if (!part.gauss.lin.empty())
      throw std::domain_error("gaussian moment supports centered Gaussians only");
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [k, v] : part.gauss.quad) {
      const auto [p, q] = k;
      if (p == q) {
        A(p, p) -= 2.0 * v;
      } else {
        A(p, q) -= v;
        A(q, p) -= v;
      }
    }
    Eigen::MatrixXd Are = A.real();
    Eigen::LLT<Eigen::MatrixXd> llt(Are);
    if (llt.info() != Eigen::Success)
      throw std::domain_error("non-decaying Gaussian in moment integral");
    const std::complex<double> det = A.determinant();
    Eigen::MatrixXcd Sigma = A.inverse();
    const std::complex<double> base =
        std::exp(part.gauss.c0) / (std::sqrt(det) * std::pow(hbar, n / 2.0));
    // Isserlis recursion with memoization over exponent vectors
    std::map<Mono, std::complex<double>> memo{{Mono::one(), {1.0, 0.0}}};
    auto moment = [&](auto&& self, Mono m) -> std::complex<double> {
      auto it = memo.find(m);
      if (it != memo.end()) return it->second;
      int i = -1;
      for (int s = 0; s < n; ++s)
        if (m.exp(s) > 0) {
          i = s;
          break;
        }
      Mono rest = m.dec(i);
      std::complex<double> val{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        if (rest.exp(k) == 0) continue;
        val += Sigma(i, k) * static_cast<double>(rest.exp(k)) * self(self, rest.dec(k));
      }
      memo.emplace(m, val);
      return val;
    };
    for (const auto& [m, v] : part.poly) {
      if (m.total_degree() % 2 != 0) continue;  // odd moments vanish
      acc += v * (moment(moment, m) * base);
    }
  }
  acc.prune();
  return acc;
}

// Integral over one holomorphic pair with measure inherited from
// (1/2 pi hbar) dq dp: int d^2a a^m abar^n e^{-c a abar} = delta_{mn} m! / (hbar c^{m+1}).
template <class R>
Multivector<R> holomorphic_moment(const PhaseFunction<R>& f, int a_idx, int abar_idx,
                                  const R& hbar) {
  using Traits = scalar_traits<R>;
  Multivector<R> acc(f.grassmann_dim());
  const auto key = a_idx < abar_idx ? std::make_pair(a_idx, abar_idx)
                                    : std::make_pair(abar_idx, a_idx);
  for (const auto& part : f.parts()) {
    if (!part.gauss.lin.empty() || part.gauss.quad.size() != 1 ||
        part.gauss.quad.begin()->first != key || !Traits::is_zero(part.gauss.c0))
      throw std::domain_error("holomorphic moment needs exponent of the form -c*a*abar");
    const R decay = -part.gauss.quad.begin()->second;
    double decay_re;
    if constexpr (Traits::exact)
      decay_re = decay.to_complex(1.0, 1.0).real();
    else
      decay_re = decay.real();
    if (!(decay_re > 0)) throw std::domain_error("non-decaying Gaussian in holomorphic moment");
    for (const auto& [m, v] : part.poly) {
      const int pa = m.exp(a_idx), pb = m.exp(abar_idx);
      bool other = false;
      for (int s = 0; s < 8; ++s)
        if (s != a_idx && s != abar_idx && m.exp(s) > 0) other = true;
      if (other) throw std::domain_error("holomorphic moment over unexpected symbols");
      if (pa != pb) continue;  // phase integral kills unbalanced powers
      long fact = 1;
      for (int k = 2; k <= pa; ++k) fact *= k;
      R weight = Traits::from_rational(fact) * Traits::inverse(hbar);
      R cinv = Traits::inverse(decay);
      for (int k = 0; k <= pa; ++k) weight = weight * cinv;
      acc += v * weight;
    }
  }
  acc.prune();
  return acc;
}

}  // namespace starq
