#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace starq {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

// Returns the exact square root of a nonnegative rational, if it is one.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

// Element of Q(i): re + im*i.
struct GaussianRational {
  Rational re{0}, im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(Rational r) : re(std::move(r)) {}
  explicit GaussianRational(long n) : re(n) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, Rational(-im)}; }

  GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  GaussianRational inverse() const {
    Rational n = re * re + im * im;
    if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
    return {Rational(re / n), Rational(-im / n)};
  }
  bool operator==(const GaussianRational& o) const { return cmp(re, o.re) == 0 && cmp(im, o.im) == 0; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline int compare(const GaussianRational& a, const GaussianRational& b) {
  if (int c = cmp(a.re, b.re)) return c;
  return cmp(a.im, b.im);
}

// Element of the field Q(i)[sqrt2]: x + y*sqrt(2) with Gaussian-rational x, y.
// A field: sqrt(2) is not in Q(i), so x^2 - 2 y^2 never vanishes for (x,y) != 0.
struct Coeff {
  GaussianRational x, y;

  Coeff() = default;
  Coeff(GaussianRational plain, GaussianRational root2) : x(std::move(plain)), y(std::move(root2)) {}
  explicit Coeff(GaussianRational plain) : x(std::move(plain)) {}
  explicit Coeff(Rational r) : x(GaussianRational(std::move(r))) {}
  explicit Coeff(long n) : x(GaussianRational(n)) {}

  static Coeff i() { return Coeff(GaussianRational(Rational(0), Rational(1))); }
  static Coeff sqrt2() { return Coeff(GaussianRational(Rational(0)), GaussianRational(Rational(1))); }

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  Coeff conj() const { return {x.conj(), y.conj()}; }

  Coeff operator-() const { return {-x, -y}; }
  Coeff& operator+=(const Coeff& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Coeff& operator-=(const Coeff& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    GaussianRational two{Rational(2), Rational(0)};
    return {a.x * b.x + two * (a.y * b.y), a.x * b.y + a.y * b.x};
  }
  Coeff inverse() const {
    if (is_zero()) throw std::domain_error("division by zero coefficient");
    GaussianRational two{Rational(2), Rational(0)};
    GaussianRational norm = x * x - two * (y * y);
    GaussianRational ninv = norm.inverse();
    return {x * ninv, -(y * ninv)};
  }
  bool operator==(const Coeff& o) const { return x == o.x && y == o.y; }
  std::complex<double> to_complex() const {
    constexpr double kSqrt2 = 1.4142135623730950488;
    return x.to_complex() + kSqrt2 * y.to_complex();
  }
};

inline int compare(const Coeff& a, const Coeff& b) {
  if (int c = compare(a.x, b.x)) return c;
  return compare(a.y, b.y);
}

// Exact scalar: finite sum of Coeff * h^k * c^l, where h is the formal square
// root of hbar/2 (h^2 = hbar/2) and c is the formal light-speed symbol.
class ExactScalar {
 public:
  using Key = std::pair<int, int>;  // (h power, c power)
  using TermMap = std::map<Key, Coeff>;

  ExactScalar() = default;
  explicit ExactScalar(long n) {
    if (n != 0) terms_[{0, 0}] = Coeff(n);
  }
  explicit ExactScalar(Rational r) {
    if (sgn(r) != 0) terms_[{0, 0}] = Coeff(std::move(r));
  }
  explicit ExactScalar(Coeff c) {
    if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
  }

  static ExactScalar zero() { return ExactScalar(); }
  static ExactScalar one() { return ExactScalar(1); }
  static ExactScalar rational(long num, long den = 1) { return ExactScalar(make_rational(num, den)); }
  static ExactScalar i() { return ExactScalar(Coeff::i()); }
  static ExactScalar sqrt2() { return ExactScalar(Coeff::sqrt2()); }
  static ExactScalar monomial(Coeff coeff, int hpow, int cpow) {
    ExactScalar s;
    if (!coeff.is_zero()) s.terms_[{hpow, cpow}] = std::move(coeff);
    return s;
  }
  static ExactScalar h(int k = 1) { return monomial(Coeff(1L), k, 0); }
  static ExactScalar c(int l = 1) { return monomial(Coeff(1L), 0, l); }
  // hbar = 2 h^2
  static ExactScalar hbar(int k = 1) { return pow_int(monomial(Coeff(2L), 2, 0), k); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  bool is_rational() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& [key, c] = *terms_.begin();
    return key == Key{0, 0} && c.y.is_zero() && c.x.is_real();
  }
  Rational rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("scalar is not a plain rational");
    return terms_.begin()->second.x.re;
  }

  ExactScalar operator-() const {
    ExactScalar out;
    for (const auto& [k, v] : terms_) out.terms_[k] = -v;
    return out;
  }
  ExactScalar& operator+=(const ExactScalar& o) {
    for (const auto& [k, v] : o.terms_) {
      auto it = terms_.find(k);
      if (it == terms_.end()) {
        terms_[k] = v;
      } else {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) { return *this += -o; }
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar out;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) {
        Key k{ka.first + kb.first, ka.second + kb.second};
        auto it = out.terms_.find(k);
        if (it == out.terms_.end()) {
          Coeff prod = va * vb;
          if (!prod.is_zero()) out.terms_[k] = std::move(prod);
        } else {
          it->second += va * vb;
          if (it->second.is_zero()) out.terms_.erase(it);
        }
      }
    return out;
  }

  // Inverse exists in the ring only for single-term scalars.
  ExactScalar inverse() const {
    if (terms_.size() != 1)
      throw std::domain_error("exact scalar inverse requires a single-term scalar");
    const auto& [key, coeff] = *terms_.begin();
    return monomial(coeff.inverse(), -key.first, -key.second);
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

  ExactScalar conj() const {
    ExactScalar out;
    for (const auto& [k, v] : terms_) out.terms_[k] = v.conj();
    return out;
  }

  bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }

  static ExactScalar pow_int(const ExactScalar& base, int e) {
    if (e < 0) return pow_int(base.inverse(), -e);
    ExactScalar out = one();
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
  }

  // Principal square root when representable in the ring: even h and c powers,
  // single term, coefficient a real rational r with r = s^2 or r = 2 s^2
  // (negative r handled through a factor of i).
  std::optional<ExactScalar> sqrt() const {
    if (is_zero()) return zero();
    if (terms_.size() != 1) return std::nullopt;
    const auto& [key, coeff] = *terms_.begin();
    if (key.first % 2 != 0 || key.second % 2 != 0) return std::nullopt;
    if (!coeff.y.is_zero() || !coeff.x.is_real()) return std::nullopt;
    Rational r = coeff.x.re;
    bool negative = sgn(r) < 0;
    if (negative) r = -r;
    Coeff root;
    if (auto s = rational_sqrt(r)) {
      root = Coeff(*s);
    } else if (auto s2 = rational_sqrt(Rational(r / 2))) {
      root = Coeff(GaussianRational(Rational(0)), GaussianRational(*s2));
    } else {
      return std::nullopt;
    }
    if (negative) root = root * Coeff::i();
    return monomial(root, key.first / 2, key.second / 2);
  }

  int min_h_degree() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (first || k.first < m) m = k.first;
      first = false;
    }
    return m;
  }

  // Substitute a numeric value for h (value^2 must equal the intended hbar/2).
  ExactScalar bind_h(const Coeff& value) const {
    ExactScalar out;
    for (const auto& [k, v] : terms_) {
      ExactScalar factor = k.first >= 0 ? pow_int(ExactScalar(value), k.first)
                                        : pow_int(ExactScalar(value).inverse(), -k.first);
      out += monomial(v, 0, k.second) * factor;
    }
    return out;
  }

  // Drop all terms with c power below the cutoff (1/c-series truncation).
  ExactScalar drop_c_below(int min_cpow) const {
    ExactScalar out;
    for (const auto& [k, v] : terms_)
      if (k.second >= min_cpow) out.terms_[k] = v;
    return out;
  }
  int min_c_degree() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (first || k.second < m) m = k.second;
      first = false;
    }
    return m;
  }
  int max_c_degree() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (first || k.second > m) m = k.second;
      first = false;
    }
    return m;
  }

  std::complex<double> to_complex(double hbar_value, double c_value) const {
    const double hv = std::sqrt(hbar_value / 2.0);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, v] : terms_)
      acc += v.to_complex() * std::pow(hv, k.first) * std::pow(c_value, k.second);
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << coeff_string(v);
      if (k.first != 0) os << "*h^" << k.first;
      if (k.second != 0) os << "*c^" << k.second;
    }
    return os.str();
  }

 private:
  static std::string gaussian_string(const GaussianRational& g) {
    std::ostringstream os;
    if (sgn(g.im) == 0) {
      os << g.re.get_str();
    } else if (sgn(g.re) == 0) {
      os << g.im.get_str() << "i";
    } else {
      os << "(" << g.re.get_str() << (sgn(g.im) > 0 ? "+" : "") << g.im.get_str() << "i)";
    }
    return os.str();
  }
  static std::string coeff_string(const Coeff& c) {
    std::ostringstream os;
    if (c.y.is_zero()) {
      os << gaussian_string(c.x);
    } else if (c.x.is_zero()) {
      os << gaussian_string(c.y) << "*sqrt2";
    } else {
      os << "(" << gaussian_string(c.x) << " + " << gaussian_string(c.y) << "*sqrt2)";
    }
    return os.str();
  }

  TermMap terms_;
};

inline int compare(const ExactScalar& a, const ExactScalar& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = compare(ia->second, ib->second)) return c;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

}  // namespace starq
