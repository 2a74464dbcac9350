#pragma once

#include <map>
#include <optional>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "starq/contraction.hpp"

namespace starq {

inline std::optional<ExactScalar> scalar_sqrt(const ExactScalar& s) { return s.sqrt(); }
inline std::optional<std::complex<double>> scalar_sqrt(const std::complex<double>& s) {
  return std::sqrt(s);
}

// Closed form of Exp(X t) = sum_n (1/n!) (-i t/hbar)^n X^{n*} when X*X is a
// pure scalar s:
//   s != 0:  Exp(X t) = P+ e^{-i sqrt(s) t/hbar} + P- e^{+i sqrt(s) t/hbar},
//            P+- = (1 +- X/sqrt(s))/2
//   s == 0:  Exp(X t) = 1 - (i t/hbar) X
// The principal square root fixes the branch; a negative s turns the
// trigonometric evolution hyperbolic through an imaginary frequency.
template <class R>
struct SpectralExp {
  bool nilpotent = false;
  R freq{};                // sqrt(s)
  Multivector<R> plus, minus;  // spectral projectors (s != 0)
  Multivector<R> lin;          // X itself (s == 0)

  // w = e^{-i freq t / hbar}
  Multivector<R> eval_phase(const R& w) const {
    if (nilpotent) throw std::logic_error("nilpotent exponential has no phase form");
    return plus * w + minus * scalar_traits<R>::inverse(w);
  }
};

template <class R>
std::optional<SpectralExp<R>> star_exponential_spectral(const Multivector<R>& X,
                                                        const BilinearForm<R>& B) {
  Multivector<R> sq = circle_product(X, X, B);
  if (sq.max_grade() != 0 && !sq.is_zero()) return std::nullopt;
  const R s = sq.scalar_part();
  SpectralExp<R> out;
  if (scalar_traits<R>::is_zero(s)) {
    out.nilpotent = true;
    out.lin = X;
    return out;
  }
  auto root = scalar_sqrt(s);
  if (!root) return std::nullopt;
  out.freq = *root;
  const R inv_root = scalar_traits<R>::inverse(*root);
  const R half = scalar_traits<R>::from_rational(1, 2);
  Multivector<R> unit = Multivector<R>::unit(X.dim());
  out.plus = (unit + X * inv_root) * half;
  out.minus = (unit - X * inv_root) * half;
  return out;
}

// Exp(sl X t) * Y * Exp(sr X t) collected as a Laurent polynomial in
// w = e^{-i freq t / hbar}; exponents live in {-2, 0, 2} scaled by the signs.
template <class R>
struct PhasePolynomial {
  R freq{};
  std::map<int, Multivector<R>> coef;

  Multivector<R> eval_phase(const R& w) const {
    Multivector<R> acc;
    bool first = true;
    for (const auto& [n, mv] : coef) {
      R factor = scalar_traits<R>::one();
      if (n > 0)
        for (int k = 0; k < n; ++k) factor = factor * w;
      else if (n < 0) {
        const R wi = scalar_traits<R>::inverse(w);
        for (int k = 0; k < -n; ++k) factor = factor * wi;
      }
      if (first) {
        acc = mv * factor;
        first = false;
      } else {
        acc += mv * factor;
      }
    }
    return acc;
  }

  // Time derivative: d/dt w^n = (-i n freq / hbar) w^n.
  PhasePolynomial time_derivative(const R& hbar) const {
    PhasePolynomial out;
    out.freq = freq;
    const R minus_i_over_hbar =
        -scalar_traits<R>::from_rational(1) * i_value() * scalar_traits<R>::inverse(hbar);
    for (const auto& [n, mv] : coef) {
      if (n == 0) continue;
      out.coef[n] = mv * (minus_i_over_hbar * freq * scalar_traits<R>::from_rational(n));
    }
    return out;
  }

 private:
  static R i_value() {
    if constexpr (scalar_traits<R>::exact)
      return ExactScalar::i();
    else
      return std::complex<double>(0.0, 1.0);
  }
};

template <class R>
std::optional<PhasePolynomial<R>> conjugate_by_exp(const Multivector<R>& X,
                                                   const Multivector<R>& Y,
                                                   const BilinearForm<R>& B, int sign_left,
                                                   int sign_right) {
  auto spectral = star_exponential_spectral(X, B);
  if (!spectral || spectral->nilpotent) return std::nullopt;
  PhasePolynomial<R> out;
  out.freq = spectral->freq;
  const Multivector<R>* proj[2] = {&spectral->plus, &spectral->minus};
  const int sig[2] = {+1, -1};
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      Multivector<R> term =
          circle_product(circle_product(*proj[j], Y, B), *proj[k], B);
      if (term.is_zero()) continue;
      const int n = sign_left * sig[j] + sign_right * sig[k];
      auto it = out.coef.find(n);
      if (it == out.coef.end())
        out.coef.emplace(n, std::move(term));
      else
        it->second += term;
    }
  for (auto it = out.coef.begin(); it != out.coef.end();) {
    it->second.prune();
    it = it->second.is_zero() ? out.coef.erase(it) : std::next(it);
  }
  return out;
}

// Left star-multiplication matrix of X on the 2^d blade basis.
inline Eigen::MatrixXcd left_star_matrix(const MultivectorC& X, const BilinearFormC& B) {
  const int n = 1 << X.dim();
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    MultivectorC col = circle_product(
        X, MultivectorC::blade(X.dim(), static_cast<std::uint32_t>(m), {1.0, 0.0}), B);
    for (const auto& [mask, v] : col.terms()) L(static_cast<int>(mask), m) = v;
  }
  return L;
}

// Exp(X t) as an element, via Pade scaling-and-squaring on the left
// star-multiplication matrix applied to 1.
inline MultivectorC star_exponential_matrix(const MultivectorC& X, const BilinearFormC& B,
                                            double t, double hbar) {
  const std::complex<double> z(0.0, -t / hbar);
  Eigen::MatrixXcd L = left_star_matrix(X, B);
  Eigen::MatrixXcd E = (z * L).exp();
  MultivectorC out(X.dim());
  const int n = 1 << X.dim();
  for (int m = 0; m < n; ++m) out.add_term(static_cast<std::uint32_t>(m), E(m, 0));
  out.prune();
  return out;
}

// Exp(X t) evaluated at numeric t, preferring the closed form.
inline MultivectorC star_exponential_value(const MultivectorC& X, const BilinearFormC& B, double t,
                                           double hbar) {
  if (auto spectral = star_exponential_spectral(X, B)) {
    if (spectral->nilpotent) {
      return MultivectorC::unit(X.dim()) + X * std::complex<double>(0.0, -t / hbar);
    }
    const std::complex<double> w = std::exp(std::complex<double>(0.0, -t / hbar) * spectral->freq);
    return spectral->eval_phase(w);
  }
  return star_exponential_matrix(X, B, t, hbar);
}

}  // namespace starq
