#pragma once

#include "starq/phase.hpp"

namespace starq {

// Exact Laguerre coefficients from the three-term recurrence
// (n+1) L_{n+1}(x) = (2n+1-x) L_n(x) - n L_{n-1}(x).
inline std::vector<Rational> laguerre_coefficients(int n) {
  if (n < 0) throw std::invalid_argument("negative Laguerre index");
  std::vector<Rational> prev{Rational(1)};
  if (n == 0) return prev;
  std::vector<Rational> cur{Rational(1), Rational(-1)};
  for (int k = 1; k < n; ++k) {
    std::vector<Rational> next(static_cast<std::size_t>(k) + 2, Rational(0));
    const Rational inv(1, k + 1);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[j] += Rational(2 * k + 1) * cur[j] * inv;
      next[j + 1] -= cur[j] * inv;
    }
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= Rational(k) * prev[j] * inv;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Apply a univariate polynomial (exact coefficients) to a phase-space argument.
inline PhaseFunctionX apply_polynomial(const std::vector<Rational>& coeffs,
                                       const PhaseFunctionX& arg) {
  PhaseFunctionX out(arg.symbols(), arg.grassmann_dim());
  PhaseFunctionX power = PhaseFunctionX::unit(arg.symbols(), arg.grassmann_dim());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) power = power.pointwise_product(arg);
    out += ExactScalar(coeffs[k]) * power;
  }
  return out;
}

// Wigner function of an oscillator-shaped Hamiltonian:
// pi_n = 2 (-1)^n e^{-2H/hbar w} L_n(4H/hbar w), H passed as a pure
// quadratic polynomial.
inline PhaseFunctionX oscillator_wigner_of(const PhaseFunctionX& hamiltonian,
                                           const ExactScalar& omega, int n) {
  if (n < 0) throw std::invalid_argument("negative oscillator level");
  const ExactScalar inv_hw = (ExactScalar::hbar() * omega).inverse();
  GaussExp<ExactScalar> gauss;
  for (const auto& part : hamiltonian.parts()) {
    if (!part.gauss.is_zero())
      throw std::invalid_argument("oscillator Hamiltonian must be polynomial");
    for (const auto& [m, v] : part.poly) {
      int i1 = -1, i2 = -1;
      for (int s = 0; s < 8; ++s)
        for (int e = 0; e < m.exp(s); ++e) (i1 < 0 ? i1 : i2) = s;
      if (i1 < 0 || i2 < 0) throw std::invalid_argument("oscillator Hamiltonian must be quadratic");
      gauss.add_quad(i1, i2, ExactScalar(-2) * inv_hw * v.scalar_part());
    }
  }
  PhaseFunctionX arg = (ExactScalar(4) * inv_hw) * hamiltonian;
  PhaseFunctionX poly = apply_polynomial(laguerre_coefficients(n), arg);
  const ExactScalar front = n % 2 == 0 ? ExactScalar(2) : ExactScalar(-2);

  PhaseFunctionX out(hamiltonian.symbols(), hamiltonian.grassmann_dim());
  for (const auto& part : poly.parts())
    for (const auto& [m, v] : part.poly) out.add_term(gauss, m, front * v);
  out.normalize();
  return out;
}

// Harmonic oscillator H = p^2/2m + m w^2 q^2 / 2 with the Moyal product.
struct BosonicOscillator {
  ExactScalar mass, omega;
  SymbolSet syms{"q", "p"};
  PhaseStarSpec<ExactScalar> spec;

  BosonicOscillator(ExactScalar m, ExactScalar w) : mass(std::move(m)), omega(std::move(w)) {
    spec = PhaseStarSpec<ExactScalar>::make(syms, 0, BilinearFormX::zero(0));
    const ExactScalar half_i_hbar = ExactScalar::i() * ExactScalar::h(2);  // i hbar / 2
    spec.set_pairing(0, 1, half_i_hbar);
    spec.set_pairing(1, 0, -half_i_hbar);
  }

  PhaseFunctionX hamiltonian() const {
    PhaseFunctionX H(syms, 0);
    H.add_term({}, Mono::var(1, 2), MultivectorX::scalar(0, (ExactScalar(2) * mass).inverse()));
    H.add_term({}, Mono::var(0, 2),
               MultivectorX::scalar(0, ExactScalar::rational(1, 2) * mass * omega * omega));
    return H;
  }
  PhaseFunctionX wigner(int n) const { return oscillator_wigner_of(hamiltonian(), omega, n); }
  ExactScalar energy(int n) const {
    return ExactScalar::hbar() * omega * (ExactScalar(n) + ExactScalar::rational(1, 2));
  }
};

// Charged particle in a constant magnetic field, symmetric gauge, in the
// (q1, q2, ptilde1, ptilde2) coordinates with the transformed Moyal product.
struct LandauSystem {
  ExactScalar mass, omega;  // omega = e B / m c
  SymbolSet syms{"q1", "q2", "tp1", "tp2"};
  PhaseStarSpec<ExactScalar> spec;

  LandauSystem(ExactScalar m, ExactScalar w) : mass(std::move(m)), omega(std::move(w)) {
    if (omega.is_zero()) throw std::invalid_argument("Landau system needs omega != 0");
    spec = PhaseStarSpec<ExactScalar>::make(syms, 0, BilinearFormX::zero(0));
    const ExactScalar half_i_hbar = ExactScalar::i() * ExactScalar::h(2);
    spec.set_pairing(0, 2, half_i_hbar);
    spec.set_pairing(2, 0, -half_i_hbar);
    spec.set_pairing(1, 3, half_i_hbar);
    spec.set_pairing(3, 1, -half_i_hbar);
    const ExactScalar mw = half_i_hbar * mass * omega;
    spec.set_pairing(2, 3, mw);
    spec.set_pairing(3, 2, -mw);
  }

  PhaseFunctionX hamiltonian() const {
    PhaseFunctionX H(syms, 0);
    const ExactScalar inv2m = (ExactScalar(2) * mass).inverse();
    H.add_term({}, Mono::var(2, 2), MultivectorX::scalar(0, inv2m));
    H.add_term({}, Mono::var(3, 2), MultivectorX::scalar(0, inv2m));
    return H;
  }

  // Conserved center coordinates qtilde1 = q1 + tp2/(m w), qtilde2 = q2 - tp1/(m w).
  PhaseFunctionX qtilde(int i) const {
    PhaseFunctionX out(syms, 0);
    const ExactScalar inv_mw = (mass * omega).inverse();
    if (i == 1) {
      out.add_term({}, Mono::var(0), MultivectorX::unit(0));
      out.add_term({}, Mono::var(3), MultivectorX::scalar(0, inv_mw));
    } else if (i == 2) {
      out.add_term({}, Mono::var(1), MultivectorX::unit(0));
      out.add_term({}, Mono::var(2), MultivectorX::scalar(0, -inv_mw));
    } else {
      throw std::invalid_argument("qtilde index must be 1 or 2");
    }
    return out;
  }

  // J = q1 p2 - q2 p1 expressed in the tilde coordinates.
  PhaseFunctionX angular_momentum() const {
    PhaseFunctionX qt1 = qtilde(1), qt2 = qtilde(2);
    PhaseFunctionX rho = qt1.pointwise_product(qt1) + qt2.pointwise_product(qt2);
    return (ExactScalar::rational(1, 2) * mass * omega) * rho - omega.inverse() * hamiltonian();
  }

  // pi_{n l} = pi_l(qtilde) pi_n(ptilde)
  PhaseFunctionX wigner(int n, int l) const {
    PhaseFunctionX pin = oscillator_wigner_of(hamiltonian(), omega, n);
    PhaseFunctionX qt1 = qtilde(1), qt2 = qtilde(2);
    PhaseFunctionX rho = qt1.pointwise_product(qt1) + qt2.pointwise_product(qt2);
    // pi_l = 2 (-1)^l e^{-(m w/hbar) rho} L_l(2 m w rho / hbar), rho quadratic
    PhaseFunctionX half_rho_ham = (ExactScalar::rational(1, 2) * mass * omega * omega) * rho;
    PhaseFunctionX pil = oscillator_wigner_of(half_rho_ham, omega, l);
    return pil.pointwise_product(pin);
  }

  ExactScalar energy(int n) const {
    return ExactScalar::hbar() * omega * (ExactScalar(n) + ExactScalar::rational(1, 2));
  }
  ExactScalar angular_eigenvalue(int n, int l) const {
    return ExactScalar::hbar() * ExactScalar(l - n);
  }
};

// Holomorphic coordinates a, abar with kernel (hbar/2)(d_a d_abar - d_abar d_a);
// H = w abar a.
struct HolomorphicOscillator {
  ExactScalar mass, omega;
  SymbolSet syms{"a", "abar"};
  int gdim = 0;
  PhaseStarSpec<ExactScalar> spec;

  HolomorphicOscillator(ExactScalar m, ExactScalar w, int grassmann_dim = 0,
                        BilinearFormX ferm = BilinearFormX::zero(0))
      : mass(std::move(m)), omega(std::move(w)), gdim(grassmann_dim) {
    spec = PhaseStarSpec<ExactScalar>::make(syms, gdim, std::move(ferm));
    const ExactScalar half_hbar = ExactScalar::h(2);
    spec.set_pairing(0, 1, half_hbar);
    spec.set_pairing(1, 0, -half_hbar);
  }

  PhaseFunctionX hamiltonian() const {
    PhaseFunctionX H(syms, gdim);
    H.add_term({}, Mono::var(0) * Mono::var(1), MultivectorX::scalar(gdim, omega));
    return H;
  }

  // 2 H / (hbar w) = 2 abar a / hbar: same functional form as in (q, p).
  PhaseFunctionX wigner(int n) const {
    PhaseFunctionX H(syms, gdim);
    H.add_term({}, Mono::var(0) * Mono::var(1), MultivectorX::scalar(gdim, omega));
    return oscillator_wigner_of(H, omega, n);
  }
  ExactScalar energy(int n) const {
    return ExactScalar::hbar() * omega * (ExactScalar(n) + ExactScalar::rational(1, 2));
  }
};

}  // namespace starq
