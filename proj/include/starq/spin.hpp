#pragma once

#include <array>

#include "starq/star_exp.hpp"

namespace starq {

// sigma^i = (2 / i hbar) theta_j theta_k, (i j k) cyclic, generators shifted
// by base (the second triple of a six-generator algebra uses base = 3).
inline MultivectorX sigma_mv(int d, int i, int base = 0) {
  if (i < 1 || i > 3) throw std::out_of_range("sigma index must be 1..3");
  const int j = i % 3 + 1, k = j % 3 + 1;
  const ExactScalar front = ExactScalar(2) / (ExactScalar::i() * ExactScalar::hbar());
  return front * (MultivectorX::generator(d, base + j) * MultivectorX::generator(d, base + k));
}

// S_i = (hbar/2) sigma^i
inline MultivectorX spin_mv(int d, int i, int base = 0) {
  return (ExactScalar::rational(1, 2) * ExactScalar::hbar()) * sigma_mv(d, i, base);
}

// Fermionic oscillator H = -i w theta1 theta2 in a three-dimensional
// Grassmann space with the Pauli product.
struct FermionicOscillator {
  ExactScalar omega;
  int d = 3;

  explicit FermionicOscillator(ExactScalar w, int dim = 3) : omega(std::move(w)), d(dim) {}

  BilinearFormX form() const { return BilinearFormX::pauli(d); }
  MultivectorX hamiltonian() const {
    return (-ExactScalar::i() * omega) *
           (MultivectorX::generator(d, 1) * MultivectorX::generator(d, 2));
  }
  // s = +1 or -1 for spin projection +-1/2
  MultivectorX projector(int s) const {
    MultivectorX half = MultivectorX::scalar(d, ExactScalar::rational(1, 2));
    return half + ExactScalar::rational(s, 2) * sigma_mv(d, 3);
  }
  ExactScalar energy(int s) const {
    return ExactScalar::rational(s, 2) * ExactScalar::hbar() * omega;
  }
};

// Expectation values (<S1>, <S2>, <S3>, <S^2>) in a given state via
// Tr(pi * .), d = 3 Pauli product.
inline std::array<ExactScalar, 4> spin_expectations(const MultivectorX& state) {
  const int d = state.dim();
  const BilinearFormX P = BilinearFormX::pauli(d);
  const ExactScalar hbar = ExactScalar::hbar();
  std::array<ExactScalar, 4> out;
  for (int i = 1; i <= 3; ++i)
    out[i - 1] = circle_product(state, spin_mv(d, i), P).trace(hbar);
  MultivectorX s2(d);
  for (int i = 1; i <= 3; ++i) s2 += circle_product(spin_mv(d, i), spin_mv(d, i), P);
  out[3] = circle_product(state, s2, P).trace(hbar);
  return out;
}

// sigma^i(t) = Exp(-Ht) * sigma^i * Exp(Ht) as a Laurent polynomial in the
// phase w = e^{-i freq t / hbar} with freq = hbar w_osc / 2.
inline PhasePolynomial<ExactScalar> evolve_sigma(int i, const ExactScalar& omega, int d = 3) {
  FermionicOscillator osc(omega, d);
  auto conj = conjugate_by_exp(osc.hamiltonian(), sigma_mv(d, i), osc.form(), -1, +1);
  if (!conj) throw std::logic_error("fermionic oscillator evolution has no spectral form");
  return *conj;
}

// Rodrigues rotation of the generator vector:
// R theta = n (n.theta) + cos (theta - n (n.theta)) - sin (n x theta).
template <class R>
std::array<Multivector<R>, 3> rodrigues_rotate(const R& cos_phi, const R& sin_phi,
                                               const std::array<R, 3>& axis, int d) {
  using Traits = scalar_traits<R>;
  std::array<Multivector<R>, 3> theta{Multivector<R>::generator(d, 1),
                                      Multivector<R>::generator(d, 2),
                                      Multivector<R>::generator(d, 3)};
  Multivector<R> ndot(d);
  for (int k = 0; k < 3; ++k) ndot += axis[k] * theta[k];
  std::array<Multivector<R>, 3> out{Multivector<R>(d), Multivector<R>(d), Multivector<R>(d)};
  for (int k = 0; k < 3; ++k) {
    Multivector<R> parallel = axis[k] * ndot;
    Multivector<R> cross(d);
    const int a = (k + 1) % 3, b = (k + 2) % 3;
    cross += axis[a] * theta[b] - axis[b] * theta[a];
    out[k] = parallel + cos_phi * (theta[k] - parallel) - sin_phi * cross;
  }
  return out;
}

// Exp(phi n.S) * u * Exp(-phi n.S) as a Laurent polynomial in
// w = e^{-i phi/2}; the axis must be an exact unit vector.
inline PhasePolynomial<ExactScalar> rotate_conjugation(const std::array<ExactScalar, 3>& axis,
                                                       const MultivectorX& u) {
  ExactScalar norm2;
  for (const auto& c : axis) norm2 += c * c;
  if (!(norm2 == ExactScalar::one())) throw std::invalid_argument("rotation axis must be a unit vector");
  const int d = u.dim();
  MultivectorX ns(d);
  for (int k = 0; k < 3; ++k) ns += axis[k] * spin_mv(d, k + 1);
  // Exp(phi n.S) has frequency sqrt((n.S)^2)/... ; conjugation signs (+,-)
  auto conj = conjugate_by_exp(ns, u, BilinearFormX::pauli(d), +1, -1);
  if (!conj) throw std::logic_error("rotation generator has no spectral form");
  return *conj;
}

// The rotation star exponential itself: Exp(phi n.S) = cos(phi/2) - i (n.sigma) sin(phi/2),
// returned through its spectral data.
inline SpectralExp<ExactScalar> rotation_exponential(const std::array<ExactScalar, 3>& axis,
                                                     int d = 3) {
  ExactScalar norm2;
  for (const auto& c : axis) norm2 += c * c;
  if (!(norm2 == ExactScalar::one())) throw std::invalid_argument("rotation axis must be a unit vector");
  MultivectorX ns(d);
  for (int k = 0; k < 3; ++k) ns += axis[k] * spin_mv(d, k + 1);
  auto spectral = star_exponential_spectral(ns, BilinearFormX::pauli(d));
  if (!spectral) throw std::logic_error("rotation generator has no spectral form");
  return *spectral;
}

}  // namespace starq
