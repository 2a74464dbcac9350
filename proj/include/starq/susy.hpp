#pragma once

#include "starq/oscillator.hpp"
#include "starq/spin.hpp"

namespace starq {

// Combined Moyal-Pauli star product: Moyal pairs (q_i, p_i) plus the Pauli
// form on gdim Grassmann generators.
inline PhaseStarSpec<ExactScalar> moyal_pauli_spec(int npairs = 3, int gdim = 3) {
  std::vector<std::string> names;
  for (int i = 1; i <= npairs; ++i) names.push_back("q" + std::to_string(i));
  for (int i = 1; i <= npairs; ++i) names.push_back("p" + std::to_string(i));
  auto spec = PhaseStarSpec<ExactScalar>::make(SymbolSet(std::move(names)), gdim,
                                               gdim > 0 ? BilinearFormX::pauli(gdim)
                                                        : BilinearFormX::zero(0));
  const ExactScalar half_i_hbar = ExactScalar::i() * ExactScalar::h(2);
  for (int i = 0; i < npairs; ++i) {
    spec.set_pairing(i, npairs + i, half_i_hbar);
    spec.set_pairing(npairs + i, i, -half_i_hbar);
  }
  return spec;
}

// 1/sqrt(hbar) = (sqrt2/2) h^{-1}
inline ExactScalar inv_sqrt_hbar() {
  return ExactScalar::rational(1, 2) * ExactScalar::sqrt2() * ExactScalar::h(-1);
}

// Supersymmetric oscillator in holomorphic coordinates: bosonic pair (a, abar)
// with the antisymmetric kernel, fermionic pair (f, fbar) with the symmetric
// one; H = omega (abar a + fbar f).
struct SusySystem {
  ExactScalar omega;
  SymbolSet syms{"a", "abar"};
  PhaseStarSpec<ExactScalar> spec;

  explicit SusySystem(ExactScalar w) : omega(std::move(w)) {
    BilinearFormX ferm = BilinearFormX::zero(2);
    ferm.set(0, 1, ExactScalar::h(2));
    ferm.set(1, 0, ExactScalar::h(2));
    spec = PhaseStarSpec<ExactScalar>::make(syms, 2, std::move(ferm));
    const ExactScalar half_hbar = ExactScalar::h(2);
    spec.set_pairing(0, 1, half_hbar);
    spec.set_pairing(1, 0, -half_hbar);
  }

  MultivectorX f() const { return MultivectorX::generator(2, 1); }
  MultivectorX fbar() const { return MultivectorX::generator(2, 2); }
  MultivectorX fbar_f() const { return fbar() * f(); }

  PhaseFunctionX hamiltonian() const {
    PhaseFunctionX H(syms, 2);
    H.add_term({}, Mono::var(0) * Mono::var(1), MultivectorX::scalar(2, omega));
    H.add_term({}, Mono::one(), omega * fbar_f());
    return H;
  }

  // s = +1 or -1: pi_{+-1/2} = 1/2 +- fbar f / hbar
  PhaseFunctionX fermionic_projector(int s) const {
    MultivectorX mv = MultivectorX::scalar(2, ExactScalar::rational(1, 2)) +
                      ExactScalar::rational(s) * ExactScalar::hbar(-1) * fbar_f();
    return PhaseFunctionX::constant(syms, 2, mv);
  }

  PhaseFunctionX bosonic_wigner(int n) const {
    PhaseFunctionX Hb(syms, 2);
    Hb.add_term({}, Mono::var(0) * Mono::var(1), MultivectorX::scalar(2, omega));
    return oscillator_wigner_of(Hb, omega, n);
  }

  PhaseFunctionX state(int s, int n) const {
    return bosonic_wigner(n).pointwise_product(fermionic_projector(s));
  }

  ExactScalar energy(int s, int n) const {
    return ExactScalar::hbar() * omega *
           (ExactScalar(n) + ExactScalar::rational(1, 2) + ExactScalar::rational(s, 2));
  }

  // Q+ = a fbar / sqrt(hbar), Q- = abar f / sqrt(hbar)
  PhaseFunctionX supercharge(int sign) const {
    PhaseFunctionX Q(syms, 2);
    if (sign > 0)
      Q.add_term({}, Mono::var(0), inv_sqrt_hbar() * fbar());
    else
      Q.add_term({}, Mono::var(1), inv_sqrt_hbar() * f());
    return Q;
  }

  // Trace over the fermionic factor followed by the holomorphic Gaussian
  // integral: tr-summand int d^2a Tr(pi_n pi_s * F).
  ExactScalar state_trace(int n, int s, const PhaseFunctionX& F) const {
    PhaseFunctionX G = star_product(state(s, n), F, spec);
    const ExactScalar hbar = ExactScalar::hbar();
    PhaseFunctionX traced = G.map_grassmann(
        [&](const MultivectorX& v) { return MultivectorX::scalar(2, v.trace(hbar)); });
    return holomorphic_moment(traced, 0, 1, hbar).scalar_part();
  }
};

struct WittenLevel {
  int level = 0;
  ExactScalar bracket1, bracket2, contribution;
};

struct WittenReport {
  std::vector<WittenLevel> levels;
  ExactScalar index;
  bool exact_supersymmetry = false;
};

// Fredholm-quadruple index: per energy level E = hbar w k the two bracketed
// traces are accumulated over the states at that level, (n = k, s = -1/2) and
// (n = k-1, s = +1/2); paired levels cancel and the E = 0 level is left.
inline WittenReport witten_index(const SusySystem& sys, int n_trunc) {
  if (n_trunc < 1) throw std::invalid_argument("Witten index needs n_trunc >= 1");
  const ExactScalar hbar = ExactScalar::hbar();
  const ExactScalar inv_hbar = hbar.inverse();

  PhaseFunctionX qp = sys.supercharge(+1), qm = sys.supercharge(-1);
  PhaseFunctionX bracket1_op =
      sys.fermionic_projector(-1) - inv_hbar * star_product(qp, qm, sys.spec);
  PhaseFunctionX bracket2_op =
      sys.fermionic_projector(+1) - inv_hbar * star_product(qm, qp, sys.spec);

  WittenReport out;
  out.index = ExactScalar::zero();
  for (int level = 0; level <= n_trunc; ++level) {
    WittenLevel row;
    row.level = level;
    row.bracket1 = sys.state_trace(level, -1, bracket1_op);
    row.bracket2 = sys.state_trace(level, -1, bracket2_op);
    if (level >= 1) {
      row.bracket1 += sys.state_trace(level - 1, +1, bracket1_op);
      row.bracket2 += sys.state_trace(level - 1, +1, bracket2_op);
    }
    row.contribution = row.bracket1 - row.bracket2;
    out.index += row.contribution;
    out.levels.push_back(std::move(row));
  }
  out.exact_supersymmetry = out.index == ExactScalar::one();
  return out;
}

// Vector potential of a constant magnetic field B3 in the symmetric gauge,
// as phase functions over the Moyal-Pauli symbols.
struct FeynmanTrickReport {
  PhaseFunctionX lhs;       // [(p - (e/c)A).sigma]^{2*}
  PhaseFunctionX rhs;       // (p - (e/c)A)^{2*} - (hbar e/c) sigma.B
  PhaseFunctionX residual;  // lhs - rhs
  PhaseFunctionX interaction;  // -(e hbar / 2mc) sigma.B
  bool pass = false;
};

inline FeynmanTrickReport feynman_trick(const ExactScalar& e_charge, const ExactScalar& b_field,
                                        const ExactScalar& mass, const ExactScalar& c_light) {
  auto spec = moyal_pauli_spec(3, 3);
  const SymbolSet& s = spec.syms;
  auto sym = [&](const std::string& n) { return PhaseFunctionX::symbol(s, 3, n); };
  const ExactScalar e_over_c = e_charge / c_light;
  // A = (B/2)(-q2, q1, 0)
  std::array<PhaseFunctionX, 3> A{
      (ExactScalar::rational(-1, 2) * b_field) * sym("q2"),
      (ExactScalar::rational(1, 2) * b_field) * sym("q1"),
      PhaseFunctionX(s, 3)};
  std::array<PhaseFunctionX, 3> v{sym("p1") - e_over_c * A[0], sym("p2") - e_over_c * A[1],
                                  sym("p3") - e_over_c * A[2]};

  PhaseFunctionX vsigma(s, 3);
  for (int k = 0; k < 3; ++k) vsigma += v[k] * sigma_mv(3, k + 1);

  FeynmanTrickReport out;
  out.lhs = star_product(vsigma, vsigma, spec);
  PhaseFunctionX v2(s, 3);
  for (int k = 0; k < 3; ++k) v2 += star_product(v[k], v[k], spec);
  PhaseFunctionX sigmaB =
      PhaseFunctionX::constant(s, 3, (ExactScalar::hbar() * e_over_c * b_field) * sigma_mv(3, 3));
  out.rhs = v2 - sigmaB;
  out.residual = out.lhs - out.rhs;
  out.interaction = ((ExactScalar(2) * mass).inverse() * -ExactScalar::one()) *
                    PhaseFunctionX::constant(
                        s, 3, (ExactScalar::hbar() * e_over_c * b_field) * sigma_mv(3, 3));
  out.pass = out.residual.is_zero();
  return out;
}

}  // namespace starq
