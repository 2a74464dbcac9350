#pragma once

#include "starq/dirac.hpp"
#include "starq/susy.hpp"

namespace starq {

// Order-tracked 1/c expansion of the Moyal-Pauli-transformed Dirac
// Hamiltonian in static polynomial fields. The light-speed symbol c stays
// formal: the c-grading of the scalar ring is the expansion order, and every
// product is truncated at relative order (1/c)^4 of H/mc^2.
struct FWContext {
  ExactScalar mass, charge;           // rational; c is formal
  PhaseStarSpec<ExactScalar> spec;    // Moyal pairs (q_i, p_i) + Pauli d = 4
  DiracRep rep;                       // the four-generator representation
  int truncation = -4;                // keep c powers >= -4 in H/mc^2

  FWContext(ExactScalar m, ExactScalar e)
      : mass(std::move(m)), charge(std::move(e)), spec(moyal_pauli_spec(3, 4)),
        rep(DiracRep::build(DiracKind::D4)) {}

  PhaseFunctionX constant(const MultivectorX& mv) const {
    return PhaseFunctionX::constant(spec.syms, 4, mv);
  }
  PhaseFunctionX symbol(const std::string& name) const {
    return PhaseFunctionX::symbol(spec.syms, 4, name);
  }

  PhaseFunctionX truncate(const PhaseFunctionX& f) const {
    const int cutoff = truncation;
    return f.map_coefficients([cutoff](const ExactScalar& s) { return s.drop_c_below(cutoff); });
  }
  PhaseFunctionX star(const PhaseFunctionX& a, const PhaseFunctionX& b) const {
    return truncate(star_product(a, b, spec));
  }
  PhaseFunctionX commutator(const PhaseFunctionX& a, const PhaseFunctionX& b) const {
    return truncate(star_commutator(a, b, spec));
  }

  PhaseFunctionX beta_pf() const { return constant(rep.beta); }

  // H = alpha.(c p - e A) + beta m c^2 + e phi, divided by m c^2.
  // A and phi are polynomial functions of q1..q3.
  PhaseFunctionX dirac_hamiltonian_over_mc2(const std::array<PhaseFunctionX, 3>& A,
                                            const PhaseFunctionX& phi) const {
    const ExactScalar c = ExactScalar::c();
    const ExactScalar inv_mc2 = (mass * c * c).inverse();
    PhaseFunctionX H(spec.syms, 4);
    for (int i = 0; i < 3; ++i) {
      PhaseFunctionX v = ExactScalar::c() * symbol("p" + std::to_string(i + 1)) - charge * A[i];
      H += v * rep.alpha[i];
    }
    H += (mass * c * c) * constant(rep.beta);
    H += charge * phi;
    return truncate(inv_mc2 * H);
  }

  // (E, O) with E = (H + b H b)/2 - b and O = (H - b H b)/2, H in mc^2 units.
  std::pair<PhaseFunctionX, PhaseFunctionX> parity_split(const PhaseFunctionX& H) const {
    PhaseFunctionX beta = beta_pf();
    PhaseFunctionX bHb = star(star(beta, H), beta);
    const ExactScalar half = ExactScalar::rational(1, 2);
    PhaseFunctionX even = half * (H + bHb) - beta;
    PhaseFunctionX odd = half * (H - bHb);
    even.normalize();
    odd.normalize();
    return {even, odd};
  }

  // One transformation step H' = U * H * U^{-1} with
  // U = sum_n (1/n!) (beta * O / 2)^{n*}, truncated at the working order.
  PhaseFunctionX fw_step(const PhaseFunctionX& H) const {
    auto [even, odd] = parity_split(H);
    PhaseFunctionX S = star(ExactScalar::rational(1, 2) * beta_pf(), odd);
    PhaseFunctionX U = PhaseFunctionX::unit(spec.syms, 4);
    PhaseFunctionX Uinv = U;
    PhaseFunctionX powP = U, powM = U;
    long factorial = 1;
    for (int n = 1; n <= 4; ++n) {
      factorial *= n;
      powP = star(powP, S);
      powM = star(powM, -S);
      const ExactScalar inv_fact = ExactScalar::rational(1, factorial);
      U += inv_fact * powP;
      Uinv += inv_fact * powM;
    }
    return truncate(star(star(U, H), Uinv));
  }

  // Unitarity defect U * conj-reversal(U) - 1 at the working order.
  PhaseFunctionX unitarity_defect(const PhaseFunctionX& H) const {
    auto [even, odd] = parity_split(H);
    PhaseFunctionX S = star(ExactScalar::rational(1, 2) * beta_pf(), odd);
    PhaseFunctionX U = PhaseFunctionX::unit(spec.syms, 4);
    PhaseFunctionX powP = U;
    long factorial = 1;
    for (int n = 1; n <= 4; ++n) {
      factorial *= n;
      powP = star(powP, S);
      U += ExactScalar::rational(1, factorial) * powP;
    }
    PhaseFunctionX Ubar = U.map_grassmann([](const MultivectorX& v) { return v.involution(); });
    return star(U, Ubar) - PhaseFunctionX::unit(spec.syms, 4);
  }

  // Minimal polynomial vector calculus over q1..q3.
  std::array<PhaseFunctionX, 3> curl_q(const std::array<PhaseFunctionX, 3>& A) const {
    std::array<PhaseFunctionX, 3> B{PhaseFunctionX(spec.syms, 4), PhaseFunctionX(spec.syms, 4),
                                    PhaseFunctionX(spec.syms, 4)};
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      B[i] = A[k].derivative(j) - A[j].derivative(k);
    }
    return B;
  }
  std::array<PhaseFunctionX, 3> minus_grad_q(const PhaseFunctionX& phi) const {
    return {-phi.derivative(0), -phi.derivative(1), -phi.derivative(2)};
  }
  PhaseFunctionX div_q(const std::array<PhaseFunctionX, 3>& F) const {
    return F[0].derivative(0) + F[1].derivative(1) + F[2].derivative(2);
  }
};

// Named terms of the transformed Hamiltonian, for the comparison report.
struct FWTerm {
  std::string name;
  PhaseFunctionX target;
  PhaseFunctionX computed;  // projection of H'' onto the target's support
  bool match = false;
};

struct FWReport {
  PhaseFunctionX h2;        // H'' after two steps (absolute units)
  PhaseFunctionX residual;  // H'' minus the sum of all targets
  std::vector<FWTerm> terms;
  bool pass = false;
  int odd_max_order = 0;  // largest c power in the odd part after one step
  bool odd_vanishes_after_second_step = false;
};

// Project f onto the (Gaussian-free) support of the target: keep the
// monomial/blade pairs that appear in the target.
inline PhaseFunctionX project_onto_support(const PhaseFunctionX& f, const PhaseFunctionX& target) {
  PhaseFunctionX out(f.symbols(), f.grassmann_dim());
  for (const auto& tpart : target.parts())
    for (const auto& [tm, tv] : tpart.poly)
      for (const auto& fpart : f.parts())
        for (const auto& [fm, fv] : fpart.poly) {
          if (!(fm == tm)) continue;
          MultivectorX picked(fv.dim());
          for (const auto& [mask, coeff] : fv.terms())
            if (!tv.coeff(mask).is_zero()) picked.add_term(mask, coeff);
          out.add_term(fpart.gauss, fm, picked);
        }
  out.normalize();
  return out;
}

// Full transformed Hamiltonian for static polynomial fields, compared
// term by term against
//   H'' = beta (mc^2 + (p - (e/c) A)^{2*}/2m - p^4/(8 m^3 c^2))
//         - (e hbar / 2mc) beta * sigma.B + e phi
//         - (e hbar / 4 m^2 c^2) sigma.(E x p) - (e hbar^2 / 8 m^2 c^2) div E.
inline FWReport fw_dirac_em(const FWContext& ctx, const std::array<PhaseFunctionX, 3>& A,
                            const PhaseFunctionX& phi) {
  for (const auto& Ai : A)
    if (Ai.max_total_degree() > 2)
      throw std::invalid_argument("vector potential degree exceeds the configured bound");
  if (phi.max_total_degree() > 2)
    throw std::invalid_argument("scalar potential degree exceeds the configured bound");

  const ExactScalar c = ExactScalar::c();
  const ExactScalar m = ctx.mass, e = ctx.charge;
  const ExactScalar hbar = ExactScalar::hbar();

  PhaseFunctionX H = ctx.dirac_hamiltonian_over_mc2(A, phi);
  PhaseFunctionX H1 = ctx.fw_step(H);
  auto [e1, o1] = ctx.parity_split(H1);
  PhaseFunctionX H2 = ctx.fw_step(H1);

  FWReport out;
  // back to absolute units
  out.h2 = ctx.truncate((m * c * c) * H2);

  int odd_max = 0;
  bool first = true;
  for (const auto& part : o1.parts())
    for (const auto& [mm, v] : part.poly)
      for (const auto& [mask, coeff] : v.terms()) {
        const int deg = coeff.max_c_degree();
        if (first || deg > odd_max) odd_max = deg;
        first = false;
      }
  out.odd_max_order = first ? -4 : odd_max;
  out.odd_vanishes_after_second_step = ctx.parity_split(H2).second.is_zero();

  // target terms
  auto beta_mv = ctx.rep.beta;
  std::array<PhaseFunctionX, 3> sigma_pf{ctx.constant(sigma_mv(4, 1)), ctx.constant(sigma_mv(4, 2)),
                                         ctx.constant(sigma_mv(4, 3))};
  std::array<PhaseFunctionX, 3> Bfield = ctx.curl_q(A);
  std::array<PhaseFunctionX, 3> Efield = ctx.minus_grad_q(phi);

  PhaseFunctionX kinetic(ctx.spec.syms, 4);
  {
    PhaseFunctionX v2(ctx.spec.syms, 4);
    for (int i = 0; i < 3; ++i) {
      PhaseFunctionX vi =
          ctx.symbol("p" + std::to_string(i + 1)) - (e / c) * A[i];
      v2 += ctx.star(vi, vi);
    }
    PhaseFunctionX p2(ctx.spec.syms, 4);
    for (int i = 0; i < 3; ++i) {
      PhaseFunctionX pi = ctx.symbol("p" + std::to_string(i + 1));
      p2 += pi.pointwise_product(pi);
    }
    PhaseFunctionX p4 = p2.pointwise_product(p2);
    PhaseFunctionX inner = PhaseFunctionX::scalar(ctx.spec.syms, 4, m * c * c) +
                           (ExactScalar(2) * m).inverse() * v2 -
                           (ExactScalar(8) * m * m * m * c * c).inverse() * p4;
    kinetic = ctx.truncate(ctx.constant(beta_mv).pointwise_product(inner));
  }

  PhaseFunctionX magnetic(ctx.spec.syms, 4);
  for (int i = 0; i < 3; ++i)
    magnetic += ctx.star(ctx.constant(beta_mv), sigma_pf[i].pointwise_product(Bfield[i]));
  magnetic = ctx.truncate((-(e * hbar) / (ExactScalar(2) * m * c)) * magnetic);

  PhaseFunctionX electric = ctx.truncate(e * phi);

  PhaseFunctionX spin_orbit(ctx.spec.syms, 4);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    PhaseFunctionX exp_i = Efield[j].pointwise_product(ctx.symbol("p" + std::to_string(k + 1))) -
                           Efield[k].pointwise_product(ctx.symbol("p" + std::to_string(j + 1)));
    spin_orbit += sigma_pf[i].pointwise_product(exp_i);
  }
  spin_orbit = ctx.truncate((-(e * hbar) / (ExactScalar(4) * m * m * c * c)) * spin_orbit);

  PhaseFunctionX darwin = ctx.truncate((-(e * hbar * hbar) / (ExactScalar(8) * m * m * c * c)) *
                                       ctx.div_q(Efield));

  auto add_term = [&](std::string name, PhaseFunctionX target) {
    FWTerm term;
    term.name = std::move(name);
    term.computed = project_onto_support(out.h2, target);
    term.match = term.computed.equals(target);
    term.target = std::move(target);
    out.terms.push_back(std::move(term));
  };
  add_term("kinetic", kinetic);
  add_term("magnetic-moment", magnetic);
  add_term("electrostatic", electric);
  add_term("spin-orbit", spin_orbit);
  add_term("darwin", darwin);

  out.residual = out.h2 - kinetic - magnetic - electric - spin_orbit - darwin;
  out.residual.normalize();
  out.pass = out.residual.is_zero();
  for (const auto& t : out.terms) out.pass = out.pass && t.match;
  return out;
}

}  // namespace starq
