#include "starq/susy.hpp"
#include "starq/suites.hpp"
#include "suites_common.hpp"

namespace starq {

void suite_susy(const RunConfig& cfg, Recorder& rec) {
  const bool exact = cfg.exact();
  const double hb = cfg.hbar;
  SusySystem sys(ExactScalar::rational(3, 2));

  // Feynman trick and the induced interaction term
  {
    FeynmanTrickReport ft = feynman_trick(ExactScalar::rational(2, 3), ExactScalar::rational(5, 2),
                                          ExactScalar(2), ExactScalar(1));
    bool pass = ft.pass;
    // H_I = -(e hbar / 2mc) B sigma3; in generators this is +i w theta1 theta2
    // with w = eB/mc (the sigma convention fixes the orientation)
    const ExactScalar omega = ExactScalar::rational(2, 3) * ExactScalar::rational(5, 2) /
                              (ExactScalar(2) * ExactScalar(1));
    MultivectorX hi = ft.interaction.parts().empty()
                          ? MultivectorX(3)
                          : ft.interaction.parts().front().poly.begin()->second;
    MultivectorX theta12 = MultivectorX::generator(3, 1) * MultivectorX::generator(3, 2);
    pass = pass && hi == (ExactScalar::i() * omega) * theta12;
    rec.check_exact("susy.feynman-trick",
                    "[(p - (e/c)A).sigma]^2* = (p - (e/c)A)^2* - (hbar e/c) sigma.B, symmetric gauge",
                    pass);
    if (!exact) {
      auto spec_c = moyal_pauli_spec(3, 3).to_complex(hb, 1.0);
      PhaseFunctionC lhs = ft.lhs.to_complex(hb, 1.0), rhs = ft.rhs.to_complex(hb, 1.0);
      rec.check_float("susy.feynman-trick-float", "Feynman trick residual in the float backend",
                      (lhs - rhs).norm_inf(), cfg.tolerance);
      (void)spec_c;
    }
  }

  // holomorphic pairs
  {
    PhaseFunctionX a = PhaseFunctionX::symbol(sys.syms, 2, "a");
    PhaseFunctionX abar = PhaseFunctionX::symbol(sys.syms, 2, "abar");
    bool pass = star_commutator(a, abar, sys.spec)
                    .equals(PhaseFunctionX::scalar(sys.syms, 2, ExactScalar::hbar()));
    MultivectorX anti = circle_anticommutator(sys.f(), sys.fbar(), sys.spec.ferm);
    pass = pass && anti == MultivectorX::scalar(2, ExactScalar::hbar());
    PhaseFunctionX prod = star_product(a, abar, sys.spec);
    PhaseFunctionX expected = a.pointwise_product(abar) +
                              PhaseFunctionX::scalar(sys.syms, 2, ExactScalar::h(2));
    pass = pass && prod.equals(expected);
    rec.check_exact("susy.holomorphic-pairs", "[a, abar] = hbar; {f, fbar} = hbar; a * abar value",
                    pass);
  }

  // fermionic projectors in holomorphic coordinates
  {
    bool pass = true;
    for (int s : {+1, -1}) {
      PhaseFunctionX pi = sys.fermionic_projector(s);
      pass = pass && star_product(pi, pi, sys.spec).equals(pi);
    }
    pass = pass && (sys.fermionic_projector(+1) + sys.fermionic_projector(-1))
                       .equals(PhaseFunctionX::unit(sys.syms, 2));
    rec.check_exact("susy.fermionic-projectors", "pi = 1/2 +- fbar f/hbar idempotent and complete",
                    pass);
  }

  // spectrum and degeneracy for n <= 8
  {
    PhaseFunctionX H = sys.hamiltonian();
    double worst = 0.0;
    bool pass = true;
    auto spec_c = sys.spec.to_complex(hb, 1.0);
    PhaseFunctionC Hc = H.to_complex(hb, 1.0);
    for (int n = 0; n <= 8; ++n)
      for (int s : {+1, -1}) {
        PhaseFunctionX pi = sys.state(s, n);
        if (exact) {
          PhaseFunctionX res = star_product(H, pi, sys.spec) - sys.energy(s, n) * pi;
          pass = pass && res.is_zero();
        } else {
          PhaseFunctionC pc = pi.to_complex(hb, 1.0);
          const double scale = std::max(1.0, pc.norm_inf());
          worst = std::max(worst, (star_product(Hc, pc, spec_c) -
                                   pc * sys.energy(s, n).to_complex(hb, 1.0))
                                          .norm_inf() /
                                      scale);
        }
      }
    for (int n = 1; n <= 8; ++n) pass = pass && sys.energy(-1, n) == sys.energy(+1, n - 1);
    pass = pass && sys.energy(-1, 0).is_zero();
    if (exact)
      rec.check_exact("susy.spectrum",
                      "E = hbar w (n + 1/2 + s/2) exact for n <= 8; paired degeneracy", pass);
    else
      rec.check_float("susy.spectrum", "E = hbar w (n + 1/2 + s/2) for n <= 8 (relative)", worst,
                      cfg.tolerance);
  }

  // supercharges: ladder and Fredholm quadruple
  {
    PhaseFunctionX qp = sys.supercharge(+1), qm = sys.supercharge(-1);
    const ExactScalar hbar = ExactScalar::hbar();
    bool pass = true;
    for (int n = 1; n <= 3; ++n) {
      PhaseFunctionX lhs = star_product(star_product(qp, sys.state(-1, n), sys.spec), qm, sys.spec);
      pass = pass && lhs.equals((ExactScalar(n) * hbar) * sys.state(+1, n - 1));
      PhaseFunctionX rhs =
          star_product(star_product(qm, sys.state(+1, n - 1), sys.spec), qp, sys.spec);
      pass = pass && rhs.equals((ExactScalar(n) * hbar) * sys.state(-1, n));
    }
    PhaseFunctionX at_one = star_product(star_product(qp, sys.state(-1, 1), sys.spec), qm, sys.spec);
    pass = pass && at_one.equals(hbar * sys.state(+1, 0));
    PhaseFunctionX bottom = star_product(star_product(qp, sys.state(-1, 0), sys.spec), qm, sys.spec);
    pass = pass && bottom.is_zero();
    PhaseFunctionX pip = sys.fermionic_projector(+1), pim = sys.fermionic_projector(-1);
    pass = pass && star_product(qp, pim, sys.spec).equals(qp);
    pass = pass && star_product(qm, pip, sys.spec).equals(qm);
    pass = pass && star_product(pip, qp, sys.spec).equals(qp);
    pass = pass && star_product(pim, qm, sys.spec).equals(qm);
    rec.check_exact("susy.supercharges",
                    "ladder with the level factor (plain hbar at n = 1); Fredholm quadruple;"
                    " annihilation at the bottom",
                    pass);
  }

  // Witten index: value, truncation independence, per-level cancellation
  {
    bool pass = true;
    double worst = 0.0;
    for (int n_trunc = 1; n_trunc <= cfg.witten_trunc; ++n_trunc) {
      WittenReport wr = witten_index(sys, n_trunc);
      pass = pass && wr.index == ExactScalar::one() && wr.exact_supersymmetry;
      pass = pass && wr.levels.front().contribution == ExactScalar::one();
      for (std::size_t k = 1; k < wr.levels.size(); ++k) {
        pass = pass && wr.levels[k].contribution.is_zero();
        pass = pass && wr.levels[k].bracket1 == wr.levels[k].bracket2;
        worst = std::max(worst,
                         std::abs(wr.levels[k].contribution.to_complex(hb, 1.0)));
      }
    }
    if (exact)
      rec.check_exact("susy.witten-index",
                      "index 1, truncation independent for N = 1..8, paired levels cancel", pass,
                      worst);
    else
      rec.check_float("susy.witten-index", "paired-level cancellation residual", worst, 1e-9);
  }
}

}  // namespace starq
