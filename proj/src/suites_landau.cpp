#include "starq/oscillator.hpp"
#include "starq/suites.hpp"
#include "suites_common.hpp"

namespace starq {

void suite_landau(const RunConfig& cfg, Recorder& rec) {
  std::mt19937_64 rng(cfg.seed + 3);
  const bool exact = cfg.exact();
  const double hb = cfg.hbar;
  LandauSystem sys(ExactScalar(1), ExactScalar::rational(3, 2));

  // annihilation equations for the center coordinates
  {
    const ExactScalar mw = sys.mass * sys.omega;
    bool pass = true;
    for (int i : {1, 2}) {
      PhaseFunctionX qt = sys.qtilde(i);
      pass = pass && (qt.derivative(0) - mw * qt.derivative(3)).is_zero();
      pass = pass && (qt.derivative(1) + mw * qt.derivative(2)).is_zero();
    }
    rec.check_exact("landau.center-coordinates",
                    "(d_q1 - m w d_tp2) qt = 0 and (d_q2 + m w d_tp1) qt = 0", pass);
  }

  // conserved quantities: random polynomials in the center coordinates
  {
    PhaseFunctionX H = sys.hamiltonian();
    std::uniform_int_distribution<long> cdist(-5, 5);
    double worst = 0.0;
    bool pass = true;
    for (int trial = 0; trial < 10; ++trial) {
      PhaseFunctionX qt1 = sys.qtilde(1), qt2 = sys.qtilde(2);
      PhaseFunctionX f(sys.syms, 0);
      for (int d1 = 0; d1 <= 2; ++d1)
        for (int d2 = 0; d2 + d1 <= 4 && d2 <= 2; ++d2) {
          PhaseFunctionX mono = PhaseFunctionX::unit(sys.syms, 0);
          for (int k = 0; k < d1; ++k) mono = mono.pointwise_product(qt1);
          for (int k = 0; k < d2; ++k) mono = mono.pointwise_product(qt2);
          f += ExactScalar(cdist(rng)) * mono;
        }
      PhaseFunctionX left = star_product(H, f, sys.spec);
      PhaseFunctionX right = star_product(f, H, sys.spec);
      PhaseFunctionX plain = H.pointwise_product(f);
      if (exact) {
        pass = pass && left.equals(right) && left.equals(plain);
      } else {
        auto spec_c = sys.spec.to_complex(hb, 1.0);
        PhaseFunctionC fc = f.to_complex(hb, 1.0), Hc = H.to_complex(hb, 1.0);
        worst = std::max(worst, (star_product(Hc, fc, spec_c) - star_product(fc, Hc, spec_c)).norm_inf());
      }
    }
    if (exact)
      rec.check_exact("landau.conserved-center",
                      "H_L * f(qt) = H_L f(qt) = f(qt) * H_L for random degree-4 polynomials",
                      pass);
    else
      rec.check_float("landau.conserved-center",
                      "H_L * f(qt) = H_L f(qt) = f(qt) * H_L for random degree-4 polynomials",
                      worst, cfg.tolerance);
  }

  // angular momentum in the tilde coordinates
  {
    PhaseFunctionX J = sys.angular_momentum();
    PhaseFunctionX q1 = PhaseFunctionX::symbol(sys.syms, 0, "q1");
    PhaseFunctionX q2 = PhaseFunctionX::symbol(sys.syms, 0, "q2");
    PhaseFunctionX tp1 = PhaseFunctionX::symbol(sys.syms, 0, "tp1");
    PhaseFunctionX tp2 = PhaseFunctionX::symbol(sys.syms, 0, "tp2");
    const ExactScalar half_mw = ExactScalar::rational(1, 2) * sys.mass * sys.omega;
    PhaseFunctionX expected = q1.pointwise_product(tp2) - q2.pointwise_product(tp1) +
                              half_mw * (q1.pointwise_product(q1) + q2.pointwise_product(q2));
    rec.check_exact("landau.angular-momentum",
                    "J = q1 p2 - q2 p1 recovered from -(1/w) H_L + (m w/2) qt^2",
                    J.equals(expected));
  }

  // spectra: E_n = hbar w (n + 1/2) and j_{nl} = hbar (l - n) for n, l <= 6
  {
    PhaseFunctionX H = sys.hamiltonian();
    PhaseFunctionX J = sys.angular_momentum();
    double worst = 0.0;
    bool pass = true;
    auto spec_c = sys.spec.to_complex(hb, 1.0);
    PhaseFunctionC Hc = H.to_complex(hb, 1.0), Jc = J.to_complex(hb, 1.0);
    for (int n = 0; n <= 6; ++n)
      for (int l = 0; l <= 6; ++l) {
        PhaseFunctionX pinl = sys.wigner(n, l);
        if (exact) {
          PhaseFunctionX hres = star_product(H, pinl, sys.spec) - sys.energy(n) * pinl;
          PhaseFunctionX jres =
              star_product(J, pinl, sys.spec) - sys.angular_eigenvalue(n, l) * pinl;
          pass = pass && hres.is_zero() && jres.is_zero();
        } else {
          // residuals relative to the state magnitude: the high-level Wigner
          // polynomials carry large coefficients that cancel exactly
          PhaseFunctionC pc = pinl.to_complex(hb, 1.0);
          const double scale = std::max(1.0, pc.norm_inf() * std::abs(sys.energy(n).to_complex(hb, 1.0)));
          worst = std::max(worst, (star_product(Hc, pc, spec_c) -
                                   pc * sys.energy(n).to_complex(hb, 1.0))
                                          .norm_inf() /
                                      scale);
          worst = std::max(worst, (star_product(Jc, pc, spec_c) -
                                   pc * sys.angular_eigenvalue(n, l).to_complex(hb, 1.0))
                                          .norm_inf() /
                                      scale);
        }
      }
    if (exact)
      rec.check_exact("landau.spectra",
                      "Landau levels and angular momentum eigenvalues, exact for n, l <= 6", pass);
    else
      rec.check_float("landau.spectra",
                      "Landau levels and angular momentum eigenvalues for n, l <= 6 (relative)",
                      worst, cfg.tolerance);
  }
}

}  // namespace starq
