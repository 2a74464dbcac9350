#include "starq/dirac.hpp"
#include "starq/suites.hpp"
#include "suites_common.hpp"

namespace starq {

namespace {

DiracKind kind_from_name(const std::string& name) {
  if (name == "d4") return DiracKind::D4;
  if (name == "d5") return DiracKind::D5;
  if (name == "d6") return DiracKind::D6;
  throw std::invalid_argument("unknown Dirac representation: " + name);
}

Kinematics pythagorean() {
  Kinematics kin;
  kin.p = {ExactScalar(4), ExactScalar::zero(), ExactScalar::zero()};
  kin.m = ExactScalar(3);
  kin.c = ExactScalar(1);
  return kin;
}

}  // namespace

void suite_dirac(const RunConfig& cfg, Recorder& rec) {
  const double hb = cfg.hbar;
  Kinematics kin = pythagorean();
  std::array<ExactScalar, 4> p4{ExactScalar(5), ExactScalar(4), ExactScalar::zero(),
                                ExactScalar::zero()};
  std::array<ExactScalar, 4> u4{ExactScalar::zero(), ExactScalar::zero(), ExactScalar::one(),
                                ExactScalar::zero()};
  std::array<ExactScalar, 3> u3{ExactScalar::zero(), ExactScalar::zero(), ExactScalar::one()};
  const ExactScalar hbar = ExactScalar::hbar();

  std::vector<ExactScalar> cross_traces;

  for (const std::string& name : cfg.reps) {
    const DiracKind kind = kind_from_name(name);
    const std::string prefix = "dirac." + name + ".";

    // algebra relations are verified inside build(); failure throws
    bool algebra_ok = true;
    DiracRep rep = [&] {
      try {
        return DiracRep::build(kind);
      } catch (const std::logic_error&) {
        algebra_ok = false;
        return DiracRep::build(DiracKind::D4);
      }
    }();
    {
      bool pass = algebra_ok && rep.star(rep.gamma5, rep.gamma5) == rep.unit();
      for (int mu = 0; mu < 4; ++mu)
        pass = pass &&
               (rep.star(rep.gamma5, rep.gamma[mu]) + rep.star(rep.gamma[mu], rep.gamma5)).is_zero();
      rec.check_exact(prefix + "algebra",
                      "alpha/beta and gamma anticommutators; gamma5 squares to 1 and anticommutes",
                      pass);
    }

    // Lorentz generators
    {
      auto gen = lorentz_generators(rep);
      const ExactScalar ih = ExactScalar::i() * hbar;
      auto comm = [&](const MultivectorX& a, const MultivectorX& b) {
        return rep.star(a, b) - rep.star(b, a);
      };
      bool pass = true;
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        pass = pass && comm(gen.S[i], gen.S[j]) == ih * gen.S[k];
        pass = pass && comm(gen.S[i], gen.K[j]) == ih * gen.K[k];
        pass = pass && comm(gen.K[i], gen.K[j]) == -(ih * gen.S[k]);
        pass = pass && gen.K[i] == (ExactScalar::rational(1, 2) * hbar) * gen.sigma_munu[0][i + 1];
        pass = pass && gen.S[i] == (ExactScalar::rational(1, 2) * hbar) * gen.sigma_munu[j + 1][k + 1];
      }
      rec.check_exact(prefix + "lorentz-generators",
                      "rotation/boost commutators; generators as (hbar/2) sigma^{mu nu}", pass);
    }

    // parity
    {
      bool pass = true;
      for (int i = 0; i < 3; ++i) pass = pass && parity_transform(rep, rep.alpha[i]) == -rep.alpha[i];
      pass = pass && parity_transform(rep, rep.unit()) == rep.unit();
      auto gen = lorentz_generators(rep);
      for (int i = 0; i < 3; ++i) {
        pass = pass && parity_transform(rep, gen.S[i]) == gen.S[i];
        MultivectorX X = rep.star(rep.alpha[i], rep.beta) + gen.S[i];
        pass = pass && parity_transform(rep, parity_transform(rep, X)) == X;
      }
      rec.check_exact(prefix + "parity", "P(alpha) = -alpha, P(S) = S, P is an involution", pass);
    }

    // rotations at exact angles (rotation formula with gamma in place of alpha)
    {
      auto gen = lorentz_generators(rep);
      ExactScalar w2 = ExactScalar::rational(3, 5) - ExactScalar::rational(4, 5) * ExactScalar::i();
      auto rotate = [&](const MultivectorX& u) {
        auto conj = conjugate_by_exp(gen.S[2], u, rep.form, +1, -1);
        return conj ? eval_full_phase(*conj, w2) : MultivectorX(rep.d);
      };
      const ExactScalar c = ExactScalar::rational(3, 5), s = ExactScalar::rational(4, 5);
      bool pass = rotate(rep.alpha[0]) == c * rep.alpha[0] + s * rep.alpha[1];
      pass = pass && rotate(rep.alpha[1]) == c * rep.alpha[1] - s * rep.alpha[0];
      pass = pass && rotate(rep.gamma[1]) == c * rep.gamma[1] + s * rep.gamma[2];
      pass = pass && rotate(rep.gamma[0]) == rep.gamma[0];
      rec.check_exact(prefix + "rotations",
                      "rotation formula at exact 3-4-5 angles, gamma substituted for alpha", pass);
    }

    // exact boost at e^w = 3 and the Lambda extraction
    {
      std::array<ExactScalar, 3> axis{ExactScalar::one(), ExactScalar::zero(), ExactScalar::zero()};
      const ExactScalar W(3);
      const ExactScalar ch = ExactScalar::rational(5, 3), sh = ExactScalar::rational(4, 3);
      MultivectorX a0W = eval_full_phase(boost_conjugation(rep, axis, rep.unit(), +1, +1), W);
      const bool forward = a0W == ch * rep.unit() + sh * rep.alpha[0];
      const ExactScalar sgn = forward ? sh : -sh;
      bool pass = a0W == ch * rep.unit() + sgn * rep.alpha[0];
      MultivectorX a1W = eval_full_phase(boost_conjugation(rep, axis, rep.alpha[0], +1, +1), W);
      pass = pass && a1W == sgn * rep.unit() + ch * rep.alpha[0];
      std::array<MultivectorX, 4> conjugated;
      for (int mu = 0; mu < 4; ++mu)
        conjugated[mu] = eval_full_phase(boost_conjugation(rep, axis, rep.gamma[mu], -1, +1), W);
      auto L = lambda_from_conjugation<ExactScalar>(conjugated, rep.gamma, rep.form, hbar);
      pass = pass && L[0][0] == ch && L[1][1] == ch && L[0][1] == L[1][0] &&
             (L[0][1] == sh || L[0][1] == -sh) && L[2][2] == ExactScalar::one() &&
             L[3][3] == ExactScalar::one() && L[2][3].is_zero();
      rec.check_exact(prefix + "boost-exact",
                      "alpha transforms as a four-vector at e^w = 3; Lambda is the cosh/sinh matrix",
                      pass);
    }

    // float boost against the rapidity-matrix oracle
    {
      DiracRepC repc = to_complex(rep, hb, 1.0);
      auto genx = lorentz_generators(rep);
      std::array<double, 3> axis{2.0 / 7.0, 3.0 / 7.0, 6.0 / 7.0};
      const double w = 0.83;
      MultivectorC X(repc.d);
      for (int k = 0; k < 3; ++k)
        X += genx.K[k].to_complex(hb, 1.0) * std::complex<double>(axis[k], 0.0);
      std::array<MultivectorC, 4> conjugated;
      bool formed = true;
      for (int mu = 0; mu < 4; ++mu) {
        auto conj = conjugate_by_exp(X, repc.gamma[mu], repc.form, -1, +1);
        if (!conj) {
          formed = false;
          break;
        }
        conjugated[mu] = eval_full_phase(*conj, std::complex<double>(std::exp(w), 0.0));
      }
      double worst = formed ? 0.0 : 1.0;
      if (formed) {
        auto L = lambda_from_conjugation<std::complex<double>>(conjugated, repc.gamma, repc.form,
                                                               {hb, 0.0});
        auto oracle = boost_matrix(w, axis);
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) {
            const double v = L[mu][nu].real(), o = oracle[mu][nu];
            if ((mu == 0) != (nu == 0))
              worst = std::max(worst, std::min(std::abs(v - o), std::abs(v + o)));
            else
              worst = std::max(worst, std::abs(v - o));
            worst = std::max(worst, std::abs(L[mu][nu].imag()));
          }
      }
      rec.check_float(prefix + "boost-float", "Lambda from star conjugation vs cosh/sinh oracle",
                      worst, cfg.tolerance);
    }

    // energy and spin projectors, exact kinematics
    {
      MultivectorX H = dirac_hamiltonian(rep, kin);
      bool pass = rep.star(H, H) == MultivectorX::scalar(rep.d, ExactScalar(25));
      auto [pi_plus, pi_minus] = energy_projectors(rep, kin);
      pass = pass && pi_plus + pi_minus == rep.unit();
      pass = pass && rep.star(pi_plus, pi_plus) == pi_plus;
      pass = pass && rep.star(pi_plus, pi_minus).is_zero();
      pass = pass && rep.star(H, pi_plus) == ExactScalar(5) * pi_plus;
      pass = pass && rep.star(H, pi_minus) == ExactScalar(-5) * pi_minus;
      MultivectorX Su = spin_observable(rep, kin, u3);
      pass = pass && rep.star(Su, Su) ==
                         MultivectorX::scalar(rep.d, ExactScalar::rational(1, 4) * hbar * hbar);
      pass = pass && (rep.star(H, Su) - rep.star(Su, H)).is_zero();
      auto [sp, sm] = spin_projectors(rep, kin, u3);
      pass = pass && rep.star(Su, sp) == (ExactScalar::rational(1, 2) * hbar) * sp;
      for (const MultivectorX* pe : {&pi_plus, &pi_minus})
        for (const MultivectorX* ps : {&sp, &sm}) {
          MultivectorX combined = rep.star(*pe, *ps);
          pass = pass && rep.star(combined, combined) == combined;
          pass = pass && rep.star(*pe, *ps) == rep.star(*ps, *pe);
          pass = pass && combined.trace(hbar, 4) == ExactScalar::one();
        }
      rec.check_exact(prefix + "projectors",
                      "H*H = c^2 p^2 + m^2 c^4; energy/spin projector identities at E = 5", pass);
    }

    // covariant projectors and boost consistency
    {
      auto proj = covariant_projectors(rep, kin, p4, u4);
      MultivectorX pslash = slash(rep, p4);
      MultivectorX mc = MultivectorX::scalar(rep.d, ExactScalar(3));
      bool pass = rep.star(pslash - mc, proj.mass_plus).is_zero();
      pass = pass && rep.star(pslash + mc, proj.mass_minus).is_zero();
      pass = pass && rep.star(proj.mass_plus, proj.spin_plus) ==
                         rep.star(proj.spin_plus, proj.mass_plus);
      MultivectorX combined = rep.star(proj.mass_plus, proj.spin_plus);
      pass = pass && rep.star(combined, combined) == combined;
      pass = pass && combined.trace(hbar, 4) == ExactScalar::one();
      // boosted rest-frame projectors, exact at e^w = 3
      std::array<ExactScalar, 3> axis{ExactScalar::one(), ExactScalar::zero(), ExactScalar::zero()};
      MultivectorX rest_plus = ExactScalar::rational(1, 2) * (rep.unit() + rep.gamma[0]);
      MultivectorX expected_g0 = ExactScalar::rational(1, 3) * pslash;
      bool matched = false;
      for (const ExactScalar& W : {ExactScalar(3), ExactScalar::rational(1, 3)}) {
        MultivectorX b_g0 = eval_full_phase(boost_conjugation(rep, axis, rep.gamma[0], -1, +1), W);
        if (b_g0 == expected_g0) {
          matched = true;
          MultivectorX b_plus = eval_full_phase(boost_conjugation(rep, axis, rest_plus, -1, +1), W);
          pass = pass && b_plus == proj.mass_plus;
        }
      }
      pass = pass && matched;
      rec.check_exact(prefix + "covariant",
                      "(pslash -+ mc) * pi = 0; boosted rest projectors equal the covariant ones",
                      pass);
    }

    // star exponential of the Dirac Hamiltonian
    {
      auto spectral = dirac_star_exponential(rep, kin);
      auto [pi_plus, pi_minus] = energy_projectors(rep, kin);
      bool pass = spectral.freq == ExactScalar(5) && spectral.plus == pi_plus &&
                  spectral.minus == pi_minus &&
                  spectral.eval_phase(ExactScalar::one()) == rep.unit();
      rec.check_exact(prefix + "star-exponential",
                      "Exp(H_D t) = pi_-E e^{+iEt/hbar} + pi_+E e^{-iEt/hbar}; t = 0 unit", pass);
      // float group law
      DiracRepC repc = to_complex(rep, hb, 1.0);
      MultivectorC Hc = dirac_hamiltonian(rep, kin).to_complex(hb, 1.0);
      const double t1 = 0.37, t2 = 0.81;
      MultivectorC e1 = star_exponential_matrix(Hc, repc.form, t1, hb);
      MultivectorC e2 = star_exponential_matrix(Hc, repc.form, t2, hb);
      MultivectorC e12 = star_exponential_matrix(Hc, repc.form, t1 + t2, hb);
      rec.check_float(prefix + "exp-group-law", "Exp(t1) * Exp(t2) = Exp(t1 + t2)",
                      (circle_product(e1, e2, repc.form) - e12).norm_inf(), cfg.tolerance);
    }

    // trace rules
    {
      GammaTraceReport tr = gamma_trace_suite(rep);
      rec.check_exact(prefix + "traces",
                      "Tr(1) = 4; odd counts vanish; two- and four-gamma identities", tr.pass);
    }

    // Zitterbewegung
    {
      DiracRepC repc = to_complex(rep, hb, 1.0);
      std::array<double, 3> p{4.0, 0.0, 0.0};
      const double E = std::sqrt(16.0 + 81.0 / 9.0);  // m = 3, c = 1 -> E = 5
      ZitterSolution sol = zitterbewegung_solution(rep, p, 3.0, 1.0, hb);
      double worst = 0.0;
      for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, sol.component[i].eval(0.0, hb).norm_inf());
        for (int k = 0; k < 64; ++k) {
          const double t = 10.0 * hb / E * k / 63.0;
          worst = std::max(worst, zitter_heisenberg_residual(sol, repc, i, t));
        }
      }
      MultivectorC unit = MultivectorC::unit(repc.d);
      MultivectorC piP = (unit + sol.hamiltonian * std::complex<double>(1.0 / E, 0.0)) *
                         std::complex<double>(0.5, 0.0);
      MultivectorC slopeP = repc.star(repc.star(piP, sol.component[0].drift), piP);
      worst = std::max(worst,
                       (slopeP - piP * std::complex<double>(p[0] / E, 0.0)).norm_inf());
      rec.check_float(prefix + "zitterbewegung",
                      "x(0) = x; Heisenberg residual over [0, 10 hbar/E]; drift slope c^2 p/E",
                      worst, 1e-8);
    }

    cross_traces.push_back(
        rep.star(covariant_projectors(rep, kin, p4, u4).mass_plus, rep.gamma5).trace(hbar, 4));
  }

  if (cross_traces.size() > 1) {
    bool pass = true;
    for (std::size_t k = 1; k < cross_traces.size(); ++k)
      pass = pass && cross_traces[k] == cross_traces[0];
    rec.check_exact("dirac.cross-representation",
                    "scalar quantities agree across the selected representations", pass);
  }
}

}  // namespace starq
