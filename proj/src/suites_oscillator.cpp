#include "starq/oscillator.hpp"
#include "starq/spin.hpp"
#include "starq/suites.hpp"
#include "suites_common.hpp"

namespace starq {

namespace {

double pf_norm(const PhaseFunctionX& f, double hbar) { return f.norm_inf(hbar, 1.0); }

}  // namespace

void suite_oscillator(const RunConfig& cfg, Recorder& rec) {
  std::mt19937_64 rng(cfg.seed + 2);
  const bool exact = cfg.exact();
  const double hb = cfg.hbar;

  BosonicOscillator osc(ExactScalar::rational(2, 3), ExactScalar::rational(5, 7));

  // q * p and the canonical commutator
  {
    PhaseFunctionX q = PhaseFunctionX::symbol(osc.syms, 0, "q");
    PhaseFunctionX p = PhaseFunctionX::symbol(osc.syms, 0, "p");
    PhaseFunctionX qp = star_product(q, p, osc.spec);
    PhaseFunctionX expected =
        q.pointwise_product(p) +
        PhaseFunctionX::scalar(osc.syms, 0, ExactScalar::i() * ExactScalar::h(2));
    bool pass = qp.equals(expected);
    pass = pass && star_commutator(q, p, osc.spec)
                       .equals(PhaseFunctionX::scalar(osc.syms, 0,
                                                      ExactScalar::i() * ExactScalar::hbar()));
    PhaseFunctionX f = q.pointwise_product(p) + ExactScalar(3) * q;
    pass = pass && star_product(f, PhaseFunctionX::unit(osc.syms, 0), osc.spec).equals(f);
    rec.check_exact("oscillator.moyal-basics", "q * p = qp + i hbar/2; [q,p] = i hbar; f * 1 = f",
                    pass);
  }

  // star-genvalue equation for n <= 12
  {
    PhaseFunctionX H = osc.hamiltonian();
    double worst = 0.0;
    bool pass = true;
    for (int n = 0; n <= 12; ++n) {
      PhaseFunctionX pin = osc.wigner(n);
      if (exact) {
        PhaseFunctionX residual = star_product(H, pin, osc.spec) - osc.energy(n) * pin;
        pass = pass && residual.is_zero();
        worst = std::max(worst, pf_norm(residual, 1.0));
      } else {
        auto spec_c = osc.spec.to_complex(hb, 1.0);
        PhaseFunctionC pin_c = pin.to_complex(hb, 1.0);
        PhaseFunctionC res = star_product(H.to_complex(hb, 1.0), pin_c, spec_c) -
                             pin_c * osc.energy(n).to_complex(hb, 1.0);
        worst = std::max(worst, res.norm_inf());
      }
    }
    if (exact)
      rec.check_exact("oscillator.star-genvalue", "H * pi_n = hbar w (n + 1/2) pi_n for n <= 12",
                      pass, worst);
    else
      rec.check_float("oscillator.star-genvalue", "H * pi_n = hbar w (n + 1/2) pi_n for n <= 12",
                      worst, cfg.tolerance);
  }

  // Gaussian normalization and expectation values (float by construction)
  {
    BosonicOscillator unit_osc(ExactScalar(1), ExactScalar(1));
    double worst = 0.0;
    for (int n : {0, 1, 3, 5, 8}) {
      PhaseFunctionC pin = unit_osc.wigner(n).to_complex(hb, 1.0);
      worst = std::max(worst, std::abs(gaussian_moment(pin, hb).scalar_part() - 1.0));
      PhaseFunctionC Hpin = star_product(unit_osc.hamiltonian().to_complex(hb, 1.0), pin,
                                         unit_osc.spec.to_complex(hb, 1.0));
      const double expected = hb * (n + 0.5);
      worst = std::max(worst, std::abs(gaussian_moment(Hpin, hb).scalar_part() - expected));
    }
    // odd polynomial times even Gaussian integrates to zero
    PhaseFunctionC podd(unit_osc.syms, 0);
    GaussExp<std::complex<double>> g;
    g.add_quad(0, 0, {-1.0, 0.0});
    g.add_quad(1, 1, {-1.0, 0.0});
    podd.add_term(g, Mono::var(0), MultivectorC::unit(0));
    worst = std::max(worst, std::abs(gaussian_moment(podd, hb).scalar_part()));
    rec.check_float("oscillator.normalization",
                    "(1/2 pi hbar) int pi_n = 1; <H> = E_n; odd moments vanish", worst, 1e-9);
  }

  // hbar -> 0 limit
  {
    PhaseFunctionX q = PhaseFunctionX::symbol(osc.syms, 0, "q");
    PhaseFunctionX p = PhaseFunctionX::symbol(osc.syms, 0, "p");
    PhaseFunctionX f = q.pointwise_product(p) + ExactScalar(3) * q;
    PhaseFunctionX g2 = p.pointwise_product(p.pointwise_product(q));
    PhaseFunctionX corr = star_product(f, g2, osc.spec) - f.pointwise_product(g2);
    bool pass = true;
    for (const auto& part : corr.parts())
      for (const auto& [m, v] : part.poly)
        for (const auto& [mask, coeff] : v.terms()) pass = pass && coeff.min_h_degree() >= 2;
    rec.check_exact("oscillator.classical-limit",
                    "every star-product correction carries at least one power of hbar", pass);
  }

  // Pauli sector: sigma algebra and Cliffordization
  {
    const int d = 3;
    BilinearFormX P = BilinearFormX::pauli(d);
    bool pass = true;
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        MultivectorX anti = circle_anticommutator(MultivectorX::generator(d, i),
                                                  MultivectorX::generator(d, j), P);
        pass = pass && anti == MultivectorX::scalar(
                                   d, i == j ? ExactScalar::hbar() : ExactScalar::zero());
        MultivectorX sanit = circle_anticommutator(sigma_mv(d, i), sigma_mv(d, j), P);
        pass = pass && sanit == MultivectorX::scalar(d, ExactScalar(i == j ? 2 : 0));
        MultivectorX prod = circle_product(sigma_mv(d, i), sigma_mv(d, j), P);
        MultivectorX expected =
            MultivectorX::scalar(d, i == j ? ExactScalar::one() : ExactScalar::zero());
        if (i != j) {
          const int k = 6 - i - j;
          const int eps = ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1)) ? 1 : -1;
          expected += (ExactScalar(eps) * ExactScalar::i()) * sigma_mv(d, k);
        }
        pass = pass && prod == expected;
      }
    rec.check_exact("oscillator.sigma-algebra",
                    "{theta_i,theta_j} = hbar delta; sigma commutators; basis closure", pass);
  }

  // fermionic oscillator
  {
    FermionicOscillator fosc(ExactScalar::rational(4, 3));
    BilinearFormX P = fosc.form();
    MultivectorX H = fosc.hamiltonian();
    bool pass = true;
    for (int s : {+1, -1}) {
      MultivectorX pi = fosc.projector(s);
      pass = pass && circle_product(H, pi, P) == fosc.energy(s) * pi;
      pass = pass && circle_product(pi, pi, P) == pi;
      pass = pass && pi.trace(ExactScalar::hbar()) == ExactScalar::one();
    }
    pass = pass && fosc.projector(+1) + fosc.projector(-1) == MultivectorX::unit(3);
    pass = pass && circle_product(fosc.projector(+1), fosc.projector(-1), P).is_zero();
    auto spectral = star_exponential_spectral(H, P);
    pass = pass && spectral.has_value() && !spectral->nilpotent &&
           spectral->plus == fosc.projector(+1) && spectral->minus == fosc.projector(-1);
    rec.check_exact("oscillator.fermionic",
                    "E = +-hbar w/2; projectors idempotent, complete, unit trace; Exp decomposition",
                    pass);
  }

  // spin expectation values
  {
    FermionicOscillator fosc(ExactScalar(1));
    bool pass = true;
    for (int s : {+1, -1}) {
      auto vals = spin_expectations(fosc.projector(s));
      pass = pass && vals[0].is_zero() && vals[1].is_zero();
      pass = pass && vals[2] == ExactScalar::rational(s, 2) * ExactScalar::hbar();
      pass = pass && vals[3] == ExactScalar::rational(3, 4) * ExactScalar::hbar(2);
    }
    rec.check_exact("oscillator.spin-expectations",
                    "<S1> = <S2> = 0, <S3> = +-hbar/2, <S^2> = (3/4) hbar^2", pass);
  }

  // sigma evolution: closed form and the star-Heisenberg equation
  {
    const int d = 3;
    bool pass = true;
    auto conj1 = evolve_sigma(1, ExactScalar(1));
    auto conj2 = evolve_sigma(2, ExactScalar(1));
    auto conj3 = evolve_sigma(3, ExactScalar(1));
    pass = pass && conj1.eval_phase(ExactScalar::one()) == sigma_mv(d, 1);
    pass = pass && conj3.eval_phase(ExactScalar::one()) == sigma_mv(d, 3);
    ExactScalar w2 = ExactScalar::rational(3, 5) - ExactScalar::rational(4, 5) * ExactScalar::i();
    auto eval = [&](const PhasePolynomial<ExactScalar>& c) {
      MultivectorX out(d);
      for (const auto& [n, mv] : c.coef) out += mv * ExactScalar::pow_int(w2, n / 2);
      return out;
    };
    const ExactScalar cs = ExactScalar::rational(3, 5), sn = ExactScalar::rational(4, 5);
    pass = pass && eval(conj1) == cs * sigma_mv(d, 1) - sn * sigma_mv(d, 2);
    pass = pass && eval(conj2) == sn * sigma_mv(d, 1) + cs * sigma_mv(d, 2);
    pass = pass && eval(conj3) == sigma_mv(d, 3);
    rec.check_exact("oscillator.sigma-evolution",
                    "sigma(t) closed form at exact Pythagorean phases; sigma3 constant", pass);
  }

  // spin precession in a constant magnetic field: 64 samples
  {
    const int d = 3;
    const double e_c = 1.0, mass = 1.0, cl = 1.0, b3 = 1.3;
    const double w = e_c * b3 / (mass * cl);
    BilinearFormC P = BilinearFormX::pauli(d).to_complex(hb, 1.0);
    double worst = 0.0;
    std::array<PhasePolynomial<ExactScalar>, 3> conj{evolve_sigma(1, ExactScalar(1)),
                                                     evolve_sigma(2, ExactScalar(1)),
                                                     evolve_sigma(3, ExactScalar(1))};
    for (int k = 0; k < 64; ++k) {
      const double t = 2.0 * 3.14159265358979 / w * k / 63.0;
      std::array<MultivectorC, 3> S, dS;
      for (int i = 0; i < 3; ++i) {
        const std::complex<double> freq = conj[i].freq.to_complex(hb, 1.0) * w;
        const std::complex<double> wp = std::exp(std::complex<double>(0.0, -t / hb) * freq);
        MultivectorC val(d), dval(d);
        for (const auto& [n, mv] : conj[i].coef) {
          MultivectorC mvc = mv.to_complex(hb, 1.0);
          const std::complex<double> phase = std::pow(wp, n);
          val += mvc * phase;
          dval += mvc * (phase * std::complex<double>(0.0, -static_cast<double>(n) / hb) * freq);
        }
        S[i] = val * std::complex<double>(hb / 2.0, 0.0);
        dS[i] = dval * std::complex<double>(hb / 2.0, 0.0);
      }
      // dS/dt = (e/mc) B x S with B = (0,0,B3)
      const double f = e_c / (mass * cl);
      MultivectorC r0 = dS[0] + S[1] * std::complex<double>(f * b3, 0.0);
      MultivectorC r1 = dS[1] - S[0] * std::complex<double>(f * b3, 0.0);
      MultivectorC r2 = dS[2];
      worst = std::max({worst, r0.norm_inf(), r1.norm_inf(), r2.norm_inf()});
      (void)P;
    }
    rec.check_float("oscillator.spin-precession", "dS/dt = (e/mc) B x S over 64 samples", worst,
                    cfg.tolerance);
  }

  // rotations
  {
    const int d = 3;
    bool pass = true;
    std::array<ExactScalar, 3> zaxis{ExactScalar::zero(), ExactScalar::zero(), ExactScalar::one()};
    for (int i = 1; i <= 3; ++i) {
      auto conj = rotate_conjugation(zaxis, MultivectorX::generator(d, i));
      MultivectorX at_pi(d);
      for (const auto& [n, mv] : conj.coef)
        at_pi += mv * ExactScalar::pow_int(-ExactScalar::one(), n / 2);
      MultivectorX expected =
          i == 3 ? MultivectorX::generator(d, 3) : -MultivectorX::generator(d, i);
      pass = pass && at_pi == expected;
      // phi = 0 is the identity
      pass = pass && conj.eval_phase(ExactScalar::one()) == MultivectorX::generator(d, i);
    }
    std::array<ExactScalar, 3> axis{ExactScalar::rational(3, 5), ExactScalar::rational(4, 5),
                                    ExactScalar::zero()};
    ExactScalar w2 = ExactScalar::rational(3, 5) - ExactScalar::rational(4, 5) * ExactScalar::i();
    auto oracle = rodrigues_rotate<ExactScalar>(ExactScalar::rational(3, 5),
                                                ExactScalar::rational(4, 5), axis, d);
    for (int i = 1; i <= 3; ++i) {
      auto conj = rotate_conjugation(axis, MultivectorX::generator(d, i));
      MultivectorX rotated(d);
      for (const auto& [n, mv] : conj.coef) rotated += mv * ExactScalar::pow_int(w2, n / 2);
      pass = pass && rotated == oracle[i - 1];
    }
    auto spectral = rotation_exponential(zaxis, d);
    pass = pass && spectral.plus ==
                       ExactScalar::rational(1, 2) * (MultivectorX::unit(d) + sigma_mv(d, 3));
    bool threw = false;
    try {
      rotate_conjugation({ExactScalar(1), ExactScalar(1), ExactScalar::zero()},
                         MultivectorX::generator(d, 1));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    pass = pass && threw;
    rec.check_exact("oscillator.rotations",
                    "pi rotation about z; Rodrigues oracle at 3-4-5 angles; cos - i sin structure;"
                    " non-unit axis rejected",
                    pass);
  }

  // star exponential: matrix path agreement and the group law
  {
    const int d = 4;
    BilinearFormC P = BilinearFormX::pauli(d).to_complex(hb, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      MultivectorX Xx = detail::random_multivector(rng, d, 3);
      // keep even grades only so the exponential stays in the even subalgebra
      MultivectorX Xe(d);
      for (const auto& [m, v] : Xx.terms())
        if (std::popcount(m) % 2 == 0) Xe += MultivectorX::blade(d, m, v);
      MultivectorC X = Xe.to_complex(hb, 1.0);
      const double t1 = 0.4, t2 = 0.9;
      MultivectorC a = star_exponential_matrix(X, P, t1, hb);
      MultivectorC b = star_exponential_matrix(X, P, t2, hb);
      MultivectorC c = star_exponential_matrix(X, P, t1 + t2, hb);
      worst = std::max(worst, (circle_product(a, b, P) - c).norm_inf());
    }
    // spectral vs matrix on a generator combination
    MultivectorC X = (MultivectorC::generator(d, 1) + MultivectorC::generator(d, 3)) *
                     std::complex<double>(0.8, 0.0);
    auto spectral = star_exponential_spectral(X, P);
    if (spectral) {
      const double t = 0.6;
      const std::complex<double> w = std::exp(std::complex<double>(0.0, -t / hb) * spectral->freq);
      worst = std::max(worst,
                       (spectral->eval_phase(w) - star_exponential_matrix(X, P, t, hb)).norm_inf());
    }
    rec.check_float("oscillator.star-exponential",
                    "Exp group law on random even elements; spectral path equals the matrix path",
                    worst, cfg.tolerance);
  }
}

}  // namespace starq
