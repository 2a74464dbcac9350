#include "doctest.h"

#include "starq/dirac.hpp"

using namespace starq;

namespace {
const std::array<DiracKind, 3> kKinds{DiracKind::D4, DiracKind::D5, DiracKind::D6};

Kinematics pythagorean() {
  Kinematics kin;
  kin.p = {ExactScalar(4), ExactScalar::zero(), ExactScalar::zero()};
  kin.m = ExactScalar(3);
  kin.c = ExactScalar(1);
  return kin;
}
}  // namespace

TEST_CASE("all three representations satisfy the Dirac algebra") {
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);  // build() verifies the relations
    CHECK(rep.star(rep.gamma5, rep.gamma5) == rep.unit());
    for (int mu = 0; mu < 4; ++mu)
      CHECK((rep.star(rep.gamma5, rep.gamma[mu]) + rep.star(rep.gamma[mu], rep.gamma5)).is_zero());
  }
}

TEST_CASE("Lorentz generator commutation relations") {
  const ExactScalar ih = ExactScalar::i() * ExactScalar::hbar();
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    auto gen = lorentz_generators(rep);
    auto comm = [&](const MultivectorX& a, const MultivectorX& b) {
      return rep.star(a, b) - rep.star(b, a);
    };
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      CHECK(comm(gen.S[i], gen.S[j]) == ih * gen.S[k]);
      CHECK(comm(gen.S[i], gen.K[j]) == ih * gen.K[k]);
      CHECK(comm(gen.K[i], gen.K[j]) == -(ih * gen.S[k]));
    }
    // K_i = (hbar/2) sigma^{0i}, S_i = (hbar/2) sum_{j<k} eps_{ijk} sigma^{jk}
    const ExactScalar half_hbar = ExactScalar::rational(1, 2) * ExactScalar::hbar();
    for (int i = 0; i < 3; ++i) {
      CHECK(gen.K[i] == half_hbar * gen.sigma_munu[0][i + 1]);
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      CHECK(gen.S[i] == half_hbar * gen.sigma_munu[j + 1][k + 1]);
    }
    // in the four-generator representation the rotation generators coincide
    // with the spin functions of the first sigma triple
    if (kind == DiracKind::D4) {
      for (int i = 0; i < 3; ++i) CHECK(gen.S[i] == spin_mv(rep.d, i + 1));
    }
  }
}

TEST_CASE("parity transformation") {
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    for (int i = 0; i < 3; ++i) CHECK(parity_transform(rep, rep.alpha[i]) == -rep.alpha[i]);
    CHECK(parity_transform(rep, rep.unit()) == rep.unit());
    auto gen = lorentz_generators(rep);
    for (int i = 0; i < 3; ++i) {
      CHECK(parity_transform(rep, gen.S[i]) == gen.S[i]);
      MultivectorX X = rep.star(rep.alpha[i], rep.beta) + gen.S[i];
      CHECK(parity_transform(rep, parity_transform(rep, X)) == X);
    }
  }
}

TEST_CASE("rotations act on alpha and gamma alike at Pythagorean angles") {
  // axis z, cos = 3/5, sin = 4/5; gamma^0 is invariant
  ExactScalar w2 = ExactScalar::rational(3, 5) - ExactScalar::rational(4, 5) * ExactScalar::i();
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    auto gen = lorentz_generators(rep);
    MultivectorX ns = gen.S[2];
    auto rotate = [&](const MultivectorX& u) {
      auto conj = conjugate_by_exp(ns, u, rep.form, +1, -1);
      REQUIRE(conj.has_value());
      return eval_full_phase(*conj, w2);
    };
    // R(phi) about z maps v1 -> cos v1 + sin v2, v2 -> -sin v1 + cos v2
    const ExactScalar c = ExactScalar::rational(3, 5), s = ExactScalar::rational(4, 5);
    CHECK(rotate(rep.alpha[0]) == c * rep.alpha[0] + s * rep.alpha[1]);
    CHECK(rotate(rep.alpha[1]) == c * rep.alpha[1] - s * rep.alpha[0]);
    CHECK(rotate(rep.alpha[2]) == rep.alpha[2]);
    CHECK(rotate(rep.gamma[1]) == c * rep.gamma[1] + s * rep.gamma[2]);
    CHECK(rotate(rep.gamma[0]) == rep.gamma[0]);
  }
}

TEST_CASE("exact boost: conjugation reproduces the cosh/sinh matrix at e^w = 3") {
  // e^w = 3: cosh w = 5/3, sinh w = 4/3
  std::array<ExactScalar, 3> axis{ExactScalar::one(), ExactScalar::zero(), ExactScalar::zero()};
  const ExactScalar W(3);
  const ExactScalar ch = ExactScalar::rational(5, 3), sh = ExactScalar::rational(4, 3);
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    // alpha transforms with equal exponential signs (boost1)
    auto a0 = boost_conjugation(rep, axis, rep.unit(), +1, +1);
    auto a1 = boost_conjugation(rep, axis, rep.alpha[0], +1, +1);
    MultivectorX a0W = eval_full_phase(a0, W);
    MultivectorX a1W = eval_full_phase(a1, W);
    bool forward = a0W == ch * rep.unit() + sh * rep.alpha[0];
    bool backward = a0W == ch * rep.unit() - sh * rep.alpha[0];
    CHECK((forward || backward));
    const ExactScalar sgn = forward ? sh : -sh;
    CHECK(a0W == ch * rep.unit() + sgn * rep.alpha[0]);
    CHECK(a1W == sgn * rep.unit() + ch * rep.alpha[0]);
    CHECK(eval_full_phase(boost_conjugation(rep, axis, rep.alpha[1], +1, +1), W) == rep.alpha[1]);

    // gamma transforms with opposite exponential signs (boost2)
    std::array<MultivectorX, 4> conjugated;
    for (int mu = 0; mu < 4; ++mu)
      conjugated[mu] = eval_full_phase(boost_conjugation(rep, axis, rep.gamma[mu], -1, +1), W);
    auto L = lambda_from_conjugation<ExactScalar>(conjugated, rep.gamma, rep.form,
                                                  ExactScalar::hbar());
    CHECK(L[0][0] == ch);
    CHECK(L[1][1] == ch);
    CHECK(L[0][1] == L[1][0]);
    CHECK((L[0][1] == sh || L[0][1] == -sh));
    CHECK(L[2][2] == ExactScalar::one());
    CHECK(L[3][3] == ExactScalar::one());
    CHECK(L[2][3].is_zero());
  }
}

TEST_CASE("float boost matches the rapidity-matrix oracle within 1e-10") {
  const double hbar = 1.0;
  std::array<double, 3> axis{2.0 / 7.0, 3.0 / 7.0, 6.0 / 7.0};
  const double w = 0.83;
  for (DiracKind kind : kKinds) {
    DiracRep rep_x = DiracRep::build(kind);
    DiracRepC rep = to_complex(rep_x, hbar, 1.0);
    auto genx = lorentz_generators(rep_x);
    MultivectorC X(rep.d);
    for (int k = 0; k < 3; ++k)
      X += genx.K[k].to_complex(hbar, 1.0) * std::complex<double>(axis[k], 0.0);
    std::array<MultivectorC, 4> conjugated;
    for (int mu = 0; mu < 4; ++mu) {
      auto conj = conjugate_by_exp(X, rep.gamma[mu], rep.form, -1, +1);
      REQUIRE(conj.has_value());
      const std::complex<double> W = std::exp(std::complex<double>(w, 0.0));
      conjugated[mu] = eval_full_phase(*conj, W);
    }
    auto L = lambda_from_conjugation<std::complex<double>>(conjugated, rep.gamma, rep.form,
                                                           {hbar, 0.0});
    auto oracle = boost_matrix(w, axis);
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        // allow a global rapidity-orientation flip in the mixed block
        double v = L[mu][nu].real();
        double o = oracle[mu][nu];
        if ((mu == 0) != (nu == 0))
          worst = std::max(worst, std::min(std::abs(v - o), std::abs(v + o)));
        else
          worst = std::max(worst, std::abs(v - o));
        worst = std::max(worst, std::abs(L[mu][nu].imag()));
      }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("energy projectors at exact Pythagorean kinematics") {
  Kinematics kin = pythagorean();
  CHECK(kin.energy() == ExactScalar(5));
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    MultivectorX H = dirac_hamiltonian(rep, kin);
    CHECK(rep.star(H, H) == MultivectorX::scalar(rep.d, ExactScalar(25)));
    auto [pi_plus, pi_minus] = energy_projectors(rep, kin);
    CHECK(pi_plus + pi_minus == rep.unit());
    CHECK(rep.star(pi_plus, pi_plus) == pi_plus);
    CHECK(rep.star(pi_minus, pi_minus) == pi_minus);
    CHECK(rep.star(pi_plus, pi_minus).is_zero());
    CHECK(rep.star(H, pi_plus) == ExactScalar(5) * pi_plus);
    CHECK(rep.star(H, pi_minus) == ExactScalar(-5) * pi_minus);
    // rest frame: (1 +- gamma0)/2
    Kinematics rest;
    rest.m = ExactScalar(3);
    auto [rp, rm] = energy_projectors(rep, rest);
    MultivectorX half = MultivectorX::scalar(rep.d, ExactScalar::rational(1, 2));
    CHECK(rp == half + ExactScalar::rational(1, 2) * rep.gamma[0]);
    CHECK(rm == half - ExactScalar::rational(1, 2) * rep.gamma[0]);
  }
}

TEST_CASE("spin observable and projectors") {
  Kinematics kin = pythagorean();
  std::array<ExactScalar, 3> u{ExactScalar::zero(), ExactScalar::zero(), ExactScalar::one()};
  const ExactScalar hbar = ExactScalar::hbar();
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    MultivectorX Su = spin_observable(rep, kin, u);
    CHECK(rep.star(Su, Su) ==
          MultivectorX::scalar(rep.d, ExactScalar::rational(1, 4) * ExactScalar::hbar(2)));
    MultivectorX H = dirac_hamiltonian(rep, kin);
    CHECK((rep.star(H, Su) - rep.star(Su, H)).is_zero());
    auto [sp, sm] = spin_projectors(rep, kin, u);
    CHECK(rep.star(Su, sp) == (ExactScalar::rational(1, 2) * hbar) * sp);
    CHECK(rep.star(Su, sm) == (ExactScalar::rational(-1, 2) * hbar) * sm);
    auto [ep, em] = energy_projectors(rep, kin);
    for (const MultivectorX* pe : {&ep, &em})
      for (const MultivectorX* ps : {&sp, &sm}) {
        MultivectorX combined = rep.star(*pe, *ps);
        CHECK(rep.star(combined, combined) == combined);
        CHECK(rep.star(*pe, *ps) == rep.star(*ps, *pe));
        CHECK(combined.trace(hbar, 4) == ExactScalar::one());
      }
    CHECK_THROWS_AS(
        spin_observable(rep, kin, {ExactScalar::one(), ExactScalar::zero(), ExactScalar::zero()}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        spin_observable(rep, kin, {ExactScalar::zero(), ExactScalar(2), ExactScalar::zero()}),
        std::invalid_argument);
  }
}

TEST_CASE("covariant projectors and the Dirac equation") {
  Kinematics kin = pythagorean();
  std::array<ExactScalar, 4> p4{ExactScalar(5), ExactScalar(4), ExactScalar::zero(),
                                ExactScalar::zero()};
  std::array<ExactScalar, 4> u4{ExactScalar::zero(), ExactScalar::zero(), ExactScalar::one(),
                                ExactScalar::zero()};
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    auto proj = covariant_projectors(rep, kin, p4, u4);
    MultivectorX pslash = slash(rep, p4);
    MultivectorX mc = MultivectorX::scalar(rep.d, ExactScalar(3));
    CHECK(rep.star(pslash - mc, proj.mass_plus).is_zero());
    CHECK(rep.star(pslash + mc, proj.mass_minus).is_zero());
    CHECK(proj.mass_plus + proj.mass_minus == rep.unit());
    CHECK(rep.star(proj.mass_plus, proj.mass_plus) == proj.mass_plus);
    CHECK(rep.star(proj.spin_plus, proj.spin_plus) == proj.spin_plus);
    CHECK(rep.star(proj.mass_plus, proj.spin_plus) == rep.star(proj.spin_plus, proj.mass_plus));
    MultivectorX combined = rep.star(proj.mass_plus, proj.spin_plus);
    CHECK(rep.star(combined, combined) == combined);
    CHECK(combined.trace(ExactScalar::hbar(), 4) == ExactScalar::one());
    // rest frame: pi_{+-m} reduces to (1 +- gamma0)/2
    Kinematics rest;
    rest.m = ExactScalar(3);
    std::array<ExactScalar, 4> p4rest{ExactScalar(3), ExactScalar::zero(), ExactScalar::zero(),
                                      ExactScalar::zero()};
    auto rproj = covariant_projectors(rep, rest, p4rest, u4);
    MultivectorX half = MultivectorX::scalar(rep.d, ExactScalar::rational(1, 2));
    CHECK(rproj.mass_plus == half + ExactScalar::rational(1, 2) * rep.gamma[0]);
    // off-shell momenta and invalid spin four-vectors are rejected
    std::array<ExactScalar, 4> bad{ExactScalar(6), ExactScalar(4), ExactScalar::zero(),
                                   ExactScalar::zero()};
    CHECK_THROWS_AS(covariant_projectors(rep, kin, bad, u4), std::invalid_argument);
    std::array<ExactScalar, 4> badu{ExactScalar::zero(), ExactScalar::one(), ExactScalar::zero(),
                                    ExactScalar::zero()};
    CHECK_THROWS_AS(covariant_projectors(rep, kin, p4, badu), std::invalid_argument);
  }
}

TEST_CASE("boosted rest-frame projectors equal the covariant ones, exactly") {
  // e^w = 3 boosts (m c, 0) to (E, p) = (5, 4) for m = 3, c = 1
  Kinematics kin = pythagorean();
  std::array<ExactScalar, 3> axis{ExactScalar::one(), ExactScalar::zero(), ExactScalar::zero()};
  std::array<ExactScalar, 4> p4{ExactScalar(5), ExactScalar(4), ExactScalar::zero(),
                                ExactScalar::zero()};
  std::array<ExactScalar, 4> u4{ExactScalar::zero(), ExactScalar::zero(), ExactScalar::one(),
                                ExactScalar::zero()};
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    auto proj = covariant_projectors(rep, kin, p4, u4);
    MultivectorX rest_plus = ExactScalar::rational(1, 2) * (rep.unit() + rep.gamma[0]);
    MultivectorX rest_minus = ExactScalar::rational(1, 2) * (rep.unit() - rep.gamma[0]);
    MultivectorX expected_g0 =
        ExactScalar::rational(1, 3) * slash(rep, p4);  // pslash / (m c)
    bool matched = false;
    for (const ExactScalar& W : {ExactScalar(3), ExactScalar::rational(1, 3)}) {
      MultivectorX b_gamma0 =
          eval_full_phase(boost_conjugation(rep, axis, rep.gamma[0], -1, +1), W);
      if (b_gamma0 == expected_g0) {
        matched = true;
        MultivectorX b_plus = eval_full_phase(boost_conjugation(rep, axis, rest_plus, -1, +1), W);
        MultivectorX b_minus =
            eval_full_phase(boost_conjugation(rep, axis, rest_minus, -1, +1), W);
        CHECK(b_plus == proj.mass_plus);
        CHECK(b_minus == proj.mass_minus);
      }
    }
    CHECK(matched);
  }
}

TEST_CASE("Dirac star exponential decomposes over the energy projectors") {
  Kinematics kin = pythagorean();
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    auto spectral = dirac_star_exponential(rep, kin);
    auto [pi_plus, pi_minus] = energy_projectors(rep, kin);
    CHECK(spectral.freq == ExactScalar(5));
    CHECK(spectral.plus == pi_plus);
    CHECK(spectral.minus == pi_minus);
    CHECK(spectral.eval_phase(ExactScalar::one()) == rep.unit());
  }
  // group law through the matrix-exponential oracle (float)
  DiracRep rep = DiracRep::build(DiracKind::D4);
  const double hbar = 1.0;
  DiracRepC repc = to_complex(rep, hbar, 1.0);
  MultivectorC H(repc.d);
  std::array<double, 3> p{0.7, -0.4, 1.1};
  for (int i = 0; i < 3; ++i) H += repc.alpha[i] * std::complex<double>(p[i], 0.0);
  H += repc.beta * std::complex<double>(1.3, 0.0);
  const double t1 = 0.37, t2 = 0.81;
  MultivectorC e1 = star_exponential_matrix(H, repc.form, t1, hbar);
  MultivectorC e2 = star_exponential_matrix(H, repc.form, t2, hbar);
  MultivectorC e12 = star_exponential_matrix(H, repc.form, t1 + t2, hbar);
  CHECK((circle_product(e1, e2, repc.form) - e12).norm_inf() < 1e-10);
  auto spec = star_exponential_spectral(H, repc.form);
  REQUIRE(spec.has_value());
  const std::complex<double> w = std::exp(std::complex<double>(0.0, -t1 / hbar) * spec->freq);
  CHECK((spec->eval_phase(w) - e1).norm_inf() < 1e-10);
}

TEST_CASE("gamma trace rules in all representations") {
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    GammaTraceReport rep_out = gamma_trace_suite(rep);
    CHECK(rep_out.pass);
    const ExactScalar hbar = ExactScalar::hbar();
    CHECK(rep.star(rep.gamma[0], rep.gamma[0]).trace(hbar, 4) == ExactScalar(4));
    CHECK(rep.gamma[1].trace(hbar, 4).is_zero());
    auto four = [&](int a, int b, int c, int d) {
      return rep.star(rep.star(rep.gamma[a], rep.gamma[b]), rep.star(rep.gamma[c], rep.gamma[d]))
          .trace(hbar, 4);
    };
    // the standard four-gamma identity gives +4 at (0,1,0,1) and -4 at (0,1,1,0)
    CHECK(four(0, 1, 0, 1) == ExactScalar(4));
    CHECK(four(0, 1, 1, 0) == ExactScalar(-4));
  }
}

TEST_CASE("Zitterbewegung: initial value, drift, Heisenberg residual") {
  const double hbar = 1.0, m = 3.0, c = 1.0;
  std::array<double, 3> p{4.0, 0.0, 0.0};
  const double E = 5.0;
  for (DiracKind kind : kKinds) {
    DiracRep rep_x = DiracRep::build(kind);
    DiracRepC rep = to_complex(rep_x, hbar, c);
    ZitterSolution sol = zitterbewegung_solution(rep_x, p, m, c, hbar);
    for (int i = 0; i < 3; ++i) CHECK(sol.component[i].eval(0.0, hbar).norm_inf() < 1e-12);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 64; ++k) {
        const double t = 10.0 * hbar / E * k / 63.0;
        worst = std::max(worst, zitter_heisenberg_residual(sol, rep, i, t));
      }
    CHECK(worst < 1e-8);
    // drift slope of the projected part: +-c^2 p_i / E per energy sector
    MultivectorC unit = MultivectorC::unit(rep.d);
    MultivectorC piP = (unit + sol.hamiltonian * std::complex<double>(1.0 / E, 0.0)) *
                       std::complex<double>(0.5, 0.0);
    MultivectorC piM = (unit - sol.hamiltonian * std::complex<double>(1.0 / E, 0.0)) *
                       std::complex<double>(0.5, 0.0);
    MultivectorC slopeP = rep.star(rep.star(piP, sol.component[0].drift), piP);
    MultivectorC slopeM = rep.star(rep.star(piM, sol.component[0].drift), piM);
    CHECK((slopeP - piP * std::complex<double>(c * c * p[0] / E, 0.0)).norm_inf() < 1e-12);
    CHECK((slopeM + piM * std::complex<double>(c * c * p[0] / E, 0.0)).norm_inf() < 1e-12);
    MultivectorC oscP = rep.star(rep.star(piP, sol.component[0].osc_plus), piP);
    CHECK(oscP.norm_inf() < 1e-12);
  }
}

TEST_CASE("cross-representation agreement of scalar quantities") {
  Kinematics kin = pythagorean();
  std::array<ExactScalar, 4> p4{ExactScalar(5), ExactScalar(4), ExactScalar::zero(),
                                ExactScalar::zero()};
  std::array<ExactScalar, 4> u4{ExactScalar::zero(), ExactScalar::zero(), ExactScalar::zero(),
                                ExactScalar::one()};
  const ExactScalar hbar = ExactScalar::hbar();
  std::array<ExactScalar, 3> traces;
  int idx = 0;
  for (DiracKind kind : kKinds) {
    DiracRep rep = DiracRep::build(kind);
    auto proj = covariant_projectors(rep, kin, p4, u4);
    MultivectorX combined = rep.star(proj.mass_plus, proj.spin_plus);
    traces[idx++] = combined.trace(hbar, 4);
  }
  CHECK(traces[0] == traces[1]);
  CHECK(traces[1] == traces[2]);
}
