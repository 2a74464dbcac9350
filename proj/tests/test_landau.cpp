#include "doctest.h"

#include <random>

#include "starq/oscillator.hpp"

using namespace starq;

namespace {
LandauSystem make_system() { return LandauSystem(ExactScalar(1), ExactScalar::rational(3, 2)); }
}  // namespace

TEST_CASE("center coordinates are annihilated by the defining operators") {
  LandauSystem sys = make_system();
  const ExactScalar mw = sys.mass * sys.omega;
  for (int i : {1, 2}) {
    PhaseFunctionX qt = sys.qtilde(i);
    // (d_q1 - m w d_tp2) qt = 0 and (d_q2 + m w d_tp1) qt = 0
    CHECK((qt.derivative(0) - mw * qt.derivative(3)).is_zero());
    CHECK((qt.derivative(1) + mw * qt.derivative(2)).is_zero());
  }
}

TEST_CASE("functions of the center coordinates star-commute with the Hamiltonian") {
  LandauSystem sys = make_system();
  PhaseFunctionX H = sys.hamiltonian();
  std::mt19937_64 rng(401);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    // random polynomial f(qt1, qt2) of degree <= 4
    PhaseFunctionX qt1 = sys.qtilde(1), qt2 = sys.qtilde(2);
    PhaseFunctionX f(sys.syms, 0);
    for (int d1 = 0; d1 <= 2; ++d1)
      for (int d2 = 0; d2 + d1 <= 4 && d2 <= 2; ++d2) {
        PhaseFunctionX mono = PhaseFunctionX::unit(sys.syms, 0);
        for (int k = 0; k < d1; ++k) mono = mono.pointwise_product(qt1);
        for (int k = 0; k < d2; ++k) mono = mono.pointwise_product(qt2);
        f += ExactScalar(c(rng)) * mono;
      }
    PhaseFunctionX left = star_product(H, f, sys.spec);
    PhaseFunctionX right = star_product(f, H, sys.spec);
    PhaseFunctionX plain = H.pointwise_product(f);
    CHECK(left.equals(right));
    CHECK(left.equals(plain));
  }
}

TEST_CASE("Landau levels and angular momentum eigenvalues, exact for n,l <= 6") {
  LandauSystem sys = make_system();
  PhaseFunctionX H = sys.hamiltonian();
  PhaseFunctionX J = sys.angular_momentum();
  for (int n = 0; n <= 6; ++n) {
    for (int l = 0; l <= 6; ++l) {
      PhaseFunctionX pinl = sys.wigner(n, l);
      PhaseFunctionX hres = star_product(H, pinl, sys.spec) - sys.energy(n) * pinl;
      CHECK(hres.is_zero());
      PhaseFunctionX jres = star_product(J, pinl, sys.spec) - sys.angular_eigenvalue(n, l) * pinl;
      CHECK(jres.is_zero());
    }
  }
  CHECK(sys.energy(2) == ExactScalar::hbar() * ExactScalar::rational(3, 2) * ExactScalar::rational(5, 2));
  CHECK(sys.angular_eigenvalue(1, 4) == ExactScalar(3) * ExactScalar::hbar());
}

TEST_CASE("angular momentum recovers q1 p2 - q2 p1") {
  // J in the tilde coordinates: q1 tp2 - q2 tp1 + (m w/2)(q1^2 + q2^2),
  // obtained from p_i = tp_i + (e/c) A_i in the symmetric gauge.
  LandauSystem sys = make_system();
  PhaseFunctionX J = sys.angular_momentum();
  PhaseFunctionX q1 = PhaseFunctionX::symbol(sys.syms, 0, "q1");
  PhaseFunctionX q2 = PhaseFunctionX::symbol(sys.syms, 0, "q2");
  PhaseFunctionX tp1 = PhaseFunctionX::symbol(sys.syms, 0, "tp1");
  PhaseFunctionX tp2 = PhaseFunctionX::symbol(sys.syms, 0, "tp2");
  const ExactScalar half_mw = ExactScalar::rational(1, 2) * sys.mass * sys.omega;
  PhaseFunctionX expected = q1.pointwise_product(tp2) - q2.pointwise_product(tp1) +
                            half_mw * (q1.pointwise_product(q1) + q2.pointwise_product(q2));
  CHECK(J.equals(expected));
}

TEST_CASE("omega = 0 is rejected") {
  CHECK_THROWS_AS(LandauSystem(ExactScalar(1), ExactScalar::zero()), std::invalid_argument);
}
