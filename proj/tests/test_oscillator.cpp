#include "doctest.h"

#include "starq/oscillator.hpp"

using namespace starq;

TEST_CASE("Laguerre polynomials from the recurrence") {
  auto l0 = laguerre_coefficients(0);
  CHECK(l0 == std::vector<Rational>{Rational(1)});
  auto l2 = laguerre_coefficients(2);
  CHECK(l2 == std::vector<Rational>{Rational(1), Rational(-2), make_rational(1, 2)});
  auto l3 = laguerre_coefficients(3);
  CHECK(l3 == std::vector<Rational>{Rational(1), Rational(-3), make_rational(3, 2), make_rational(-1, 6)});
}

TEST_CASE("ground-state Wigner function is the plain Gaussian") {
  BosonicOscillator osc(ExactScalar(1), ExactScalar(1));
  PhaseFunctionX pi0 = osc.wigner(0);
  REQUIRE(pi0.parts().size() == 1);
  const auto& part = pi0.parts().front();
  REQUIRE(part.poly.size() == 1);
  CHECK(part.poly.begin()->first.is_one());
  CHECK(part.poly.begin()->second.scalar_part() == ExactScalar(2));
  // exponent -2H/(hbar w): q^2 coefficient -m w/hbar, p^2 coefficient -1/(m hbar w)
  CHECK(part.gauss.quad.at({0, 0}) == -ExactScalar::hbar().inverse());
  CHECK(part.gauss.quad.at({1, 1}) == -ExactScalar::hbar().inverse());
}

TEST_CASE("star-genvalue equation H * pi_n = E_n pi_n, exact") {
  BosonicOscillator osc(ExactScalar::rational(2, 3), ExactScalar::rational(5, 7));
  PhaseFunctionX H = osc.hamiltonian();
  for (int n = 0; n <= 12; ++n) {
    PhaseFunctionX pin = osc.wigner(n);
    PhaseFunctionX residual = star_product(H, pin, osc.spec) - osc.energy(n) * pin;
    CHECK(residual.is_zero());
  }
}

TEST_CASE("negative level is rejected") {
  BosonicOscillator osc(ExactScalar(1), ExactScalar(1));
  CHECK_THROWS_AS(osc.wigner(-1), std::invalid_argument);
}

TEST_CASE("normalization and expectation by Gaussian moments") {
  const double hbar = 1.0;
  BosonicOscillator osc(ExactScalar(1), ExactScalar(1));
  for (int n : {0, 1, 3, 5}) {
    PhaseFunctionC pin = osc.wigner(n).to_complex(hbar, 1.0);
    auto norm = gaussian_moment(pin, hbar);
    CHECK(std::abs(norm.scalar_part() - 1.0) < 1e-9);
    // <H> = E_n through (1/2 pi hbar) int H * pi_n
    PhaseFunctionC Hpin =
        star_product(osc.hamiltonian().to_complex(hbar, 1.0), pin, osc.spec.to_complex(hbar, 1.0));
    auto e = gaussian_moment(Hpin, hbar);
    const double expected = hbar * 1.0 * (n + 0.5);
    CHECK(std::abs(e.scalar_part() - expected) < 1e-9);
  }
}

TEST_CASE("holomorphic oscillator") {
  HolomorphicOscillator osc(ExactScalar(1), ExactScalar::rational(3, 2));
  PhaseFunctionX a = PhaseFunctionX::symbol(osc.syms, 0, "a");
  PhaseFunctionX abar = PhaseFunctionX::symbol(osc.syms, 0, "abar");
  // a * abar = a abar + hbar/2
  PhaseFunctionX prod = star_product(a, abar, osc.spec);
  PhaseFunctionX expected = a.pointwise_product(abar) +
                            PhaseFunctionX::scalar(osc.syms, 0, ExactScalar::h(2));
  CHECK(prod.equals(expected));
  // [a, abar] = hbar
  CHECK(star_commutator(a, abar, osc.spec)
            .equals(PhaseFunctionX::scalar(osc.syms, 0, ExactScalar::hbar())));
  // same spectrum as the (q,p) oscillator
  for (int n = 0; n <= 8; ++n) {
    PhaseFunctionX pin = osc.wigner(n);
    PhaseFunctionX residual = star_product(osc.hamiltonian(), pin, osc.spec) - osc.energy(n) * pin;
    CHECK(residual.is_zero());
  }
}

TEST_CASE("holomorphic factorization is consistent with the (q,p) Hamiltonian") {
  // substitute a = sqrt(m w/2)(q + i p/(m w)), abar its conjugate, into
  // w abar a and compare with p^2/2m + m w^2 q^2/2 (float backend).
  const double hbar = 1.0, m = 1.0, w = 2.0;
  HolomorphicOscillator hol(ExactScalar(1), ExactScalar(2));
  PhaseFunctionC H_hol = hol.hamiltonian().to_complex(hbar, 1.0);
  const double root = std::sqrt(m * w / 2.0);
  SymbolSet qp{"q", "p"};
  std::vector<std::vector<std::complex<double>>> T = {
      {{root, 0.0}, {0.0, root / (m * w)}},
      {{root, 0.0}, {0.0, -root / (m * w)}},
  };
  PhaseFunctionC H_sub = H_hol.substitute_linear(T, qp);
  BosonicOscillator osc(ExactScalar(1), ExactScalar(2));
  PhaseFunctionC H_qp = osc.hamiltonian().to_complex(hbar, 1.0);
  CHECK((H_sub - H_qp).norm_inf() < 1e-14);
}
