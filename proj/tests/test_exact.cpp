#include "doctest.h"

#include <random>

#include "starq/exact.hpp"

using namespace starq;

TEST_CASE("sqrt2 squares to 2") {
  ExactScalar s = ExactScalar::sqrt2();
  CHECK(s * s == ExactScalar(2));
}

TEST_CASE("i squares to -1 and conjugates") {
  ExactScalar i = ExactScalar::i();
  CHECK(i * i == ExactScalar(-1));
  CHECK(i.conj() == -i);
}

TEST_CASE("hbar is 2 h^2") {
  CHECK(ExactScalar::hbar() == ExactScalar(2) * ExactScalar::h(2));
  CHECK(ExactScalar::hbar(-1) * ExactScalar::hbar() == ExactScalar::one());
}

TEST_CASE("monomial division and inverse") {
  ExactScalar a = ExactScalar::rational(3, 4) * ExactScalar::h(2) * ExactScalar::c(-1);
  ExactScalar b = ExactScalar::rational(1, 2) * ExactScalar::h(-1);
  ExactScalar q = a / b;
  CHECK(q * b == a);
  ExactScalar sum = a + b;
  CHECK_THROWS_AS(sum.inverse(), std::domain_error);
}

TEST_CASE("field inverse of sqrt2 combinations") {
  // (1 + sqrt2)^{-1} = sqrt2 - 1
  ExactScalar v = ExactScalar(Coeff(GaussianRational(Rational(1)), GaussianRational(Rational(1))));
  ExactScalar vinv = v.inverse();
  CHECK(v * vinv == ExactScalar::one());
  CHECK(vinv == ExactScalar::sqrt2() - ExactScalar::one());
}

TEST_CASE("randomized ring identities") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  std::uniform_int_distribution<int> pw(-2, 2);
  auto rand_scalar = [&] {
    ExactScalar s;
    for (int t = 0; t < 3; ++t) {
      Coeff c(GaussianRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))),
              GaussianRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))));
      s += ExactScalar::monomial(c, pw(rng), pw(rng));
    }
    return s;
  };
  for (int k = 0; k < 200; ++k) {
    ExactScalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // a * conj(a) has zero imaginary part: invariant under conjugation
    ExactScalar n = a * a.conj();
    CHECK(n == n.conj());
  }
}

TEST_CASE("sqrt of representable scalars") {
  ExactScalar s = ExactScalar::rational(9, 4) * ExactScalar::h(4);
  REQUIRE(s.sqrt().has_value());
  CHECK(*s.sqrt() * *s.sqrt() == s);
  CHECK(*s.sqrt() == ExactScalar::rational(3, 2) * ExactScalar::h(2));

  ExactScalar two_sq = ExactScalar(8);
  REQUIRE(two_sq.sqrt().has_value());
  CHECK(*two_sq.sqrt() == ExactScalar(2) * ExactScalar::sqrt2());

  ExactScalar neg = -ExactScalar::rational(1, 4) * ExactScalar::hbar(2);
  REQUIRE(neg.sqrt().has_value());
  CHECK(*neg.sqrt() * *neg.sqrt() == neg);

  CHECK_FALSE(ExactScalar(3).sqrt().has_value());
  CHECK_FALSE(ExactScalar::h(1).sqrt().has_value());
}

TEST_CASE("promotion to complex") {
  ExactScalar s = ExactScalar::rational(1, 2) * ExactScalar::hbar() + ExactScalar::i();
  auto z = s.to_complex(2.0, 1.0);
  CHECK(z.real() == doctest::Approx(1.0));
  CHECK(z.imag() == doctest::Approx(1.0));
}

TEST_CASE("bind h to a numeric value") {
  // hbar = 1 corresponds to h = sqrt(1/2) = sqrt2/2
  Coeff hval(GaussianRational(Rational(0)), GaussianRational(make_rational(1, 2)));
  ExactScalar bound = ExactScalar::hbar().bind_h(hval);
  CHECK(bound == ExactScalar::one());
}

TEST_CASE("c-power truncation") {
  ExactScalar s = ExactScalar::c(-5) + ExactScalar::c(-4) + ExactScalar::c(2);
  ExactScalar t = s.drop_c_below(-4);
  CHECK(t == ExactScalar::c(-4) + ExactScalar::c(2));
  CHECK(t.min_c_degree() == -4);
}

TEST_CASE("string form is canonical") {
  ExactScalar s = ExactScalar::rational(-3, 2) * ExactScalar::h(-2) + ExactScalar::i() * ExactScalar::sqrt2();
  CHECK(s.to_string() == "-3/2*h^-2 + 1i*sqrt2");
}
