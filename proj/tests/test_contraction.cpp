#include "doctest.h"

#include <random>

#include "starq/contraction.hpp"
#include "test_support.hpp"

using namespace starq;
using namespace starq::testing;

namespace {
MultivectorX th(int d, int i) { return MultivectorX::generator(d, i); }
}  // namespace

TEST_CASE("contraction on generators and the unit") {
  std::mt19937_64 rng(101);
  const int d = 4;
  BilinearFormX B = random_form(rng, d);
  // theta_i -| 1 = 0 and 1 -| u = u
  for (int i = 1; i <= d; ++i)
    CHECK(contract_rules(th(d, i), MultivectorX::unit(d), B).is_zero());
  MultivectorX u = random_multivector(rng, d);
  CHECK(contract_rules(MultivectorX::unit(d), u, B) == u);
  // theta_i -| theta_j = B(i,j)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      CHECK(contract_rules(th(d, i + 1), th(d, j + 1), B) == MultivectorX::scalar(d, B(i, j)));
}

TEST_CASE("graded Leibniz rule for generator contraction") {
  std::mt19937_64 rng(103);
  const int d = 5;
  for (int trial = 0; trial < 100; ++trial) {
    BilinearFormX B = random_form(rng, d);
    MultivectorX u = random_monomial(rng, d), v = random_monomial(rng, d);
    int gu = 0;
    u.is_homogeneous(&gu);
    for (int i = 1; i <= d; ++i) {
      MultivectorX lhs = contract_rules(th(d, i), u * v, B);
      MultivectorX rhs = contract_rules(th(d, i), u, B) * v +
                         ExactScalar(gu % 2 == 0 ? 1 : -1) * (u * contract_rules(th(d, i), v, B));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("closed form equals rule-based contraction") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 7);  // up to d = 8
    BilinearFormX B = random_form(rng, d);
    MultivectorX u = random_monomial(rng, d), v = random_monomial(rng, d);
    CHECK(contract_closed(u, v, B) == contract_rules(u, v, B));
    // and on non-homogeneous input, per homogeneous component
    MultivectorX um = random_multivector(rng, d);
    CHECK(contract_closed(um, v, B) == contract_rules(um, v, B));
  }
}

TEST_CASE("contraction axiom (uv) -| w = u -| (v -| w)") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 7);
    BilinearFormX B = random_form(rng, d);
    MultivectorX u = random_monomial(rng, d), v = random_monomial(rng, d),
                 w = random_monomial(rng, d);
    CHECK(contract_rules(u * v, w, B) == contract_rules(u, contract_rules(v, w, B), B));
  }
}

TEST_CASE("grade law pi(u -| v) = pi(v) - pi(u)") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 4);
    BilinearFormX B = random_form(rng, d);
    MultivectorX u = random_monomial(rng, d), v = random_monomial(rng, d);
    int gu = 0, gv = 0;
    u.is_homogeneous(&gu);
    v.is_homogeneous(&gv);
    MultivectorX r = contract_rules(u, v, B);
    if (r.is_zero()) continue;
    int gr = 0;
    CHECK(r.is_homogeneous(&gr));
    CHECK(gr == gv - gu);
  }
}

TEST_CASE("contraction of grade 3 into grade 2 vanishes") {
  std::mt19937_64 rng(127);
  const int d = 5;
  BilinearFormX B = random_form(rng, d);
  MultivectorX u = th(d, 1) * th(d, 2) * th(d, 3);
  MultivectorX v = th(d, 4) * th(d, 5);
  CHECK(contract_closed(u, v, B).is_zero());
}

TEST_CASE("generator contraction is B-weighted derivative") {
  std::mt19937_64 rng(131);
  const int d = 5;
  for (int trial = 0; trial < 50; ++trial) {
    BilinearFormX B = random_form(rng, d);
    MultivectorX v = random_multivector(rng, d);
    for (int i = 0; i < d; ++i) {
      MultivectorX expected(d);
      for (int j = 0; j < d; ++j) expected += B(i, j) * v.left_derivative(j);
      CHECK(contract_rules(th(d, i + 1), v, B) == expected);
    }
  }
}

TEST_CASE("circle product of two generators") {
  std::mt19937_64 rng(137);
  const int d = 4;
  BilinearFormX B = random_form(rng, d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      MultivectorX expected = th(d, i) * th(d, j) + MultivectorX::scalar(d, B(i - 1, j - 1));
      CHECK(circle_product(th(d, i), th(d, j), B) == expected);
    }
}

TEST_CASE("circle anticommutator gives twice the symmetric part") {
  std::mt19937_64 rng(139);
  const int d = 5;
  BilinearFormX B = random_form(rng, d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      MultivectorX lhs = circle_anticommutator(th(d, i), th(d, j), B);
      CHECK(lhs == MultivectorX::scalar(d, ExactScalar(2) * B.g(i - 1, j - 1)));
    }
}

TEST_CASE("circle product is associative") {
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    BilinearFormX B = random_form(rng, d);
    MultivectorX u = random_multivector(rng, d), v = random_multivector(rng, d),
                 w = random_multivector(rng, d);
    CHECK(circle_product(circle_product(u, v, B), w, B) ==
          circle_product(u, circle_product(v, w, B), B));
  }
}

TEST_CASE("lowest-grade term of the circle product is the contraction") {
  std::mt19937_64 rng(151);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 4);
    BilinearFormX B = random_form(rng, d);
    MultivectorX u = random_monomial(rng, d), v = random_monomial(rng, d);
    int gu = 0, gv = 0;
    u.is_homogeneous(&gu);
    v.is_homogeneous(&gv);
    if (gu > gv) continue;
    MultivectorX prod = circle_product(u, v, B);
    CHECK(prod.grade_part(gv - gu) == contract_closed(u, v, B));
  }
}

TEST_CASE("Clifford map basics and composition") {
  std::mt19937_64 rng(157);
  const int d = 4;
  BilinearFormX B = random_form(rng, d);
  // gamma_{theta_i}(1) = theta_i
  for (int i = 1; i <= d; ++i)
    CHECK(clifford_map(th(d, i), MultivectorX::unit(d), B) == th(d, i));
  // gamma_{theta_i} u = theta_i u + theta_i -| u
  for (int trial = 0; trial < 50; ++trial) {
    MultivectorX u = random_multivector(rng, d);
    for (int i = 1; i <= d; ++i)
      CHECK(clifford_map(th(d, i), u, B) == th(d, i) * u + contract_rules(th(d, i), u, B));
  }
  // gamma_u gamma_v = gamma_{u o v}
  for (int trial = 0; trial < 50; ++trial) {
    MultivectorX u = random_multivector(rng, d), v = random_multivector(rng, d),
                 w = random_multivector(rng, d);
    CHECK(clifford_map(u, clifford_map(v, w, B), B) ==
          clifford_map(circle_product(u, v, B), w, B));
  }
}

TEST_CASE("two-generator Clifford map expansion") {
  // gamma_i gamma_j u = B(i,j) u + (theta_i theta_j) -| u + theta_i theta_j u
  //                     + theta_i (theta_j -| u) - theta_j (theta_i -| u)
  std::mt19937_64 rng(163);
  const int d = 5;
  for (int trial = 0; trial < 50; ++trial) {
    BilinearFormX B = random_form(rng, d);
    MultivectorX u = random_multivector(rng, d);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        MultivectorX lhs = clifford_map(th(d, i), clifford_map(th(d, j), u, B), B);
        MultivectorX rhs = B(i - 1, j - 1) * u + contract_rules(th(d, i) * th(d, j), u, B) +
                           th(d, i) * th(d, j) * u + th(d, i) * contract_rules(th(d, j), u, B) -
                           th(d, j) * contract_rules(th(d, i), u, B);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("Clifford anticommutator on arbitrary elements") {
  std::mt19937_64 rng(167);
  const int d = 4;
  for (int trial = 0; trial < 30; ++trial) {
    BilinearFormX B = random_form(rng, d);
    MultivectorX u = random_multivector(rng, d);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        MultivectorX lhs = clifford_map(th(d, i), clifford_map(th(d, j), u, B), B) +
                           clifford_map(th(d, j), clifford_map(th(d, i), u, B), B);
        CHECK(lhs == ExactScalar(2) * B.g(i - 1, j - 1) * u);
      }
  }
}

TEST_CASE("Pauli form Cliffordization") {
  const int d = 3;
  BilinearFormX P = BilinearFormX::pauli(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      MultivectorX anti = circle_anticommutator(th(d, i), th(d, j), P);
      ExactScalar expected = i == j ? ExactScalar::hbar() : ExactScalar::zero();
      CHECK(anti == MultivectorX::scalar(d, expected));
    }
}
