#include "doctest.h"

#include "starq/fw.hpp"

using namespace starq;

namespace {
FWContext make_ctx() { return FWContext(ExactScalar(2), ExactScalar::rational(3, 4)); }

std::array<PhaseFunctionX, 3> zero_potential(const FWContext& ctx) {
  return {PhaseFunctionX(ctx.spec.syms, 4), PhaseFunctionX(ctx.spec.syms, 4),
          PhaseFunctionX(ctx.spec.syms, 4)};
}
}  // namespace

TEST_CASE("parity split of the free Dirac Hamiltonian") {
  FWContext ctx = make_ctx();
  PhaseFunctionX phi(ctx.spec.syms, 4);
  PhaseFunctionX H = ctx.dirac_hamiltonian_over_mc2(zero_potential(ctx), phi);
  auto [even, odd] = ctx.parity_split(H);
  CHECK(even.is_zero());
  // O = alpha.p / (m c)
  PhaseFunctionX expected(ctx.spec.syms, 4);
  const ExactScalar inv_mc = (ctx.mass * ExactScalar::c()).inverse();
  for (int i = 0; i < 3; ++i)
    expected += (inv_mc * ctx.symbol("p" + std::to_string(i + 1))) * ctx.rep.alpha[i];
  CHECK(odd.equals(expected));
  // beta itself splits to (0, 0)
  auto [eb, ob] = ctx.parity_split(ctx.beta_pf());
  CHECK(eb.is_zero());
  CHECK(ob.is_zero());
  // the split is idempotent: re-splitting beta + E + O returns (E, O)
  PhaseFunctionX recomposed = ctx.beta_pf() + even + odd;
  auto [even2, odd2] = ctx.parity_split(recomposed);
  CHECK(even2.equals(even));
  CHECK(odd2.equals(odd));
  // parity grading: beta (E) beta = E, beta O beta = -O
  PhaseFunctionX bob = ctx.star(ctx.star(ctx.beta_pf(), odd), ctx.beta_pf());
  CHECK(bob.equals(-odd));
}

TEST_CASE("parity split with electromagnetic potentials") {
  FWContext ctx = make_ctx();
  // A = (B/2)(-q2, q1, 0), phi = q1^2
  const ExactScalar b3 = ExactScalar::rational(5, 3);
  std::array<PhaseFunctionX, 3> A = zero_potential(ctx);
  A[0] = (ExactScalar::rational(-1, 2) * b3) * ctx.symbol("q2");
  A[1] = (ExactScalar::rational(1, 2) * b3) * ctx.symbol("q1");
  PhaseFunctionX phi = ctx.symbol("q1").pointwise_product(ctx.symbol("q1"));
  PhaseFunctionX H = ctx.dirac_hamiltonian_over_mc2(A, phi);
  auto [even, odd] = ctx.parity_split(H);
  // E = e phi / (m c^2)
  const ExactScalar c = ExactScalar::c();
  PhaseFunctionX expected_even = ((ctx.charge) / (ctx.mass * c * c)) * phi;
  CHECK(even.equals(expected_even));
  // O = alpha.(c p - e A)/(m c^2)
  PhaseFunctionX expected_odd(ctx.spec.syms, 4);
  const ExactScalar inv_mc2 = (ctx.mass * c * c).inverse();
  for (int i = 0; i < 3; ++i) {
    PhaseFunctionX vi = c * ctx.symbol("p" + std::to_string(i + 1)) - ctx.charge * A[i];
    expected_odd += (inv_mc2 * vi) * ctx.rep.alpha[i];
  }
  CHECK(odd.equals(ctx.truncate(expected_odd)));
}

TEST_CASE("scalar-odd oracle: even part resums to beta(1 + O^2/2 - O^4/8)") {
  // O with constant coefficients: O = mu alpha^3 / c; then O*O is scalar and
  // the transformed even part must match the series exactly.
  FWContext ctx = make_ctx();
  const ExactScalar mu = ExactScalar::rational(2, 5);
  PhaseFunctionX O = (mu * ExactScalar::c(-1)) * ctx.constant(ctx.rep.alpha[2]);
  PhaseFunctionX H = ctx.beta_pf() + O;
  PhaseFunctionX H1 = ctx.fw_step(H);
  auto [even, odd] = ctx.parity_split(H1);
  PhaseFunctionX O2 = ctx.star(O, O);
  PhaseFunctionX O4 = ctx.star(O2, O2);
  PhaseFunctionX expected =
      ctx.truncate(ctx.beta_pf().pointwise_product(PhaseFunctionX::unit(ctx.spec.syms, 4) +
                                                   ExactScalar::rational(1, 2) * O2 -
                                                   ExactScalar::rational(1, 8) * O4)) -
      ctx.beta_pf();
  CHECK(even.equals(expected));
  // with E = 0 the remaining odd part is exactly the -(1/3) O^3 row
  PhaseFunctionX O3 = ctx.star(O2, O);
  CHECK(odd.equals(ExactScalar::rational(-1, 3) * O3));
}

TEST_CASE("transformation pushes the odd part to order (1/c)^3 and then kills it") {
  FWContext ctx = make_ctx();
  const ExactScalar b3 = ExactScalar::rational(1, 2);
  std::array<PhaseFunctionX, 3> A = zero_potential(ctx);
  A[0] = (ExactScalar::rational(-1, 2) * b3) * ctx.symbol("q2");
  A[1] = (ExactScalar::rational(1, 2) * b3) * ctx.symbol("q1");
  PhaseFunctionX phi = ctx.symbol("q3").pointwise_product(ctx.symbol("q3"));
  PhaseFunctionX H = ctx.dirac_hamiltonian_over_mc2(A, phi);
  PhaseFunctionX H1 = ctx.fw_step(H);
  auto [e1, o1] = ctx.parity_split(H1);
  CHECK_FALSE(o1.is_zero());
  int odd_max = -100;
  for (const auto& part : o1.parts())
    for (const auto& [m, v] : part.poly)
      for (const auto& [mask, coeff] : v.terms()) odd_max = std::max(odd_max, coeff.max_c_degree());
  CHECK(odd_max <= -3);
  PhaseFunctionX H2 = ctx.fw_step(H1);
  auto [e2, o2] = ctx.parity_split(H2);
  CHECK(o2.is_zero());
}

TEST_CASE("unitarity holds to the truncation order") {
  FWContext ctx = make_ctx();
  std::array<PhaseFunctionX, 3> A = zero_potential(ctx);
  A[1] = ctx.symbol("q1");
  PhaseFunctionX phi = ctx.symbol("q2");
  PhaseFunctionX H = ctx.dirac_hamiltonian_over_mc2(A, phi);
  PhaseFunctionX defect = ctx.unitarity_defect(H);
  CHECK(defect.is_zero());
}

TEST_CASE("free particle: H'' = beta(mc^2 + p^2/2m - p^4/8m^3c^2)") {
  FWContext ctx = make_ctx();
  FWReport rep = fw_dirac_em(ctx, zero_potential(ctx), PhaseFunctionX(ctx.spec.syms, 4));
  CHECK(rep.pass);
  CHECK(rep.residual.is_zero());
  // only the kinetic term is present
  for (const auto& t : rep.terms) {
    CHECK(t.match);
    if (t.name != "kinetic") CHECK(t.target.is_zero());
  }
}

TEST_CASE("constant magnetic field: magnetic-moment term with exact coefficient") {
  FWContext ctx = make_ctx();
  const ExactScalar b3 = ExactScalar::rational(7, 2);
  std::array<PhaseFunctionX, 3> A = zero_potential(ctx);
  A[0] = (ExactScalar::rational(-1, 2) * b3) * ctx.symbol("q2");
  A[1] = (ExactScalar::rational(1, 2) * b3) * ctx.symbol("q1");
  FWReport rep = fw_dirac_em(ctx, A, PhaseFunctionX(ctx.spec.syms, 4));
  CHECK(rep.pass);
  for (const auto& t : rep.terms) {
    CHECK(t.match);
    if (t.name == "magnetic-moment") {
      CHECK_FALSE(t.target.is_zero());
      // -(e hbar / 2mc) beta * sigma3 B3
      PhaseFunctionX expected = ctx.truncate(
          ((-(ctx.charge * ExactScalar::hbar() * b3)) /
           (ExactScalar(2) * ctx.mass * ExactScalar::c())) *
          ctx.constant(circle_product(ctx.rep.beta, sigma_mv(4, 3), ctx.rep.form)));
      CHECK(t.target.equals(expected));
    }
    if (t.name == "spin-orbit") CHECK(t.target.is_zero());
    if (t.name == "darwin") CHECK(t.target.is_zero());
  }
}

TEST_CASE("linear potential: spin-orbit term, no Darwin term") {
  FWContext ctx = make_ctx();
  // phi = q1 gives a uniform field E = (-1, 0, 0) and div E = 0
  PhaseFunctionX phi = ctx.symbol("q1");
  FWReport rep = fw_dirac_em(ctx, zero_potential(ctx), phi);
  CHECK(rep.pass);
  for (const auto& t : rep.terms) {
    CHECK(t.match);
    if (t.name == "spin-orbit") CHECK_FALSE(t.target.is_zero());
    if (t.name == "darwin") CHECK(t.target.is_zero());
  }
}

TEST_CASE("quadratic potential: Darwin term with constant div E") {
  FWContext ctx = make_ctx();
  PhaseFunctionX q1 = ctx.symbol("q1"), q2 = ctx.symbol("q2");
  PhaseFunctionX phi = q1.pointwise_product(q1) + q2.pointwise_product(q2);
  FWReport rep = fw_dirac_em(ctx, zero_potential(ctx), phi);
  CHECK(rep.pass);
  bool saw_darwin = false;
  for (const auto& t : rep.terms) {
    CHECK(t.match);
    if (t.name == "darwin") {
      saw_darwin = true;
      CHECK_FALSE(t.target.is_zero());
      // div E = -4: term +(e hbar^2 / 2 m^2 c^2)
      PhaseFunctionX expected = ctx.truncate(PhaseFunctionX::scalar(
          ctx.spec.syms, 4,
          (ctx.charge * ExactScalar::hbar(2)) /
              (ExactScalar(2) * ctx.mass * ctx.mass * ExactScalar::c(2))));
      CHECK(t.target.equals(expected));
    }
  }
  CHECK(saw_darwin);
}

TEST_CASE("combined fields pass the full term-by-term comparison") {
  FWContext ctx = make_ctx();
  const ExactScalar b3 = ExactScalar::rational(1, 3);
  std::array<PhaseFunctionX, 3> A = zero_potential(ctx);
  A[0] = (ExactScalar::rational(-1, 2) * b3) * ctx.symbol("q2");
  A[1] = (ExactScalar::rational(1, 2) * b3) * ctx.symbol("q1");
  PhaseFunctionX q1 = ctx.symbol("q1"), q3 = ctx.symbol("q3");
  PhaseFunctionX phi = q1.pointwise_product(q1) + q3;
  FWReport rep = fw_dirac_em(ctx, A, phi);
  CHECK(rep.pass);
  CHECK(rep.residual.is_zero());
  CHECK(rep.odd_max_order <= -3);
  CHECK(rep.odd_vanishes_after_second_step);
}

TEST_CASE("degree bound on the potentials is enforced") {
  FWContext ctx = make_ctx();
  PhaseFunctionX q1 = ctx.symbol("q1");
  PhaseFunctionX cubic = q1.pointwise_product(q1).pointwise_product(q1);
  CHECK_THROWS_AS(fw_dirac_em(ctx, zero_potential(ctx), cubic), std::invalid_argument);
}
