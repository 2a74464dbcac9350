#include "starq/fw.hpp"
#include "starq/suites.hpp"
#include "suites_common.hpp"

namespace starq {

void suite_fw(const RunConfig& cfg, Recorder& rec) {
  const bool exact = cfg.exact();
  const double hb = cfg.hbar;
  FWContext ctx(ExactScalar(2), ExactScalar::rational(3, 4));
  auto zero_A = [&] {
    return std::array<PhaseFunctionX, 3>{PhaseFunctionX(ctx.spec.syms, 4),
                                         PhaseFunctionX(ctx.spec.syms, 4),
                                         PhaseFunctionX(ctx.spec.syms, 4)};
  };

  // parity split
  {
    PhaseFunctionX phi(ctx.spec.syms, 4);
    PhaseFunctionX H = ctx.dirac_hamiltonian_over_mc2(zero_A(), phi);
    auto [even, odd] = ctx.parity_split(H);
    bool pass = even.is_zero();
    PhaseFunctionX expected(ctx.spec.syms, 4);
    const ExactScalar inv_mc = (ctx.mass * ExactScalar::c()).inverse();
    for (int i = 0; i < 3; ++i)
      expected += (inv_mc * ctx.symbol("p" + std::to_string(i + 1))) * ctx.rep.alpha[i];
    pass = pass && odd.equals(expected);
    auto [eb, ob] = ctx.parity_split(ctx.beta_pf());
    pass = pass && eb.is_zero() && ob.is_zero();
    auto [even2, odd2] = ctx.parity_split(ctx.beta_pf() + even + odd);
    pass = pass && even2.equals(even) && odd2.equals(odd);
    PhaseFunctionX bob = ctx.star(ctx.star(ctx.beta_pf(), odd), ctx.beta_pf());
    pass = pass && bob.equals(-odd);
    rec.check_exact("fw.parity-split",
                    "free Dirac: E = 0, O = alpha.p/mc; idempotent split; beta O beta = -O", pass);
  }

  // scalar-odd oracle and the odd row coefficient
  {
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
    bool pass = even.equals(expected);
    pass = pass && odd.equals(ExactScalar::rational(-1, 3) * ctx.star(O2, O));
    rec.check_exact("fw.scalar-odd-oracle",
                    "even part resums to beta(1 + O^2/2 - O^4/8); odd part is -(1/3) O^3", pass);
  }

  // odd part is pushed to order (1/c)^3, then removed by the second step
  {
    const ExactScalar b3 = ExactScalar::rational(1, 2);
    std::array<PhaseFunctionX, 3> A = zero_A();
    A[0] = (ExactScalar::rational(-1, 2) * b3) * ctx.symbol("q2");
    A[1] = (ExactScalar::rational(1, 2) * b3) * ctx.symbol("q1");
    PhaseFunctionX phi = ctx.symbol("q3").pointwise_product(ctx.symbol("q3"));
    PhaseFunctionX H = ctx.dirac_hamiltonian_over_mc2(A, phi);
    PhaseFunctionX H1 = ctx.fw_step(H);
    auto [e1, o1] = ctx.parity_split(H1);
    int odd_max = -100;
    for (const auto& part : o1.parts())
      for (const auto& [m, v] : part.poly)
        for (const auto& [mask, coeff] : v.terms())
          odd_max = std::max(odd_max, coeff.max_c_degree());
    bool pass = !o1.is_zero() && odd_max <= -3;
    PhaseFunctionX H2 = ctx.fw_step(H1);
    pass = pass && ctx.parity_split(H2).second.is_zero();
    PhaseFunctionX defect = ctx.unitarity_defect(H);
    pass = pass && defect.is_zero();
    rec.check_exact("fw.odd-elimination",
                    "O' at order (1/c)^3 or deeper; no odd terms after the second step; unitary"
                    " to the truncation order",
                    pass);
  }

  // the four field configurations, term by term
  auto run_case = [&](const std::string& name, const std::array<PhaseFunctionX, 3>& A,
                      const PhaseFunctionX& phi) {
    FWReport fw = fw_dirac_em(ctx, A, phi);
    bool pass = fw.pass && fw.residual.is_zero();
    for (const auto& t : fw.terms) pass = pass && t.match;
    if (exact) {
      rec.check_exact("fw." + name, "term-by-term match of the transformed Hamiltonian", pass);
    } else {
      double worst = fw.residual.norm_inf(hb, 1.0);
      for (const auto& t : fw.terms)
        worst = std::max(worst, (t.computed - t.target).norm_inf(hb, 1.0));
      rec.check_float("fw." + name, "term-by-term residual of the transformed Hamiltonian", worst,
                      cfg.tolerance);
    }
  };

  run_case("free-particle", zero_A(), PhaseFunctionX(ctx.spec.syms, 4));
  {
    const ExactScalar b3 = ExactScalar::rational(7, 2);
    std::array<PhaseFunctionX, 3> A = zero_A();
    A[0] = (ExactScalar::rational(-1, 2) * b3) * ctx.symbol("q2");
    A[1] = (ExactScalar::rational(1, 2) * b3) * ctx.symbol("q1");
    run_case("constant-magnetic-field", A, PhaseFunctionX(ctx.spec.syms, 4));
  }
  run_case("linear-potential", zero_A(), ctx.symbol("q1"));
  {
    PhaseFunctionX q1 = ctx.symbol("q1"), q2 = ctx.symbol("q2");
    run_case("quadratic-potential", zero_A(),
             q1.pointwise_product(q1) + q2.pointwise_product(q2));
  }
  {
    const ExactScalar b3 = ExactScalar::rational(1, 3);
    std::array<PhaseFunctionX, 3> A = zero_A();
    A[0] = (ExactScalar::rational(-1, 2) * b3) * ctx.symbol("q2");
    A[1] = (ExactScalar::rational(1, 2) * b3) * ctx.symbol("q1");
    PhaseFunctionX q1 = ctx.symbol("q1"), q3 = ctx.symbol("q3");
    run_case("combined-fields", A, q1.pointwise_product(q1) + q3);
  }
}

}  // namespace starq
