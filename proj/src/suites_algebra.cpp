#include "starq/contraction.hpp"
#include "starq/spin.hpp"
#include "starq/suites.hpp"
#include "starq/wick.hpp"
#include "suites_common.hpp"

namespace starq {

namespace {

MultivectorX th(int d, int i) { return MultivectorX::generator(d, i); }

}  // namespace

void suite_cliffordization(const RunConfig& cfg, Recorder& rec) {
  std::mt19937_64 rng(cfg.seed);
  const bool exact = cfg.exact();
  const double hb = cfg.hbar;

  // generator relations
  {
    const int d = 4;
    bool pass = (th(d, 1) * th(d, 1)).is_zero() && th(d, 1) * th(d, 2) == -(th(d, 2) * th(d, 1));
    MultivectorX lhs = (th(d, 1) * th(d, 2)) * (th(d, 3) * th(d, 4));
    pass = pass && lhs == th(d, 1) * th(d, 2) * th(d, 3) * th(d, 4);
    rec.check_exact("cliffordization.wedge-relations",
                    "generator nilpotency, antisymmetry, transposition sign", pass);
  }

  // closed-form contraction vs rule-based recursion + contraction axioms
  {
    double worst = 0.0;
    bool pass = true;
    for (int trial = 0; trial < cfg.cliffordization_draws; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 7);
      BilinearFormX B = detail::random_form(rng, d);
      MultivectorX u = detail::random_monomial(rng, d), v = detail::random_monomial(rng, d),
                   w = detail::random_monomial(rng, d);
      if (exact) {
        MultivectorX diff1 = contract_closed(u, v, B) - contract_rules(u, v, B);
        MultivectorX diff2 =
            contract_rules(u * v, w, B) - contract_rules(u, contract_rules(v, w, B), B);
        pass = pass && diff1.is_zero() && diff2.is_zero();
        worst = std::max(worst, std::max(detail::residual_norm(diff1), detail::residual_norm(diff2)));
      } else {
        BilinearFormC Bc = B.to_complex(hb, 1.0);
        MultivectorC uc = u.to_complex(hb, 1.0), vc = v.to_complex(hb, 1.0),
                     wc = w.to_complex(hb, 1.0);
        worst = std::max(worst,
                         (contract_closed(uc, vc, Bc) - contract_rules(uc, vc, Bc)).norm_inf());
        worst = std::max(worst, (contract_rules(uc * vc, wc, Bc) -
                                 contract_rules(uc, contract_rules(vc, wc, Bc), Bc))
                                    .norm_inf());
      }
    }
    if (exact)
      rec.check_exact("cliffordization.closed-vs-rules",
                      "closed-form contraction equals the recursive rules; (uv)-|w = u-|(v-|w)",
                      pass, worst);
    else
      rec.check_float("cliffordization.closed-vs-rules",
                      "closed-form contraction equals the recursive rules; (uv)-|w = u-|(v-|w)",
                      worst, cfg.tolerance);
  }

  // grade law and basic contraction values
  {
    bool pass = true;
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 3 + static_cast<int>(rng() % 4);
      BilinearFormX B = detail::random_form(rng, d);
      MultivectorX u = detail::random_monomial(rng, d), v = detail::random_monomial(rng, d);
      int gu = 0, gv = 0, gr = 0;
      u.is_homogeneous(&gu);
      v.is_homogeneous(&gv);
      MultivectorX r = contract_rules(u, v, B);
      if (!r.is_zero()) pass = pass && r.is_homogeneous(&gr) && gr == gv - gu;
      pass = pass && contract_rules(th(d, 1), MultivectorX::unit(d), B).is_zero();
      pass = pass && contract_rules(MultivectorX::unit(d), v, B) == v;
      pass = pass && contract_rules(th(d, 1), th(d, 2), B) == MultivectorX::scalar(d, B(0, 1));
    }
    rec.check_exact("cliffordization.contraction-grades",
                    "grade law pi(u -| v) = pi(v) - pi(u); unit and generator rules", pass);
  }

  // circle product: values, anticommutator, associativity, lowest grade
  {
    double worst = 0.0;
    bool pass = true;
    const int assoc_draws = std::max(100, cfg.cliffordization_draws / 5);
    for (int trial = 0; trial < assoc_draws; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 5);
      BilinearFormX B = detail::random_form(rng, d);
      MultivectorX u = detail::random_multivector(rng, d), v = detail::random_multivector(rng, d),
                   w = detail::random_multivector(rng, d);
      if (exact) {
        MultivectorX diff =
            circle_product(circle_product(u, v, B), w, B) - circle_product(u, circle_product(v, w, B), B);
        pass = pass && diff.is_zero();
        worst = std::max(worst, detail::residual_norm(diff));
      } else {
        BilinearFormC Bc = B.to_complex(hb, 1.0);
        MultivectorC uc = u.to_complex(hb, 1.0), vc = v.to_complex(hb, 1.0),
                     wc = w.to_complex(hb, 1.0);
        worst = std::max(worst, (circle_product(circle_product(uc, vc, Bc), wc, Bc) -
                                 circle_product(uc, circle_product(vc, wc, Bc), Bc))
                                    .norm_inf());
      }
      // theta_i o theta_j and the anticommutator, exact in both backends
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
          MultivectorX prod = circle_product(th(d, i), th(d, j), B);
          pass = pass && prod == th(d, i) * th(d, j) + MultivectorX::scalar(d, B(i - 1, j - 1));
          MultivectorX anti = circle_anticommutator(th(d, i), th(d, j), B);
          pass = pass && anti == MultivectorX::scalar(d, ExactScalar(2) * B.g(i - 1, j - 1));
        }
      // lowest-grade term of the circle product equals the contraction
      MultivectorX um = detail::random_monomial(rng, d), vm = detail::random_monomial(rng, d);
      int gu = 0, gv = 0;
      um.is_homogeneous(&gu);
      vm.is_homogeneous(&gv);
      if (gu <= gv)
        pass = pass && circle_product(um, vm, B).grade_part(gv - gu) == contract_closed(um, vm, B);
    }
    if (exact)
      rec.check_exact("cliffordization.circle-product",
                      "circle associativity, generator values, 2g anticommutator, lowest grade",
                      pass, worst);
    else
      rec.check_float("cliffordization.circle-product",
                      "circle associativity, generator values, 2g anticommutator, lowest grade",
                      worst, cfg.tolerance);
  }

  // Clifford map
  {
    bool pass = true;
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 3 + static_cast<int>(rng() % 3);
      BilinearFormX B = detail::random_form(rng, d);
      MultivectorX u = detail::random_multivector(rng, d);
      for (int i = 1; i <= d; ++i) {
        pass = pass && clifford_map(th(d, i), MultivectorX::unit(d), B) == th(d, i);
        pass = pass &&
               clifford_map(th(d, i), u, B) == th(d, i) * u + contract_rules(th(d, i), u, B);
        for (int j = 1; j <= d; ++j) {
          MultivectorX anti = clifford_map(th(d, i), clifford_map(th(d, j), u, B), B) +
                              clifford_map(th(d, j), clifford_map(th(d, i), u, B), B);
          pass = pass && anti == ExactScalar(2) * B.g(i - 1, j - 1) * u;
        }
      }
      MultivectorX v = detail::random_multivector(rng, d), w = detail::random_multivector(rng, d);
      pass = pass && clifford_map(u, clifford_map(v, w, B), B) ==
                         clifford_map(circle_product(u, v, B), w, B);
    }
    rec.check_exact("cliffordization.clifford-map",
                    "gamma_v u = v o u, composition law, Clifford anticommutator on any u", pass);
  }

  // involution, Hodge dual, Berezin integral, trace
  {
    bool pass = true;
    const ExactScalar hbar = ExactScalar::hbar();
    pass = pass && (th(3, 1) * th(3, 2)).involution() == -(th(3, 1) * th(3, 2));
    for (int i = 1; i <= 3; ++i) pass = pass && sigma_mv(3, i).involution() == sigma_mv(3, i);
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 5);
      MultivectorX a = detail::random_multivector(rng, d), b = detail::random_multivector(rng, d);
      pass = pass && a.involution().involution() == a;
      pass = pass && (a * b).involution() == b.involution() * a.involution();
      const long n = 1L << (d / 2);
      pass = pass && a.trace(hbar) == ExactScalar(n) * a.scalar_part();
    }
    pass = pass && th(3, 1).hodge() == th(3, 2) * th(3, 3);
    pass = pass && MultivectorX::unit(3).hodge() == th(3, 1) * th(3, 2) * th(3, 3);
    for (std::uint32_t m = 0; m < 8; ++m) {
      MultivectorX u = MultivectorX::blade(3, m, ExactScalar::one());
      pass = pass && u.hodge().hodge() == u;
    }
    pass = pass && th(1, 1).berezin_integral(hbar) == hbar;
    pass = pass && MultivectorX::unit(3).berezin_integral(hbar).is_zero();
    pass = pass && (th(3, 1) * th(3, 2) * th(3, 3)).berezin_integral(hbar) == hbar * hbar * hbar;
    BilinearFormX P3 = BilinearFormX::pauli(3);
    for (int i = 1; i <= 3; ++i) {
      pass = pass && sigma_mv(3, i).trace(hbar).is_zero();
      for (int j = 1; j <= 3; ++j)
        pass = pass && circle_product(sigma_mv(3, i), sigma_mv(3, j), P3).trace(hbar) ==
                           ExactScalar(i == j ? 2 : 0);
    }
    pass = pass && MultivectorX::unit(4).trace(hbar) == ExactScalar(4);
    rec.check_exact("cliffordization.involution-hodge-berezin-trace",
                    "involution axioms; Hodge duals in d=3; Berezin values; trace rules", pass);
  }

  // exact scalar ring arithmetic
  {
    bool pass = true;
    std::uniform_int_distribution<int> pw(-2, 2);
    auto rand_scalar = [&] {
      ExactScalar s;
      for (int t = 0; t < 3; ++t) {
        Coeff c(GaussianRational(detail::random_rational(rng), detail::random_rational(rng)),
                GaussianRational(detail::random_rational(rng), detail::random_rational(rng)));
        s += ExactScalar::monomial(c, pw(rng), pw(rng));
      }
      return s;
    };
    for (int k = 0; k < 200; ++k) {
      ExactScalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
      pass = pass && (a * b) * c == a * (b * c);
      pass = pass && a * (b + c) == a * b + a * c;
      ExactScalar n = a * a.conj();
      pass = pass && n == n.conj();
    }
    rec.check_exact("cliffordization.scalar-ring",
                    "associativity, distributivity, a conj(a) self-conjugate", pass);
  }
}

void suite_wick(const RunConfig& cfg, Recorder& rec) {
  std::mt19937_64 rng(cfg.seed + 1);
  const bool exact = cfg.exact();
  const double hb = cfg.hbar;

  auto random_grade2 = [&](int d) {
    MultivectorX out(d);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        out += MultivectorX::blade(d, (1u << i) | (1u << j),
                                   ExactScalar(detail::random_rational(rng)));
    return out;
  };

  // wedge exponential
  {
    bool pass = true;
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 5);
      MultivectorX F = random_grade2(d);
      pass = pass && grassmann_exp(F) * grassmann_exp(-F) == MultivectorX::unit(d);
      BilinearFormX B = detail::random_form(rng, d);
      MultivectorX eF = grassmann_exp(F);
      for (int i = 1; i <= d; ++i)
        pass = pass && contract_rules(MultivectorX::generator(d, i), eF, B) ==
                           contract_rules(MultivectorX::generator(d, i), F, B) * eF;
    }
    rec.check_exact("wick.grassmann-exp",
                    "e^F e^{-F} = 1; theta_i -| e^F = (theta_i -| F) e^F", pass);
  }

  // grade-2 form from the antisymmetric part
  {
    bool pass = true;
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 5);
      BilinearFormX B = detail::random_form_invertible_g(rng, d);
      WickForm<ExactScalar> wf = solve_wick_form(B);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          ExactScalar acc;
          for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s)
              acc += wf.matrix[static_cast<std::size_t>(r) * d + s] * B.g(i, s) * B.g(j, r);
          pass = pass && acc == ExactScalar::rational(1, 2) * B.a(i, j);
        }
      // scalar contraction identity and the conjugated Clifford map
      BilinearFormX g = B.symmetric_part();
      MultivectorX F = wf.form;
      MultivectorX eF = grassmann_exp(F), eFm = grassmann_exp(-F);
      MultivectorX u = detail::random_multivector(rng, d);
      for (int i = 1; i <= d; ++i) {
        MultivectorX ti = MultivectorX::generator(d, i);
        for (int j = 1; j <= d; ++j) {
          MultivectorX tj = MultivectorX::generator(d, j);
          pass = pass && contract_rules(ti, contract_rules(tj, F, g), g) ==
                             MultivectorX::scalar(d, B.a(i - 1, j - 1));
          MultivectorX anti = eFm * (clifford_map(ti, clifford_map(tj, eF * u, g), g) +
                                     clifford_map(tj, clifford_map(ti, eF * u, g), g));
          pass = pass && anti == ExactScalar(2) * g(i - 1, j - 1) * u;
        }
        pass = pass && eFm * clifford_map(ti, eF * u, g) ==
                           ti * u + contract_rules(ti, u, g) + contract_rules(ti, F, g) * u;
      }
      pass = pass && wick_conjugate(MultivectorX::unit(d), F) == MultivectorX::unit(d);
    }
    rec.check_exact("wick.form-and-conjugation",
                    "grade-2 form identity; conjugated Clifford map; anticommutator invariance",
                    pass);
    // A = 0 and singular g
    bool err = false;
    try {
      BilinearFormX singular = BilinearFormX::zero(2);
      singular.set(0, 1, ExactScalar::h(2));
      singular.set(1, 0, -ExactScalar::h(2));
      static_cast<void>(solve_wick_form(singular));
    } catch (const std::domain_error&) {
      err = true;
    }
    rec.check_exact("wick.form-edges", "A = 0 gives F = 0; singular g reports the defect",
                    solve_wick_form(BilinearFormX::pauli(3)).form.is_zero() && err);
  }

  // scalar-part equivalence theorem
  {
    double worst = 0.0;
    bool pass = true;
    const int per_n = std::max(1, cfg.wick_draws / 3);
    for (int n : {2, 4, 6}) {
      for (int trial = 0; trial < per_n; ++trial) {
        const int d = 3 + static_cast<int>(rng() % 3);
        BilinearFormX B = detail::random_form_invertible_g(rng, d);
        std::vector<int> idx;
        for (int k = 0; k < n; ++k) idx.push_back(static_cast<int>(rng() % d));
        if (exact) {
          auto repI = scalar_equivalence_check(idx, B);
          pass = pass && repI.pass;
          worst = std::max(worst, std::abs(repI.difference.to_complex(1.0, 1.0)));
        } else {
          BilinearFormC Bc = B.to_complex(hb, 1.0);
          auto repI = scalar_equivalence_check(idx, Bc);
          worst = std::max(worst, std::abs(repI.difference));
        }
      }
    }
    if (exact)
      rec.check_exact("wick.scalar-equivalence",
                      "scalar part of the B-chain equals the conjugated g-chain, n = 2,4,6", pass,
                      worst);
    else
      rec.check_float("wick.scalar-equivalence",
                      "scalar part of the B-chain equals the conjugated g-chain, n = 2,4,6", worst,
                      cfg.tolerance);
  }

  // Wick pairing oracle at n = 4 and odd chains
  {
    bool pass = true;
    for (int trial = 0; trial < 60; ++trial) {
      const int d = 4 + static_cast<int>(rng() % 3);
      BilinearFormX B = detail::random_form(rng, d);
      std::vector<int> idx;
      for (int k = 0; k < 4; ++k) idx.push_back(static_cast<int>(rng() % d));
      MultivectorX chain = MultivectorX::unit(d);
      for (int i : idx) chain = circle_product(chain, MultivectorX::generator(d, i + 1), B);
      pass = pass && chain.scalar_part() == wick_pairing_sum(idx, B);
    }
    for (int trial = 0; trial < 20; ++trial) {
      const int d = 4;
      BilinearFormX B = detail::random_form_invertible_g(rng, d);
      std::vector<int> idx = {static_cast<int>(rng() % d), static_cast<int>(rng() % d),
                              static_cast<int>(rng() % d)};
      auto repI = scalar_equivalence_check(idx, B);
      pass = pass && repI.lhs.is_zero() && repI.rhs.is_zero();
    }
    rec.check_exact("wick.pairing-formula",
                    "n = 4 scalar parts match the signed pairing sum; odd chains vanish", pass);
  }

  // the conjugation is not a T-transformation, yet scalar parts agree
  {
    const int d = 3;
    BilinearFormX B = detail::random_form_invertible_g(rng, d);
    B.set(0, 1, B(0, 1) + ExactScalar::rational(5) * ExactScalar::h(2));
    BilinearFormX g = B.symmetric_part();
    MultivectorX F = solve_wick_form(B).form;
    MultivectorX chain = circle_product(
        MultivectorX::generator(d, 1),
        circle_product(MultivectorX::generator(d, 2), grassmann_exp(F), g), g);
    MultivectorX conj = grassmann_exp(-F) * chain;
    MultivectorX direct = circle_product(MultivectorX::generator(d, 1),
                                         MultivectorX::generator(d, 2), B);
    bool pass = conj.scalar_part() == direct.scalar_part() &&
                !(conj.grade_part(2) == direct.grade_part(2));
    rec.check_exact("wick.not-a-t-transformation",
                    "conjugated grade-2 parts differ while the scalar parts agree", pass);
  }
}

}  // namespace starq
