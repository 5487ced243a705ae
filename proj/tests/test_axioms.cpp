#include <gtest/gtest.h>

#include <string>

#include "smeadow/axioms.hpp"
#include "smeadow/check.hpp"
#include "smeadow/f3_argument.hpp"
#include "smeadow/parse.hpp"

using namespace smeadow;

TEST(Catalog, SetSizes) {
  const auto c = catalog();
  EXPECT_EQ(c.md.size(), 10u);
  EXPECT_EQ(c.md_derived.size(), 7u);
  EXPECT_EQ(c.pseudo_laws.size(), 3u);
  EXPECT_EQ(c.signs.size(), 6u);
  EXPECT_EQ(c.signs_derived.size(), 4u);
  EXPECT_EQ(c.cancellation.size(), 3u);
  EXPECT_EQ(c.square_roots.size(), 4u);
  EXPECT_EQ(c.sqrt_derived.size(), 5u);
  EXPECT_EQ(c.showcase.size(), 1u);
  EXPECT_EQ(c.complex.size(), 3u);
  EXPECT_EQ(c.complex_restricted.size(), 4u);
}

TEST(Catalog, EveryTermRoundTrips) {
  const auto c = catalog();
  for (const auto* set : c.all()) {
    for (const auto& e : set->equations) {
      EXPECT_EQ(parse(render(e.lhs)), e.lhs) << e.name;
      EXPECT_EQ(parse(render(e.rhs)), e.rhs) << e.name;
    }
    for (const auto& cond : set->conditionals) {
      for (const auto& p : cond.premises) {
        EXPECT_EQ(parse(render(p.lhs)), p.lhs) << cond.name;
        EXPECT_EQ(parse(render(p.rhs)), p.rhs) << cond.name;
      }
    }
  }
}

TEST(Catalog, LookupByName) {
  EXPECT_EQ(axioms::find("Md").size(), 10u);
  EXPECT_EQ(axioms::find("IL").name, "Cancellation");
  EXPECT_EQ(axioms::find("Lagrange(2)").name, "Lagrange2");
  EXPECT_EQ(axioms::find("Md+Signs").size(), 16u);
  try {
    axioms::find("Mystery");
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("SquareRoots"), std::string::npos);
  }
}

TEST(TargetModel, Parse) {
  EXPECT_EQ(TargetModel::parse("fp:7").p, 7u);
  EXPECT_EQ(TargetModel::parse("exact").name(), "exact");
  EXPECT_THROW(TargetModel::parse("fp:"), std::invalid_argument);
  EXPECT_THROW(TargetModel::parse("reals"), std::invalid_argument);
}

TEST(Check, ExhaustiveCountsValuations) {
  const auto r = check_equation(equation("add_zero", "x + 0", "x", "test"), TargetModel::finite(7));
  EXPECT_EQ(r.mode, Mode::exhaustive);
  EXPECT_EQ(r.trials, 7u);
  EXPECT_TRUE(r.pass());
  const auto three = check_equation(axioms::meadow().equations[0], TargetModel::finite(5));
  EXPECT_EQ(three.trials, 125u);
}

TEST(Check, NaiveInverseFailsOnlyAtZero) {
  const auto r = check_equation(axioms::naive_inverse().equations[0], TargetModel::finite(5));
  EXPECT_EQ(r.failure_count, 1u);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].valuation.at(0).first, "x");
  EXPECT_EQ(r.failures[0].valuation.at(0).second.term, "0");
  EXPECT_EQ(r.failures[0].lhs.term, "0");
  EXPECT_EQ(r.failures[0].rhs.term, "1");
}

TEST(Check, RandomizedExact) {
  CheckParams params;
  params.trials = 500;
  const auto r = check_equation(axioms::sqrt_derived().equations[4], TargetModel::exact(), params);
  EXPECT_EQ(r.equation, "sqrt_square");
  EXPECT_EQ(r.trials, 500u);
  EXPECT_TRUE(r.pass());
}

TEST(Check, ShowcaseAtBoundary) {
  Session s;
  const auto e = axioms::showcase().equations[0];
  const ExactValuation val{{"b", s.one()}};
  EXPECT_EQ(eval_exact(e.lhs, val, s), s.zero());
  EXPECT_EQ(eval_exact(e.rhs, val, s), s.zero());
  EXPECT_TRUE(holds_at(e, val, s));
  // Away from the boundary both sides equal 1/sqrt(1 - b).
  const ExactValuation half{{"b", s.rational(1, 2)}};
  EXPECT_EQ(eval_exact(e.lhs, half, s), inv(ssqrt(s.rational(1, 2))));
  EXPECT_TRUE(holds_at(e, half, s));
}

TEST(Check, InverseLawSkipsZero) {
  const auto r = check_conditional(axioms::cancellation().conditionals[0], TargetModel::finite(7));
  EXPECT_EQ(r.satisfied, 6u);
  EXPECT_EQ(r.skipped, 1u);
  EXPECT_TRUE(r.pass());
}

TEST(Check, CancellationOverF5) {
  for (const auto& r : run_suite(axioms::cancellation(), TargetModel::finite(5))) {
    EXPECT_TRUE(r.pass()) << r.equation;
    EXPECT_EQ(r.satisfied + r.skipped, r.trials);
    EXPECT_GT(r.satisfied, 0u);
  }
}

TEST(Check, ConditionalSignAddExact) {
  CheckParams params;
  params.trials = 500;
  const auto r = check_conditional(axioms::signs_derived().conditionals[0], TargetModel::exact(), params);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.satisfied + r.skipped, 500u);
  EXPECT_GT(r.satisfied, 100u);
}

TEST(Check, ConditionalAccountingEverywhere) {
  CheckParams params;
  params.trials = 200;
  for (const auto& model : {TargetModel::exact(), TargetModel::finite(7)})
    for (const auto& set : {axioms::cancellation(), axioms::signs_derived()}) {
      if (model.kind == TargetModel::Kind::finite && set.name == "SignsDerived") continue;
      for (const auto& r : run_suite(set, model, params)) {
        EXPECT_TRUE(r.pass()) << r.equation << " " << r.model;
        EXPECT_EQ(r.satisfied + r.skipped, r.trials) << r.equation;
      }
    }
}

TEST(Check, UnsupportedSymbolIsRejected) {
  EXPECT_THROW(run_suite(axioms::signs(), TargetModel::finite(5)), unsupported_symbol);
  EXPECT_THROW(run_suite(axioms::complex_axioms(), TargetModel::exact()), unsupported_symbol);
}

TEST(Check, LagrangeOneOverF5) {
  const auto reports = run_suite(axioms::lagrange(1), TargetModel::finite(5));
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_FALSE(reports[0].pass());
  ASSERT_FALSE(reports[0].failures.empty());
  EXPECT_EQ(reports[0].failures[0].valuation.at(0).second.term, "2");
  EXPECT_TRUE(all_pass(run_suite(axioms::lagrange(1), TargetModel::finite(7))));
}

TEST(Check, Deterministic) {
  CheckParams params;
  params.trials = 200;
  params.seed = 42;
  const auto a = run_suite(axioms::square_roots(), TargetModel::exact(), params);
  const auto b = run_suite(axioms::square_roots(), TargetModel::exact(), params);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].trials, b[i].trials);
    EXPECT_EQ(a[i].failure_count, b[i].failure_count);
  }
  // A false equation produces the same failures on every run.
  const auto e = equation("bogus", "sqrt(x + y)", "sqrt(x) + sqrt(y)", "test");
  const auto f1 = check_equation(e, TargetModel::exact(), params);
  const auto f2 = check_equation(e, TargetModel::exact(), params);
  EXPECT_FALSE(f1.pass());
  EXPECT_EQ(f1.failure_count, f2.failure_count);
  ASSERT_EQ(f1.failures.size(), f2.failures.size());
  for (std::size_t i = 0; i < f1.failures.size(); ++i) EXPECT_EQ(f1.failures[i].lhs.term, f2.failures[i].lhs.term);
  EXPECT_LE(f1.failures.size(), CheckReport::kMaxFailures);
}

TEST(Propagation, ManualInstance) {
  // t = x, r = y, C = sqrt([]) with x = 3, y = 2.
  Session s;
  const ExactValuation val{{"x", s.rational(3)}, {"y", s.rational(2)}};
  for (auto kind : {PropagationKind::pseudo_unit, PropagationKind::pseudo_zero}) {
    const auto e = propagation_equation(kind, parse("x"), parse("y"), parse("sqrt([])"));
    EXPECT_TRUE(holds_at(e, val, s));
  }
  const auto unit = propagation_equation(PropagationKind::pseudo_unit, parse("x"), parse("y"), parse("sqrt([])"));
  EXPECT_EQ(eval_exact(unit.lhs, val, s), ssqrt(s.rational(2)));
}

TEST(Propagation, ZeroGuard) {
  Session s;
  const ExactValuation val{{"x", s.zero()}, {"y", s.rational(-5)}};
  const auto unit = propagation_equation(PropagationKind::pseudo_unit, parse("x"), parse("y"), parse("s([]) + 1"));
  EXPECT_EQ(eval_exact(unit.lhs, val, s), s.zero());
  EXPECT_TRUE(holds_at(unit, val, s));
  const auto zero = propagation_equation(PropagationKind::pseudo_zero, parse("x"), parse("y"), parse("s([]) + 1"));
  EXPECT_EQ(eval_exact(zero.lhs, val, s), s.zero());
  EXPECT_TRUE(holds_at(zero, val, s));
}

TEST(Propagation, RandomTrials) {
  PropagationParams params;
  params.trials = 300;
  for (auto kind : {PropagationKind::pseudo_unit, PropagationKind::pseudo_zero}) {
    const auto r = check_propagation(kind, params);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.trials, 300u);
    EXPECT_GT(r.counters.at("context_with_sqrt"), 0u);
    EXPECT_GT(r.counters.at("context_with_sign"), 0u);
  }
}

TEST(F3, Argument) {
  const auto r = verify_f3_argument();
  EXPECT_EQ(r.squares, (std::vector<Residue>{0, 1}));
  EXPECT_TRUE(r.lagrange1_holds);
  EXPECT_TRUE(r.md_and_l1_pass);
  EXPECT_EQ(r.md_and_l1.size(), 11u);
  EXPECT_EQ(r.finite_value, 0u);
  EXPECT_EQ(r.exact_value, 1);
  EXPECT_TRUE(r.pass());
}
