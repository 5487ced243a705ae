#pragma once

// The three-element field satisfies the meadow axioms and L1, yet (1+1+1)/(1+1+1) is 0 there
// and 1 in Q_0, so (F_3)_0 is not a homomorphic image of Q_0.

#include <vector>

#include "smeadow/check.hpp"
#include "smeadow/finite_field.hpp"
#include "smeadow/kernel.hpp"
#include "smeadow/parse.hpp"

namespace smeadow {

struct F3Report {
  std::vector<Residue> squares;
  bool squares_are_zero_one = false;
  bool lagrange1_holds = false;
  std::vector<CheckReport> md_and_l1;
  bool md_and_l1_pass = false;
  Residue finite_value = 0;
  Rational exact_value;
  // finite 0 vs exact 1: any homomorphism Q_0 -> (F_3)_0 would force 0 = 1.
  bool blocks_homomorphism = false;

  bool pass() const { return squares_are_zero_one && lagrange1_holds && md_and_l1_pass && blocks_homomorphism; }
};

inline F3Report verify_f3_argument() {
  F3Report r;
  const PrimeField f3(3);
  r.squares = f3.squares();
  r.squares_are_zero_one = r.squares == std::vector<Residue>{0, 1};
  r.lagrange1_holds = lagrange_holds(f3, 1).holds;

  AxiomSet sets = axioms::meadow();
  sets += axioms::lagrange(1);
  CheckParams params;
  params.mode = Mode::exhaustive;
  r.md_and_l1 = run_suite(sets, TargetModel::finite(3), params);
  r.md_and_l1_pass = all_pass(r.md_and_l1);

  const Term display = parse("(1+1+1)/(1+1+1)");
  r.finite_value = eval_mod_p(display, {}, f3);
  Session session;
  const Real exact = eval_exact(display, session);
  r.exact_value = exact.rational_value();
  r.blocks_homomorphism = r.finite_value == 0 && exact == session.one();
  return r;
}

}  // namespace smeadow
