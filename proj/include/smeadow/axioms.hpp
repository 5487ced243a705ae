#pragma once

// The axiom bank: meadow axioms and their consequences, sign and signed-root axioms, the
// Lagrange equations, a relativity identity, and the complex extension, as parsed terms.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smeadow/parse.hpp"
#include "smeadow/term.hpp"

namespace smeadow {

struct Equation {
  std::string name;
  Term lhs;
  Term rhs;
  std::string source;
  // Free variables of both sides, sorted.
  std::vector<std::string> vars;
};

enum class Relation { equal, not_equal };

struct Premise {
  Term lhs;
  Term rhs;
  Relation relation = Relation::equal;
};

// On odd randomized trials `var` is overwritten by `value` evaluated under the drawn
// valuation, so that equality premises are actually exercised.
struct Coupling {
  std::string var;
  Term value;
};

struct ConditionalEquation {
  std::string name;
  std::vector<Premise> premises;
  Equation conclusion;
  std::vector<Coupling> couplings;
  std::vector<std::string> vars;
};

struct AxiomSet {
  std::string name;
  std::vector<Equation> equations;
  std::vector<ConditionalEquation> conditionals;

  std::size_t size() const { return equations.size() + conditionals.size(); }

  AxiomSet& operator+=(const AxiomSet& other) {
    name += "+" + other.name;
    equations.insert(equations.end(), other.equations.begin(), other.equations.end());
    conditionals.insert(conditionals.end(), other.conditionals.begin(), other.conditionals.end());
    return *this;
  }
};

inline std::vector<std::string> vars_of(std::initializer_list<Term> terms) {
  std::set<std::string> all;
  for (const auto& t : terms) collect_vars(t, all);
  return {all.begin(), all.end()};
}

inline Equation equation(std::string name, std::string_view lhs, std::string_view rhs, std::string source) {
  Equation e{std::move(name), parse(lhs), parse(rhs), std::move(source), {}};
  e.vars = vars_of({e.lhs, e.rhs});
  return e;
}

inline Premise premise(std::string_view lhs, Relation rel, std::string_view rhs) {
  return {parse(lhs), parse(rhs), rel};
}

inline ConditionalEquation conditional(std::string name, std::vector<Premise> premises, Equation conclusion,
                                       std::vector<Coupling> couplings = {}) {
  if (premises.empty()) throw std::invalid_argument("conditional equation needs a premise");
  std::set<std::string> all(conclusion.vars.begin(), conclusion.vars.end());
  for (const auto& p : premises) {
    collect_vars(p.lhs, all);
    collect_vars(p.rhs, all);
  }
  ConditionalEquation c{std::move(name), std::move(premises), std::move(conclusion), std::move(couplings), {}};
  c.vars.assign(all.begin(), all.end());
  return c;
}

namespace axioms {

inline AxiomSet meadow() {
  const std::string src = "meadow axioms";
  return {"Md",
          {
              equation("add_assoc", "(x + y) + z", "x + (y + z)", src),
              equation("add_comm", "x + y", "y + x", src),
              equation("add_zero", "x + 0", "x", src),
              equation("add_neg", "x + (-x)", "0", src),
              equation("mul_assoc", "(x * y) * z", "x * (y * z)", src),
              equation("mul_comm", "x * y", "y * x", src),
              equation("mul_one", "1 * x", "x", src),
              equation("distrib", "x * (y + z)", "x * y + x * z", src),
              equation("inv_involution", "inv(inv(x))", "x", src),
              equation("restricted_inverse", "x * (x * inv(x))", "x", src),
          },
          {}};
}

inline AxiomSet meadow_derived() {
  const std::string src = "consequences of the meadow axioms";
  return {"MdDerived",
          {
              equation("inv_one", "inv(1)", "1", src),
              equation("inv_zero", "inv(0)", "0", src),
              equation("inv_neg", "inv(-x)", "-inv(x)", src),
              equation("inv_mul", "inv(x * y)", "inv(x) * inv(y)", src),
              equation("zero_mul", "0 * x", "0", src),
              equation("mul_neg", "x * -y", "-(x * y)", src),
              equation("neg_involution", "-(-x)", "x", src),
          },
          {}};
}

inline AxiomSet pseudo_laws() {
  const std::string src = "pseudo units 1_x = x/x and pseudo zeros 0_x = 1 - 1_x";
  return {"PseudoLaws",
          {
              equation("pseudo_sum", "(1 - x / x) + x / x", "1", src),
              equation("pseudo_unit_idempotent", "(x / x)^2", "x / x", src),
              equation("pseudo_zero_idempotent", "(1 - x / x)^2", "1 - x / x", src),
          },
          {}};
}

inline AxiomSet signs() {
  const std::string src = "sign axioms";
  return {"Signs",
          {
              equation("sign_pseudo_unit", "s(x / x)", "x / x", src),
              equation("sign_pseudo_zero", "s(1 - x / x)", "1 - x / x", src),
              equation("sign_minus_one", "s(-1)", "-1", src),
              equation("sign_inv", "s(inv(x))", "s(x)", src),
              equation("sign_mul", "s(x * y)", "s(x) * s(y)", src),
              equation("sign_add", "(1 - (s(x) - s(y)) / (s(x) - s(y))) * (s(x + y) - s(x))", "0", src),
          },
          {}};
}

inline AxiomSet signs_derived() {
  const std::string src = "consequences of the sign axioms";
  return {"SignsDerived",
          {
              equation("sign_zero", "s(0)", "0", src),
              equation("sign_one", "s(1)", "1", src),
              equation("sign_idempotent", "s(s(x))", "s(x)", src),
          },
          {
              conditional("sign_add_conditional", {premise("s(x)", Relation::equal, "s(y)")},
                          equation("sign_add_conclusion", "s(x + y)", "s(x)", src),
                          {{"y", parse("s(x) * (y * s(y))")}}),
          }};
}

inline AxiomSet cancellation() {
  const std::string src = "cancellation meadows";
  return {"Cancellation",
          {},
          {
              conditional("inverse_law", {premise("x", Relation::not_equal, "0")},
                          equation("inverse_law_conclusion", "x * inv(x)", "1", src)),
              conditional("cancellation",
                          {premise("x", Relation::not_equal, "0"), premise("x * y", Relation::equal, "x * z")},
                          equation("cancellation_conclusion", "y", "z", src), {{"z", parse("y")}}),
              conditional("no_zero_divisors",
                          {premise("x * y", Relation::equal, "0"), premise("x", Relation::not_equal, "0")},
                          equation("no_zero_divisors_conclusion", "y", "0", src), {{"y", parse("0")}}),
          }};
}

inline AxiomSet square_roots() {
  const std::string src = "signed square root axioms";
  return {"SquareRoots",
          {
              equation("sqrt_inv", "sqrt(inv(x))", "inv(sqrt(x))", src),
              equation("sqrt_mul", "sqrt(x * y)", "sqrt(x) * sqrt(y)", src),
              equation("sqrt_signed_square", "sqrt(x * x * s(x))", "x", src),
              equation("sqrt_monotone", "s(sqrt(x) - sqrt(y))", "s(x - y)", src),
          },
          {}};
}

inline AxiomSet sqrt_derived() {
  const std::string src = "consequences of the signed square root axioms";
  return {"SqrtDerived",
          {
              equation("sqrt_sign", "sqrt(s(x))", "s(x)", src),
              equation("sqrt_pseudo_unit", "sqrt(x / x)", "x / x", src),
              equation("sqrt_pseudo_zero", "sqrt(1 - x / x)", "1 - x / x", src),
              equation("sqrt_odd", "sqrt(-x)", "-sqrt(x)", src),
              equation("sqrt_square", "sqrt(x^2)", "x * s(x)", src),
          },
          {}};
}

// (1 + x1^2 + ... + xn^2) / (1 + x1^2 + ... + xn^2) = 1
inline AxiomSet lagrange(int n) {
  if (n < 1) throw std::invalid_argument("Lagrange index must be positive");
  std::string sum = "1";
  for (int i = 1; i <= n; ++i) sum += " + x" + std::to_string(i) + "^2";
  const std::string name = "Lagrange" + std::to_string(n);
  return {name, {equation(name, "(" + sum + ") / (" + sum + ")", "1", "Lagrange equation")}, {}};
}

// Total form of sqrt(1 + b) / sqrt(1 - b^2) = 1 / sqrt(1 - b), b = v/c.
inline AxiomSet showcase() {
  return {"Showcase",
          {equation("relativity", "sqrt(1 + b) / sqrt(1 - b^2)", "s(1 + b)^2 / sqrt(1 - b)",
                    "relativistic velocity identity")},
          {}};
}

inline AxiomSet complex_axioms() {
  const std::string src = "signed square root for complex numbers";
  return {"Complex",
          {
              equation("complex_sign", "s(x)", "s(re(x))", src),
              equation("complex_sqrt", "sqrt(x)", "sqrt(re(x))", src),
              equation("real_part", "re(x)", "1/2 * (x + conj(x))", src),
          },
          {}};
}

// The signed root axioms with every root argument replaced by its real part.
inline AxiomSet complex_restricted() {
  const std::string src = "signed square root axioms restricted to real parts";
  return {"ComplexRestricted",
          {
              equation("re_sqrt_inv", "sqrt(inv(re(x)))", "inv(sqrt(re(x)))", src),
              equation("re_sqrt_mul", "sqrt(re(x) * re(y))", "sqrt(re(x)) * sqrt(re(y))", src),
              equation("re_sqrt_signed_square", "sqrt(re(x) * re(x) * s(re(x)))", "re(x)", src),
              equation("re_sqrt_monotone", "s(sqrt(re(x)) - sqrt(re(y)))", "s(re(x) - re(y))", src),
          },
          {}};
}

// x * inv(x) = 1 without its premise; false exactly at x = 0 in every cancellation meadow.
inline AxiomSet naive_inverse() {
  return {"NaiveInverse", {equation("naive_inverse", "x * inv(x)", "1", "inverse law without premise")}, {}};
}

inline std::vector<std::string> set_names() {
  return {"Md",          "MdDerived",   "PseudoLaws", "Signs",     "SignsDerived", "Cancellation",
          "SquareRoots", "SqrtDerived", "Lagrange1",  "Lagrange2", "Lagrange3",    "Lagrange4",
          "Showcase",    "Complex",     "ComplexRestricted",       "NaiveInverse"};
}

inline AxiomSet find_one(std::string_view name) {
  if (name == "Md") return meadow();
  if (name == "MdDerived") return meadow_derived();
  if (name == "PseudoLaws") return pseudo_laws();
  if (name == "Signs") return signs();
  if (name == "SignsDerived") return signs_derived();
  if (name == "Cancellation" || name == "IL") return cancellation();
  if (name == "SquareRoots") return square_roots();
  if (name == "SqrtDerived") return sqrt_derived();
  if (name == "Showcase") return showcase();
  if (name == "Complex") return complex_axioms();
  if (name == "ComplexRestricted") return complex_restricted();
  if (name == "NaiveInverse") return naive_inverse();
  for (int n = 1; n <= 4; ++n) {
    const std::string plain = "Lagrange" + std::to_string(n);
    const std::string call = "Lagrange(" + std::to_string(n) + ")";
    if (name == plain || name == call) return lagrange(n);
  }
  std::string valid;
  for (const auto& s : set_names()) valid += (valid.empty() ? "" : ", ") + s;
  throw std::invalid_argument("unknown axiom set '" + std::string(name) + "' (valid: " + valid + ")");
}

// A single set name or several joined by '+', e.g. "Md+Signs+SquareRoots".
inline AxiomSet find(std::string_view names) {
  AxiomSet out;
  std::size_t start = 0;
  bool first = true;
  while (start <= names.size()) {
    std::size_t end = names.find('+', start);
    if (end == std::string_view::npos) end = names.size();
    AxiomSet part = find_one(names.substr(start, end - start));
    if (first)
      out = std::move(part);
    else
      out += part;
    first = false;
    start = end + 1;
  }
  return out;
}

}  // namespace axioms

struct Catalog {
  AxiomSet md = axioms::meadow();
  AxiomSet md_derived = axioms::meadow_derived();
  AxiomSet pseudo_laws = axioms::pseudo_laws();
  AxiomSet signs = axioms::signs();
  AxiomSet signs_derived = axioms::signs_derived();
  AxiomSet cancellation = axioms::cancellation();
  AxiomSet square_roots = axioms::square_roots();
  AxiomSet sqrt_derived = axioms::sqrt_derived();
  AxiomSet showcase = axioms::showcase();
  AxiomSet complex = axioms::complex_axioms();
  AxiomSet complex_restricted = axioms::complex_restricted();

  static AxiomSet lagrange(int n) { return axioms::lagrange(n); }

  std::vector<const AxiomSet*> all() const {
    return {&md,           &md_derived,   &pseudo_laws, &signs,   &signs_derived,     &cancellation,
            &square_roots, &sqrt_derived, &showcase,    &complex, &complex_restricted};
  }
};

inline Catalog catalog() { return {}; }

}  // namespace smeadow
