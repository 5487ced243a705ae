#pragma once

// Closed terms are decided by evaluation into the tower; open terms get a small, sound rewrite
// system applied leftmost-innermost.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smeadow/canonical.hpp"
#include "smeadow/eval.hpp"
#include "smeadow/parse.hpp"
#include "smeadow/term.hpp"

namespace smeadow {

inline void require_closed(const Term& t) {
  if (!is_closed(t)) throw open_term();
}

// Evaluates in a private session and re-emits the value's canonical sum of radical monomials.
inline Term normalize_closed(const Term& t) {
  require_closed(t);
  Session session;
  return canonical_term(eval_exact(t, session));
}

inline bool decide_closed_eq(const Term& t, const Term& u) {
  require_closed(t);
  require_closed(u);
  Session session;
  return eq(eval_exact(t, session), eval_exact(u, session));
}

inline Sign sign_of_closed(const Term& t) {
  require_closed(t);
  Session session;
  return sign(eval_exact(t, session));
}

struct RewriteRule {
  std::string name;
  Term lhs;
  Term rhs;
};

inline RewriteRule rule(std::string name, std::string_view lhs, std::string_view rhs) {
  return {std::move(name), parse(lhs), parse(rhs)};
}

// Every rule is an instance or orientation of a catalog identity. No rule moves a negation,
// sign or inverse outward-to-inward, so the list terminates.
inline const std::vector<RewriteRule>& default_rules() {
  static const std::vector<RewriteRule> rules = {
      rule("inv_involution", "inv(inv(x))", "x"),
      rule("inv_zero", "inv(0)", "0"),
      rule("inv_one", "inv(1)", "1"),
      rule("inv_neg", "inv(-x)", "-inv(x)"),
      rule("sign_idempotent", "s(s(x))", "s(x)"),
      rule("sign_zero", "s(0)", "0"),
      rule("sign_one", "s(1)", "1"),
      rule("sign_neg", "s(-x)", "-s(x)"),
      rule("sign_inv", "s(inv(x))", "s(x)"),
      // Flattening only; the factoring direction is never applied.
      rule("sign_mul", "s(x * y)", "s(x) * s(y)"),
      rule("sqrt_zero", "sqrt(0)", "0"),
      rule("sqrt_one", "sqrt(1)", "1"),
      rule("sqrt_sign", "sqrt(s(x))", "s(x)"),
      rule("sqrt_odd", "sqrt(-x)", "-sqrt(x)"),
      rule("sqrt_signed_square", "sqrt(x * x * s(x))", "x"),
      rule("sqrt_square", "sqrt(x * x)", "x * s(x)"),
      rule("sqrt_inv", "sqrt(inv(x))", "inv(sqrt(x))"),
      rule("mul_zero_left", "0 * x", "0"),
      rule("mul_zero_right", "x * 0", "0"),
      rule("mul_one_left", "1 * x", "x"),
      rule("mul_one_right", "x * 1", "x"),
      rule("add_zero_right", "x + 0", "x"),
      rule("add_zero_left", "0 + x", "x"),
      rule("add_neg_self", "x + -x", "0"),
      rule("neg_involution", "-(-x)", "x"),
      rule("neg_zero", "-0", "0"),
  };
  return rules;
}

using Bindings = std::map<std::string, Term>;

// Variables in the pattern bind subterms; repeated variables must bind equal subterms.
inline bool match(const Term& pattern, const Term& t, Bindings& b) {
  if (pattern.is(Op::var)) {
    auto [it, inserted] = b.emplace(pattern.name(), t);
    return inserted || it->second == t;
  }
  if (pattern.op() != t.op()) return false;
  if (pattern.is(Op::constant)) return pattern.value() == t.value();
  for (std::size_t i = 0; i < pattern.children().size(); ++i)
    if (!match(pattern.child(i), t.child(i), b)) return false;
  return true;
}

inline Term instantiate(const Term& rhs, const Bindings& b) {
  return detail::rebuild(rhs, [&](const Term& s) -> std::optional<Term> {
    if (s.is(Op::var)) return b.at(s.name());
    return std::nullopt;
  });
}

struct RewriteStep {
  Term result;
  const RewriteRule* rule;
};

// One leftmost-innermost rewrite step, if any rule applies.
inline std::optional<RewriteStep> rewrite_step(const Term& t, const std::vector<RewriteRule>& rules) {
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (auto inner = rewrite_step(t.child(i), rules)) {
      std::vector<Term> kids = t.children();
      kids[i] = inner->result;
      return RewriteStep{Term::make(t.op(), std::move(kids)), inner->rule};
    }
  }
  for (const auto& r : rules) {
    Bindings b;
    if (match(r.lhs, t, b)) return RewriteStep{instantiate(r.rhs, b), &r};
  }
  return std::nullopt;
}

struct RewriteResult {
  Term term;
  std::size_t steps = 0;
  // max_steps was reached before a normal form.
  bool truncated = false;
  // Starting term followed by the term after each step.
  std::vector<Term> trace;
  std::vector<std::string> rules_applied;
};

inline RewriteResult rewrite_simplify(const Term& t, std::size_t max_steps = 1000,
                                      const std::vector<RewriteRule>& rules = default_rules()) {
  RewriteResult out;
  out.term = t;
  out.trace.push_back(t);
  while (auto step = rewrite_step(out.term, rules)) {
    if (out.steps == max_steps) {
      out.truncated = true;
      break;
    }
    out.term = step->result;
    ++out.steps;
    out.trace.push_back(out.term);
    out.rules_applied.push_back(step->rule->name);
  }
  return out;
}

}  // namespace smeadow
