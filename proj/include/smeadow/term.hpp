#pragma once

// Terms over (0, 1, +, ·, -, ^-1, s, √) with variables, rational constants and a context hole.
// conj and re extend the signature for the complex model only.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smeadow/rational.hpp"

namespace smeadow {

enum class Op { zero, one, constant, var, add, mul, neg, inv, sign, sqrt, conj, re, hole };

inline std::string_view op_name(Op op) {
  switch (op) {
    case Op::zero: return "0";
    case Op::one: return "1";
    case Op::constant: return "const";
    case Op::var: return "var";
    case Op::add: return "+";
    case Op::mul: return "*";
    case Op::neg: return "-";
    case Op::inv: return "inv";
    case Op::sign: return "s";
    case Op::sqrt: return "sqrt";
    case Op::conj: return "conj";
    case Op::re: return "re";
    case Op::hole: return "[]";
  }
  return "?";
}

inline int arity(Op op) {
  switch (op) {
    case Op::add:
    case Op::mul: return 2;
    case Op::neg:
    case Op::inv:
    case Op::sign:
    case Op::sqrt:
    case Op::conj:
    case Op::re: return 1;
    default: return 0;
  }
}

// Immutable term handle; copies share structure.
class Term {
 public:
  Term() : Term(make(Op::zero)) {}

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  // Positive rational other than 1 (see constant()).
  const Rational& value() const { return node_->value; }
  const Term& child(std::size_t i) const { return node_->children.at(i); }
  const std::vector<Term>& children() const { return node_->children; }

  bool is(Op o) const { return op() == o; }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    switch (a.op()) {
      case Op::var: return a.name() == b.name();
      case Op::constant: return a.value() == b.value();
      default: break;
    }
    for (std::size_t i = 0; i < a.children().size(); ++i)
      if (!(a.child(i) == b.child(i))) return false;
    return true;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& c : children()) n += c.size();
    return n;
  }

  static Term make(Op op, std::vector<Term> children = {}) {
    return Term(std::make_shared<const Node>(Node{op, {}, {}, std::move(children)}));
  }
  static Term make_var(std::string name) {
    return Term(std::make_shared<const Node>(Node{Op::var, std::move(name), {}, {}}));
  }
  static Term make_const(Rational q) {
    return Term(std::make_shared<const Node>(Node{Op::constant, {}, std::move(q), {}}));
  }

 private:
  struct Node {
    Op op;
    std::string name;
    Rational value;
    std::vector<Term> children;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

namespace term {

inline Term zero() { return Term::make(Op::zero); }
inline Term one() { return Term::make(Op::one); }
inline Term hole() { return Term::make(Op::hole); }
inline Term var(std::string name) { return Term::make_var(std::move(name)); }
inline Term add(Term a, Term b) { return Term::make(Op::add, {std::move(a), std::move(b)}); }
inline Term mul(Term a, Term b) { return Term::make(Op::mul, {std::move(a), std::move(b)}); }
inline Term neg(Term a) { return Term::make(Op::neg, {std::move(a)}); }
inline Term inv(Term a) { return Term::make(Op::inv, {std::move(a)}); }
inline Term sign(Term a) { return Term::make(Op::sign, {std::move(a)}); }
inline Term sqrt(Term a) { return Term::make(Op::sqrt, {std::move(a)}); }
inline Term conj(Term a) { return Term::make(Op::conj, {std::move(a)}); }
inline Term re(Term a) { return Term::make(Op::re, {std::move(a)}); }
inline Term sub(Term a, Term b) { return add(std::move(a), neg(std::move(b))); }
inline Term div(Term a, Term b) { return mul(std::move(a), inv(std::move(b))); }

// Canonical numeral: 0 and 1 are the signature constants, negatives wrap a positive constant.
inline Term constant(const Rational& q) {
  if (q == 0) return zero();
  if (q < 0) return neg(constant(-q));
  if (q == 1) return one();
  return Term::make_const(q);
}

// 1_t = t/t and 0_t = 1 - 1_t.
inline Term pseudo_unit(const Term& t) { return mul(t, inv(t)); }
inline Term pseudo_zero(const Term& t) { return sub(one(), pseudo_unit(t)); }

}  // namespace term

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is(Op::var)) out.insert(t.name());
  for (const auto& c : t.children()) collect_vars(c, out);
}

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

inline bool contains_op(const Term& t, Op op) {
  if (t.is(op)) return true;
  for (const auto& c : t.children())
    if (contains_op(c, op)) return true;
  return false;
}

inline bool is_closed(const Term& t) { return !contains_op(t, Op::var) && !contains_op(t, Op::hole); }

inline std::size_t count_holes(const Term& t) {
  std::size_t n = t.is(Op::hole) ? 1 : 0;
  for (const auto& c : t.children()) n += count_holes(c);
  return n;
}

namespace detail {

template <typename F>
Term rebuild(const Term& t, F&& leaf_map) {
  if (auto replaced = leaf_map(t)) return *replaced;
  if (t.children().empty()) return t;
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(rebuild(c, leaf_map));
  return Term::make(t.op(), std::move(kids));
}

}  // namespace detail

// Replace every occurrence of variable `name`. No binders exist, so this is capture-free.
inline Term substitute(const Term& t, const std::string& name, const Term& replacement) {
  return detail::rebuild(t, [&](const Term& s) -> std::optional<Term> {
    if (s.is(Op::var) && s.name() == name) return replacement;
    return std::nullopt;
  });
}

// C[r]: every hole receives the same plug.
inline Term fill(const Term& context, const Term& plug) {
  return detail::rebuild(context, [&](const Term& s) -> std::optional<Term> {
    if (s.is(Op::hole)) return plug;
    return std::nullopt;
  });
}

}  // namespace smeadow
