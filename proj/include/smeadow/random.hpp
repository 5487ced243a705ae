#pragma once

// Deterministic generators for random terms, one-hole contexts and model values.
//
// Draws use raw mt19937_64 output reduced modulo the range, so sequences are identical across
// standard libraries for a given seed.
//
// Term constructor weights (relative, only ops in the requested signature take part):
//   leaves:  0 -> 1, 1 -> 2, variable -> 4
//   unary:   -x -> 2, inv -> 2, s -> 2, sqrt -> 2, conj -> 1, re -> 1
//   binary:  + -> 3, * -> 3
// With b nodes of budget left, a leaf is chosen with probability 1/b (always when b = 1).

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "smeadow/complex.hpp"
#include "smeadow/kernel.hpp"
#include "smeadow/term.hpp"

namespace smeadow {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform-ish in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  long long between(long long lo, long long hi) { return lo + static_cast<long long>(below(hi - lo + 1)); }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

struct Signature {
  std::vector<Op> ops;

  bool has(Op op) const {
    for (auto o : ops)
      if (o == op) return true;
    return false;
  }

  // (0, 1, +, ·, -, ^-1)
  static Signature meadow() { return {{Op::zero, Op::one, Op::var, Op::add, Op::mul, Op::neg, Op::inv}}; }
  // ... plus s
  static Signature signed_meadow() {
    auto s = meadow();
    s.ops.push_back(Op::sign);
    return s;
  }
  // ... plus s and √
  static Signature sqrt_meadow() {
    auto s = signed_meadow();
    s.ops.push_back(Op::sqrt);
    return s;
  }
  // ... plus conj and re
  static Signature complex_meadow() {
    auto s = sqrt_meadow();
    s.ops.push_back(Op::conj);
    s.ops.push_back(Op::re);
    return s;
  }
};

inline unsigned op_weight(Op op) {
  switch (op) {
    case Op::zero: return 1;
    case Op::one: return 2;
    case Op::var: return 4;
    case Op::add:
    case Op::mul: return 3;
    case Op::neg:
    case Op::inv:
    case Op::sign:
    case Op::sqrt: return 2;
    case Op::conj:
    case Op::re: return 1;
    default: return 0;
  }
}

class TermGenerator {
 public:
  TermGenerator(Rng& rng, Signature sig, std::vector<std::string> vars)
      : rng_(rng), sig_(std::move(sig)), vars_(std::move(vars)) {
    if (sig_.ops.empty()) throw std::invalid_argument("empty signature subset");
    for (auto op : sig_.ops) {
      if (op_weight(op) == 0) continue;
      if (arity(op) == 0) {
        if (op == Op::var && vars_.empty()) continue;
        leaves_.push_back(op);
      } else {
        inner_.push_back(op);
      }
    }
    if (leaves_.empty()) throw std::invalid_argument("signature subset has no usable leaf symbol");
  }

  // A term with at most max_size nodes.
  Term term(std::size_t max_size) {
    if (max_size == 0) throw std::invalid_argument("max_size must be at least 1");
    if (max_size == 1 || inner_.empty() || rng_.below(max_size) == 0) return leaf();
    const Op op = pick(inner_, max_size);
    if (arity(op) == 0) return leaf();
    if (arity(op) == 1) return Term::make(op, {term(max_size - 1)});
    const std::size_t left = 1 + rng_.below(max_size - 2);
    Term l = term(left);
    Term r = term(max_size - 1 - left);
    return Term::make(op, {l, r});
  }

  // A term with exactly one hole and at most max_size nodes.
  Term context(std::size_t max_size) {
    if (max_size == 0) throw std::invalid_argument("max_size must be at least 1");
    if (max_size == 1 || inner_.empty() || rng_.below(max_size) == 0) return term::hole();
    const Op op = pick(inner_, max_size);
    if (arity(op) == 0) return term::hole();
    if (arity(op) == 1) return Term::make(op, {context(max_size - 1)});
    const std::size_t left = 1 + rng_.below(max_size - 2);
    if (rng_.chance(1, 2)) {
      Term l = context(left);
      Term r = term(max_size - 1 - left);
      return Term::make(op, {l, r});
    }
    Term l = term(left);
    Term r = context(max_size - 1 - left);
    return Term::make(op, {l, r});
  }

 private:
  Term leaf() {
    const Op op = pick(leaves_, 1);
    if (op == Op::var) return term::var(vars_[rng_.below(vars_.size())]);
    return Term::make(op);
  }

  // Weighted choice among ops that fit the remaining budget.
  Op pick(const std::vector<Op>& ops, std::size_t budget) {
    unsigned total = 0;
    for (auto op : ops)
      if (static_cast<std::size_t>(arity(op)) + 1 <= budget || arity(op) == 0) total += op_weight(op);
    if (total == 0) return pick(leaves_, 1);
    auto roll = static_cast<unsigned>(rng_.below(total));
    for (auto op : ops) {
      if (!(static_cast<std::size_t>(arity(op)) + 1 <= budget || arity(op) == 0)) continue;
      if (roll < op_weight(op)) return op;
      roll -= op_weight(op);
    }
    return ops.back();
  }

  Rng& rng_;
  Signature sig_;
  std::vector<std::string> vars_;
  std::vector<Op> leaves_;
  std::vector<Op> inner_;
};

inline Term gen_random_term(std::uint64_t seed, std::size_t max_size, const Signature& sig,
                            const std::vector<std::string>& vars) {
  Rng rng(seed);
  return TermGenerator(rng, sig, vars).term(max_size);
}

// Random exact values: small rationals (|num| <= 12, den <= 6), zero with probability 1/10,
// and a bounded number of signed roots, inverses, sums and products on top of those.
inline Real random_real(Rng& rng, const Session& s, int fuel = 2) {
  const auto small = [&] {
    const long long num = rng.between(-12, 12);
    const long long den = rng.between(1, 6);
    return s.rational(num, den);
  };
  const auto roll = rng.below(10);
  if (roll == 0) return s.zero();
  if (fuel <= 0 || roll <= 4) return small();
  if (roll <= 6) return ssqrt(small());
  if (roll == 7) return inv(random_real(rng, s, fuel - 1));
  const Real a = random_real(rng, s, fuel - 1);
  const Real b = random_real(rng, s, fuel - 1);
  return roll == 8 ? a + b : a * b;
}

inline Complex random_complex(Rng& rng, const Session& s) {
  const auto roll = rng.below(6);
  if (roll == 0) return Complex::real(random_real(rng, s, 1));
  if (roll == 1) return Complex(s.zero(), random_real(rng, s, 1));
  Real re = random_real(rng, s, 1);
  Real im = random_real(rng, s, 1);
  return Complex(std::move(re), std::move(im));
}

}  // namespace smeadow
