#pragma once

// Exact arithmetic in the zero-totalized signed square-root closure of Q.
//
// A Session owns a tower Q ⊂ Q(√r1) ⊂ Q(√r1)(√r2) ⊂ ... of real quadratic extensions.
// A value at level L is a vector of 2^L rational coordinates over the basis of products
// of adjoined radicals: bit k of a coordinate index selects the factor √r(k+1). Splitting
// the vector in halves gives the decomposition u + v·√rL with u, v one level down.
//
// Each radicand is positive and not a square one level below it, so the basis is
// linearly independent and equality is coordinate equality.

#include <cassert>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "smeadow/errors.hpp"
#include "smeadow/rational.hpp"

namespace smeadow {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

inline Sign sign_from_int(int v) {
  return v < 0 ? Sign::negative : (v > 0 ? Sign::positive : Sign::zero);
}

inline Sign operator*(Sign a, Sign b) { return sign_from_int(to_int(a) * to_int(b)); }

namespace detail {

using Coords = std::vector<Rational>;
using CoordSpan = std::span<const Rational>;

struct Tower {
  // radicands[k] is the radicand of level k+1, stored with 2^k coordinates.
  std::vector<Coords> radicands;
};

inline std::size_t level_of(std::size_t size) {
  std::size_t level = 0;
  while ((std::size_t{1} << level) < size) ++level;
  return level;
}

inline bool all_zero(CoordSpan a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

// Smallest level whose coordinates carry the whole support.
inline std::size_t support_level(CoordSpan a) {
  std::size_t level = level_of(a.size());
  while (level > 0 && all_zero(a.subspan(std::size_t{1} << (level - 1)))) --level;
  return level;
}

inline Coords lifted(CoordSpan a, std::size_t level) {
  Coords out(std::size_t{1} << level);
  std::copy(a.begin(), a.begin() + std::min(a.size(), out.size()), out.begin());
  return out;
}

inline void trim(Coords& a) { a.resize(std::size_t{1} << support_level(a)); }

inline Coords add(CoordSpan a, CoordSpan b) {
  assert(a.size() == b.size());
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Coords sub(CoordSpan a, CoordSpan b) {
  assert(a.size() == b.size());
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Coords negated(CoordSpan a) {
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline Coords scaled(CoordSpan a, const Rational& k) {
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return out;
}

inline Coords concat(Coords low, const Coords& high) {
  low.insert(low.end(), high.begin(), high.end());
  return low;
}

// Both operands have exactly 2^level coordinates.
inline Coords mul(const Tower& t, CoordSpan a, CoordSpan b, std::size_t level) {
  if (level == 0) return Coords{a[0] * b[0]};
  const std::size_t half = std::size_t{1} << (level - 1);
  CoordSpan u1 = a.first(half), v1 = a.subspan(half);
  CoordSpan u2 = b.first(half), v2 = b.subspan(half);
  const bool v1_zero = all_zero(v1), v2_zero = all_zero(v2);
  if (v1_zero && v2_zero) return concat(mul(t, u1, u2, level - 1), Coords(half));
  if (v1_zero) return concat(mul(t, u1, u2, level - 1), mul(t, u1, v2, level - 1));
  if (v2_zero) return concat(mul(t, u1, u2, level - 1), mul(t, v1, u2, level - 1));

  // (u1 + v1√r)(u2 + v2√r) = (u1u2 + v1v2·r) + ((u1+v1)(u2+v2) - u1u2 - v1v2)√r
  const Coords uu = mul(t, u1, u2, level - 1);
  const Coords vv = mul(t, v1, v2, level - 1);
  const Coords cross = mul(t, add(u1, v1), add(u2, v2), level - 1);
  const Coords vvr = mul(t, vv, t.radicands[level - 1], level - 1);
  return concat(add(uu, vvr), sub(sub(cross, uu), vv));
}

// u^2 - v^2·r for the top-level split of a (which must be at `level` >= 1).
inline Coords norm_down(const Tower& t, CoordSpan a, std::size_t level) {
  const std::size_t half = std::size_t{1} << (level - 1);
  CoordSpan u = a.first(half), v = a.subspan(half);
  const Coords uu = mul(t, u, u, level - 1);
  const Coords vv = mul(t, v, v, level - 1);
  return sub(uu, mul(t, vv, t.radicands[level - 1], level - 1));
}

inline Coords inv(const Tower& t, CoordSpan a, std::size_t level) {
  if (level == 0) return Coords{rational_inv(a[0])};
  const std::size_t half = std::size_t{1} << (level - 1);
  CoordSpan u = a.first(half), v = a.subspan(half);
  if (all_zero(v)) return concat(inv(t, u, level - 1), Coords(half));
  // 1/(u + v√r) = (u - v√r) / (u^2 - v^2·r); the norm is nonzero because r is not a square.
  const Coords norm_inv = inv(t, norm_down(t, a, level), level - 1);
  if (all_zero(norm_inv)) throw invariant_violation("zero norm of a nonzero tower element");
  return concat(mul(t, u, norm_inv, level - 1), negated(mul(t, v, norm_inv, level - 1)));
}

inline int sign(const Tower& t, CoordSpan a, std::size_t level) {
  if (level == 0) return sgn(a[0]);
  const std::size_t half = std::size_t{1} << (level - 1);
  CoordSpan u = a.first(half), v = a.subspan(half);
  const int sv = sign(t, v, level - 1);
  if (sv == 0) return sign(t, u, level - 1);
  const int su = sign(t, u, level - 1);
  if (su == 0 || su == sv) return sv;
  // Opposite signs: |u| vs |v|·√r decided by u^2 - v^2·r.
  const int sd = sign(t, norm_down(t, a, level), level - 1);
  if (sd == 0) throw invariant_violation("degenerate sign tie u^2 = v^2 r: radicand is a square");
  return sd > 0 ? su : sv;
}

// A square root of y inside the tower truncated at `level`, if one exists.
// The returned root may have either sign.
inline std::optional<Coords> tower_sqrt(const Tower& t, CoordSpan y, std::size_t level) {
  if (level == 0) {
    Rational root;
    if (rational_sqrt(y[0], root)) return Coords{root};
    return std::nullopt;
  }
  const std::size_t half = std::size_t{1} << (level - 1);
  CoordSpan u = y.first(half), v = y.subspan(half);
  const auto& r = t.radicands[level - 1];

  if (all_zero(v)) {
    // (a + b√r)^2 has no √r part only if a = 0 or b = 0.
    if (auto w = tower_sqrt(t, u, level - 1)) return concat(std::move(*w), Coords(half));
    const Coords u_over_r = mul(t, u, inv(t, r, level - 1), level - 1);
    if (auto c = tower_sqrt(t, u_over_r, level - 1)) return concat(Coords(half), std::move(*c));
    return std::nullopt;
  }

  // (a + b√r)^2 = u + v√r  ⇔  a^2 + b^2·r = u, 2ab = v.
  // a^2 and b^2·r are the roots of z^2 - u·z + v^2·r/4, so a^2 = (u ± s)/2, s^2 = u^2 - v^2·r.
  auto s = tower_sqrt(t, norm_down(t, y, level), level - 1);
  if (!s) return std::nullopt;
  const Rational half_q(1, 2);
  for (int flip = 0; flip < 2; ++flip) {
    const Coords a_sq = scaled(flip == 0 ? add(u, *s) : sub(u, *s), half_q);
    auto a = tower_sqrt(t, a_sq, level - 1);
    if (!a || all_zero(*a)) continue;
    Coords b = mul(t, v, inv(t, scaled(*a, Rational(2)), level - 1), level - 1);
    return concat(std::move(*a), b);
  }
  return std::nullopt;
}

}  // namespace detail

class Real;

// Owner of one quadratic tower. Copies share the tower; values from different sessions never mix.
class Session {
 public:
  Session() : tower_(std::make_shared<detail::Tower>()) {}

  Real zero() const;
  Real one() const;
  Real rational(const Rational& q) const;
  Real rational(long long p, long long q = 1) const;
  Real rational(const Integer& p, const Integer& q) const;

  // Number of adjoined radicals.
  std::size_t depth() const { return tower_->radicands.size(); }

  // Radicand of level k (1-based) as a value of this session.
  Real radicand(std::size_t k) const;

  // Re-checks that every radicand is positive and not a square one level below.
  bool verify_tower() const;

  friend bool operator==(const Session& a, const Session& b) { return a.tower_ == b.tower_; }

 private:
  friend class Real;
  explicit Session(std::shared_ptr<detail::Tower> t) : tower_(std::move(t)) {}

  std::shared_ptr<detail::Tower> tower_;
};

// An element of the model: exact, immutable, total under every operation.
class Real {
 public:
  Session session() const { return Session(tower_); }

  // Number of tower levels the value actually uses.
  std::size_t depth() const { return detail::level_of(coords_.size()); }
  const detail::Coords& coords() const { return coords_; }

  bool is_zero() const { return coords_.size() == 1 && coords_[0] == 0; }
  bool is_rational() const { return coords_.size() == 1; }
  const Rational& rational_value() const { return coords_[0]; }

  friend Real add(const Real& a, const Real& b) {
    const std::size_t level = a.common_level(b);
    return Real(a.tower_, detail::add(detail::lifted(a.coords_, level), detail::lifted(b.coords_, level)));
  }

  friend Real mul(const Real& a, const Real& b) {
    const std::size_t level = a.common_level(b);
    return Real(a.tower_, detail::mul(*a.tower_, detail::lifted(a.coords_, level),
                                      detail::lifted(b.coords_, level), level));
  }

  friend Real neg(const Real& a) { return Real(a.tower_, detail::negated(a.coords_)); }

  // Total inverse: inv(0) = 0.
  friend Real inv(const Real& a) { return Real(a.tower_, detail::inv(*a.tower_, a.coords_, a.depth())); }

  friend Sign sign(const Real& a) { return sign_from_int(detail::sign(*a.tower_, a.coords_, a.depth())); }

  // Signed square root: √x for x >= 0, -√(-x) for x < 0. May adjoin a new tower level.
  friend Real ssqrt(const Real& a);

  friend Sign compare(const Real& a, const Real& b) { return sign(add(a, neg(b))); }

  friend bool eq(const Real& a, const Real& b) {
    a.check_same(b);
    return a.coords_ == b.coords_;
  }

  friend Real operator+(const Real& a, const Real& b) { return add(a, b); }
  friend Real operator-(const Real& a, const Real& b) { return add(a, neg(b)); }
  friend Real operator*(const Real& a, const Real& b) { return mul(a, b); }
  friend Real operator-(const Real& a) { return neg(a); }
  friend bool operator==(const Real& a, const Real& b) { return eq(a, b); }

 private:
  friend class Session;

  Real(std::shared_ptr<detail::Tower> t, detail::Coords c) : tower_(std::move(t)), coords_(std::move(c)) {
    detail::trim(coords_);
  }

  void check_same(const Real& other) const {
    if (tower_ != other.tower_) throw session_mismatch();
  }

  std::size_t common_level(const Real& other) const {
    check_same(other);
    return std::max(depth(), other.depth());
  }

  std::shared_ptr<detail::Tower> tower_;
  detail::Coords coords_;
};

// Namespace-scope declarations so qualified calls find the friends.
Real add(const Real& a, const Real& b);
Real mul(const Real& a, const Real& b);
Real neg(const Real& a);
Real inv(const Real& a);
Sign sign(const Real& a);
Sign compare(const Real& a, const Real& b);
bool eq(const Real& a, const Real& b);

inline Real Session::zero() const { return Real(tower_, {Rational(0)}); }
inline Real Session::one() const { return Real(tower_, {Rational(1)}); }
inline Real Session::rational(const Rational& q) const { return Real(tower_, {q}); }
inline Real Session::rational(long long p, long long q) const { return Real(tower_, {make_rational(p, q)}); }
inline Real Session::rational(const Integer& p, const Integer& q) const {
  return Real(tower_, {make_rational(p, q)});
}

inline Real Session::radicand(std::size_t k) const {
  if (k == 0 || k > depth()) throw std::out_of_range("no such tower level");
  return Real(tower_, tower_->radicands[k - 1]);
}

inline bool Session::verify_tower() const {
  const auto& rads = tower_->radicands;
  for (std::size_t k = 0; k < rads.size(); ++k) {
    if (rads[k].size() != (std::size_t{1} << k)) return false;
    if (detail::sign(*tower_, rads[k], k) <= 0) return false;
    if (detail::tower_sqrt(*tower_, rads[k], k)) return false;
  }
  return true;
}

namespace detail {

// Splits y = c^2 * r with c > 0 rational and r having coprime integer coordinates whose gcd has
// no square factor below kSquareSieveBound (nor is a perfect square). sqrt(8) adjoins 2, not 8.
inline constexpr unsigned long kSquareSieveBound = 1000;

inline std::pair<Rational, Coords> square_content(const Coords& y) {
  Integer den = 1;
  for (const auto& q : y) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  Coords scaled_y = scaled(y, Rational(den * den));
  Integer g = 0;
  for (const auto& q : scaled_y) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());

  Integer root = 1, rest = g;
  for (unsigned long p = 2; p < kSquareSieveBound && p * p <= rest; ++p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p)) {
      rest /= p * p;
      root *= p;
    }
  }
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    root *= r;
  }
  Rational c(root, den);
  c.canonicalize();
  return {c, scaled(y, rational_inv(Rational(c * c)))};
}

}  // namespace detail

inline Real ssqrt(const Real& a) {
  if (a.is_zero()) return a;
  detail::Tower& tower = *a.tower_;
  const int s = detail::sign(tower, a.coords_, a.depth());
  const std::size_t level = tower.radicands.size();
  auto [c, y] = detail::square_content(detail::lifted(s < 0 ? detail::negated(a.coords_) : a.coords_, level));

  if (auto w = detail::tower_sqrt(tower, y, level)) {
    // Pick the positive root, then restore the sign of the argument.
    if (detail::sign(tower, *w, level) != s) *w = detail::negated(*w);
    return Real(a.tower_, detail::scaled(*w, c));
  }

  tower.radicands.push_back(std::move(y));
  detail::Coords root(std::size_t{1} << (level + 1));
  root[std::size_t{1} << level] = c * s;
  return Real(a.tower_, std::move(root));
}

// 1_x = x·x^-1, which is 0 or 1.
inline Real pseudo_unit(const Real& a) { return mul(a, inv(a)); }

// 0_x = 1 - 1_x.
inline Real pseudo_zero(const Real& a) { return add(a.session().one(), neg(pseudo_unit(a))); }

}  // namespace smeadow
