#pragma once

// Certified decimal approximation of tower values.
//
// Works only from raw coordinates and radicands: every radical is enclosed by an integer
// square-root bracket and enclosures are pushed through the coordinate expression with
// outward dyadic rounding. No kernel sign or equality decision is consulted, so the output
// is an independent cross-check of the exact kernel.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "smeadow/kernel.hpp"

namespace smeadow {

struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  Rational width() const { return hi - lo; }
};

namespace detail {

inline Integer floor_q(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Integer ceil_q(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Rational dyadic(const Integer& n, unsigned bits) {
  Integer den = 1;
  den <<= bits;
  Rational q(n, den);
  q.canonicalize();
  return q;
}

class IntervalEvaluator {
 public:
  IntervalEvaluator(const Tower& tower, unsigned bits) : tower_(tower), bits_(bits) {
    scale_ = 1;
    scale_ <<= bits;
    for (std::size_t k = 0; k < tower.radicands.size(); ++k)
      radicals_.push_back(sqrt_of(eval(tower.radicands[k], k)));
  }

  Interval eval(CoordSpan a, std::size_t level) const {
    if (level == 0) return {a[0], a[0]};
    const std::size_t half = std::size_t{1} << (level - 1);
    const Interval u = eval(a.first(half), level - 1);
    if (all_zero(a.subspan(half))) return u;
    const Interval v = eval(a.subspan(half), level - 1);
    const Interval vr = times(v, radicals_[level - 1]);
    return round_out({u.lo + vr.lo, u.hi + vr.hi});
  }

 private:
  Interval round_out(const Interval& x) const {
    return {dyadic(floor_q(x.lo * scale_), bits_), dyadic(ceil_q(x.hi * scale_), bits_)};
  }

  Interval times(const Interval& a, const Interval& b) const {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rational lo = p[0], hi = p[0];
    for (const auto& x : p) {
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
    return round_out({lo, hi});
  }

  // Bracket √x for x in [lo, hi] with isqrt on x·4^bits.
  Interval sqrt_of(const Interval& x) const {
    const Rational sq_scale = Rational(scale_) * Rational(scale_);
    Integer lo_n = x.lo > 0 ? floor_q(x.lo * sq_scale) : Integer(0);
    Integer hi_n = ceil_q(x.hi * sq_scale);
    if (hi_n < 0) hi_n = 0;
    Integer lo_root, hi_root;
    mpz_sqrt(lo_root.get_mpz_t(), lo_n.get_mpz_t());
    mpz_sqrt(hi_root.get_mpz_t(), hi_n.get_mpz_t());
    if (hi_root * hi_root != hi_n) hi_root += 1;
    return {dyadic(lo_root, bits_), dyadic(hi_root, bits_)};
  }

  const Tower& tower_;
  unsigned bits_;
  Integer scale_;
  std::vector<Interval> radicals_;
};

inline Integer trunc_q(const Rational& q) {
  Integer out;
  mpz_tdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace detail

// Rational enclosure of a, tightened as `bits` grows (radicals bracketed to 2^-bits).
inline Interval enclose(const Real& a, unsigned bits) {
  // The session handle only exposes radicands as values; rebuild a read-only tower view.
  detail::Tower view;
  const Session s = a.session();
  for (std::size_t k = 1; k <= s.depth(); ++k) view.radicands.push_back(detail::lifted(s.radicand(k).coords(), k - 1));
  detail::IntervalEvaluator ev(view, bits);
  return ev.eval(a.coords(), a.depth());
}

// Decimal string d with |a - d| < 10^-digits, truncated toward zero.
inline std::string approx_decimal(const Real& a, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("approx_decimal needs at least one digit");
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, digits);
  const Rational scale(ten_pow);

  for (unsigned bits = 4 * digits + 32; bits <= (1u << 20); bits *= 2) {
    const Interval iv = enclose(a, bits);
    const Integer lo = detail::trunc_q(iv.lo * scale);
    const Integer hi = detail::trunc_q(iv.hi * scale);
    if (lo != hi) continue;

    Integer mag = abs(lo);
    std::string body = mag.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    const bool negative = iv.hi < 0;
    return negative ? "-" + body : body;
  }
  throw invariant_violation("approx_decimal failed to converge");
}

}  // namespace smeadow
