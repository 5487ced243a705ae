#pragma once

#include <gmpxx.h>

#include <string>

namespace smeadow {

// Canonical rational: reduced, positive denominator, zero is 0/1. mpq_class keeps this
// invariant as long as every constructor is followed by canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

// p/q with the meadow convention p/0 = p * 0^-1 = 0.
inline Rational make_rational(const Integer& p, const Integer& q = 1) {
  if (q == 0) return Rational(0);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long long p, long long q) {
  return make_rational(Integer(std::to_string(p)), Integer(std::to_string(q)));
}

// Totalized rational inverse.
inline Rational rational_inv(const Rational& a) {
  if (a == 0) return Rational(0);
  Rational r(a.get_den(), a.get_num());
  r.canonicalize();
  return r;
}

inline int rational_sign(const Rational& a) { return sgn(a); }

inline std::string to_string(const Rational& a) { return a.get_str(); }

// Exact square root of a non-negative rational, if it has one.
inline bool rational_sqrt(const Rational& a, Rational& root) {
  if (sgn(a) < 0) return false;
  if (!mpz_perfect_square_p(a.get_num_mpz_t()) || !mpz_perfect_square_p(a.get_den_mpz_t()))
    return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), a.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), a.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

}  // namespace smeadow
