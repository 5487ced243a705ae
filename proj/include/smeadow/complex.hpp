#pragma once

// Pairs of tower values with a zero-totalized inverse. Sign and root only look at the real part.

#include "smeadow/kernel.hpp"

namespace smeadow {

class Complex {
 public:
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
    if (!(re_.session() == im_.session())) throw session_mismatch();
  }

  static Complex real(const Real& x) { return Complex(x, x.session().zero()); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Session session() const { return re_.session(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

inline Complex make_complex(const Real& re, const Real& im) { return Complex(re, im); }

inline Complex conj(const Complex& x) { return Complex(x.re(), neg(x.im())); }

// Re(x) = (x + conj(x)) / 2 as a complex value.
inline Complex re_part(const Complex& x) { return Complex::real(x.re()); }

inline Complex add(const Complex& a, const Complex& b) { return Complex(a.re() + b.re(), a.im() + b.im()); }

inline Complex neg(const Complex& a) { return Complex(-a.re(), -a.im()); }

inline Complex mul(const Complex& a, const Complex& b) {
  return Complex(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
}

// conj(x) / |x|^2, with cinv(0) = 0.
inline Complex cinv(const Complex& x) {
  const Real scale = inv(x.re() * x.re() + x.im() * x.im());
  return Complex(x.re() * scale, -(x.im() * scale));
}

inline Sign csign(const Complex& x) { return sign(x.re()); }

inline Complex cssqrt(const Complex& x) { return Complex::real(ssqrt(x.re())); }

}  // namespace smeadow
