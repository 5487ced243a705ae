#pragma once

// Homomorphic evaluation of terms into the exact model, a totalized prime field, or the complex
// extension. Each model is a small policy type; evaluate<Model> walks the term once.

#include <cstdint>
#include <map>
#include <string>

#include "smeadow/complex.hpp"
#include "smeadow/errors.hpp"
#include "smeadow/finite_field.hpp"
#include "smeadow/kernel.hpp"
#include "smeadow/term.hpp"

namespace smeadow {

using ExactValuation = std::map<std::string, Real>;
using ResidueValuation = std::map<std::string, Residue>;
using ComplexValuation = std::map<std::string, Complex>;

template <typename Model>
typename Model::value_type evaluate(const Term& t, const Model& m) {
  switch (t.op()) {
    case Op::zero: return m.constant(Rational(0));
    case Op::one: return m.constant(Rational(1));
    case Op::constant: return m.constant(t.value());
    case Op::var: return m.var(t.name());
    case Op::hole: throw hole_in_term();
    case Op::add: return m.add(evaluate(t.child(0), m), evaluate(t.child(1), m));
    case Op::mul: return m.mul(evaluate(t.child(0), m), evaluate(t.child(1), m));
    case Op::neg: return m.neg(evaluate(t.child(0), m));
    case Op::inv: return m.inv(evaluate(t.child(0), m));
    case Op::sign: return m.sign(evaluate(t.child(0), m));
    case Op::sqrt: return m.sqrt(evaluate(t.child(0), m));
    case Op::conj: return m.conj(evaluate(t.child(0), m));
    case Op::re: return m.re(evaluate(t.child(0), m));
  }
  throw std::logic_error("unknown term operator");
}

namespace model {

inline constexpr const char* kExactName = "exact";
inline constexpr const char* kComplexName = "complex";

struct Exact {
  using value_type = Real;

  const ExactValuation& valuation;
  Session session;

  Real constant(const Rational& q) const { return session.rational(q); }
  Real var(const std::string& name) const {
    auto it = valuation.find(name);
    if (it == valuation.end()) throw unbound_variable(name);
    return it->second;
  }
  Real add(const Real& a, const Real& b) const { return smeadow::add(a, b); }
  Real mul(const Real& a, const Real& b) const { return smeadow::mul(a, b); }
  Real neg(const Real& a) const { return smeadow::neg(a); }
  Real inv(const Real& a) const { return smeadow::inv(a); }
  Real sign(const Real& a) const { return session.rational(to_int(smeadow::sign(a))); }
  Real sqrt(const Real& a) const { return ssqrt(a); }
  Real conj(const Real&) const { throw unsupported_symbol("conj", kExactName); }
  Real re(const Real&) const { throw unsupported_symbol("re", kExactName); }
};

struct Finite {
  using value_type = Residue;

  const ResidueValuation& valuation;
  const PrimeField& field;

  std::string name() const { return "fp:" + std::to_string(field.modulus()); }

  Residue constant(const Rational& q) const {
    const auto p = field.modulus();
    const Residue num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    const Residue den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    return field.mul(num, field.inv(den));
  }
  Residue var(const std::string& name) const {
    auto it = valuation.find(name);
    if (it == valuation.end()) throw unbound_variable(name);
    return it->second % field.modulus();
  }
  Residue add(Residue a, Residue b) const { return field.add(a, b); }
  Residue mul(Residue a, Residue b) const { return field.mul(a, b); }
  Residue neg(Residue a) const { return field.neg(a); }
  Residue inv(Residue a) const { return field.inv(a); }
  Residue sign(Residue) const { throw unsupported_symbol("s", name()); }
  Residue sqrt(Residue) const { throw unsupported_symbol("sqrt", name()); }
  Residue conj(Residue) const { throw unsupported_symbol("conj", name()); }
  Residue re(Residue) const { throw unsupported_symbol("re", name()); }
};

struct ComplexModel {
  using value_type = Complex;

  const ComplexValuation& valuation;
  Session session;

  Complex constant(const Rational& q) const { return Complex::real(session.rational(q)); }
  Complex var(const std::string& name) const {
    auto it = valuation.find(name);
    if (it == valuation.end()) throw unbound_variable(name);
    return it->second;
  }
  Complex add(const Complex& a, const Complex& b) const { return smeadow::add(a, b); }
  Complex mul(const Complex& a, const Complex& b) const { return smeadow::mul(a, b); }
  Complex neg(const Complex& a) const { return smeadow::neg(a); }
  Complex inv(const Complex& a) const { return cinv(a); }
  Complex sign(const Complex& a) const { return Complex::real(session.rational(to_int(csign(a)))); }
  Complex sqrt(const Complex& a) const { return cssqrt(a); }
  Complex conj(const Complex& a) const { return smeadow::conj(a); }
  Complex re(const Complex& a) const { return re_part(a); }
};

}  // namespace model

inline Real eval_exact(const Term& t, const ExactValuation& val, const Session& session) {
  return evaluate(t, model::Exact{val, session});
}

inline Real eval_exact(const Term& t, const Session& session) {
  const ExactValuation empty;
  return evaluate(t, model::Exact{empty, session});
}

inline Residue eval_mod_p(const Term& t, const ResidueValuation& val, const PrimeField& field) {
  return evaluate(t, model::Finite{val, field});
}

inline Complex eval_complex(const Term& t, const ComplexValuation& val, const Session& session) {
  return evaluate(t, model::ComplexModel{val, session});
}

}  // namespace smeadow
