#pragma once

// Text syntax for terms.
//
//   expr    := term (("+" | "-") term)*
//   term    := factor (("*" | "/") factor)*
//   factor  := "-" factor | power
//   power   := atom ("^" ["-"] int)?
//   atom    := rational | ident | "(" expr ")" | "[]"
//            | ("s" | "sqrt" | "inv" | "conj" | "re") "(" expr ")"
//   rational:= int ("/" int)?
//
// `a/b` is a rational literal only when both sides are integer literals and b != 0;
// otherwise `/` is division, t/u = t * inv(u). `t - u` is t + (-u). `t^n` is unrolled into
// products and `t^-n` into inv of that product; t^0 = 1.
//
// render() emits division as `t * inv(u)` and never emits `^`, so parse(render(t)) == t.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "smeadow/errors.hpp"
#include "smeadow/term.hpp"

namespace smeadow {

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse() {
    skip_ws();
    Term t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  static constexpr long kMaxExponent = 4096;

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Term expr() {
    Term acc = term();
    for (;;) {
      if (accept('+'))
        acc = term::add(acc, term());
      else if (accept('-'))
        acc = term::add(acc, term::neg(term()));
      else
        return acc;
    }
  }

  Term term() {
    Term acc = factor();
    for (;;) {
      if (accept('*'))
        acc = term::mul(acc, factor());
      else if (accept('/'))
        acc = term::mul(acc, term::inv(factor()));
      else
        return acc;
    }
  }

  Term factor() {
    if (accept('-')) return term::neg(factor());
    return power();
  }

  Term power() {
    Term base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    if (!peek_digit()) fail("exponent must be an integer literal");
    const Integer n = integer();
    if (n > kMaxExponent) fail("exponent too large");
    const long e = n.get_si();
    if (e == 0) return term::one();
    Term prod = base;
    for (long i = 1; i < e; ++i) prod = term::mul(prod, base);
    return negative ? term::inv(prod) : prod;
  }

  Term atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];

    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      // Rational literal: p/q with a literal nonzero q.
      const std::size_t save = pos_;
      if (accept('/') && peek_digit()) {
        Integer den = integer();
        if (den != 0) return term::constant(make_rational(num, den));
      }
      pos_ = save;
      return term::constant(Rational(num));
    }

    if (c == '(') {
      ++pos_;
      Term inner = expr();
      expect(')');
      return inner;
    }

    if (c == '[') {
      ++pos_;
      expect(']');
      return term::hole();
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string word(text_.substr(start, pos_ - start));
      if (peek('(')) {
        Op op;
        if (word == "s")
          op = Op::sign;
        else if (word == "sqrt")
          op = Op::sqrt;
        else if (word == "inv")
          op = Op::inv;
        else if (word == "conj")
          op = Op::conj;
        else if (word == "re")
          op = Op::re;
        else {
          pos_ = start;
          fail("unknown function '" + word + "'");
        }
        expect('(');
        Term arg = expr();
        expect(')');
        return Term::make(op, {arg});
      }
      return term::var(word);
    }

    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength: 1 sums, 2 products, 3 prefix minus, 4 atoms.
inline void render_into(const Term& t, int min_prec, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };

  switch (t.op()) {
    case Op::zero: out += '0'; return;
    case Op::one: out += '1'; return;
    case Op::constant: out += t.value().get_str(); return;
    case Op::var: out += t.name(); return;
    case Op::hole: out += "[]"; return;
    case Op::add:
      wrap(1, [&] {
        render_into(t.child(0), 1, out);
        if (t.child(1).is(Op::neg)) {
          out += " - ";
          const Term& rhs = t.child(1).child(0);
          render_into(rhs, rhs.is(Op::neg) ? 4 : 2, out);
        } else {
          out += " + ";
          render_into(t.child(1), 2, out);
        }
      });
      return;
    case Op::mul:
      wrap(2, [&] {
        render_into(t.child(0), 2, out);
        out += " * ";
        render_into(t.child(1), 3, out);
      });
      return;
    case Op::neg:
      wrap(3, [&] {
        out += '-';
        // "-(-x)" rather than "--x".
        render_into(t.child(0), t.child(0).is(Op::neg) ? 4 : 3, out);
      });
      return;
    default:
      out += op_name(t.op());
      out += '(';
      render_into(t.child(0), 0, out);
      out += ')';
      return;
  }
}

}  // namespace detail

inline Term parse(std::string_view text) { return detail::Parser(text).parse(); }

inline std::string render(const Term& t) {
  std::string out;
  detail::render_into(t, 0, out);
  return out;
}

}  // namespace smeadow
