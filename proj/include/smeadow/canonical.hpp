#pragma once

// Canonical closed-term form of a tower value.
//
// The value is written as a sum of monomials q·√R1·√R2·…, one per nonzero coordinate, where
// each Ri is itself the canonical form of a tower radicand. Radicals inside a monomial are
// ordered by (nesting depth, rendered text); monomials by (number of radicals, radical keys).
// Ordering never depends on the order in which a session happened to adjoin its radicals.

#include <algorithm>
#include <cstddef>
#include <map>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "smeadow/kernel.hpp"
#include "smeadow/parse.hpp"
#include "smeadow/term.hpp"

namespace smeadow {

namespace detail {

struct RadicalKey {
  std::size_t nesting = 0;
  std::string text;

  friend bool operator<(const RadicalKey& a, const RadicalKey& b) {
    return std::tie(a.nesting, a.text) < std::tie(b.nesting, b.text);
  }
  friend bool operator==(const RadicalKey& a, const RadicalKey& b) {
    return a.nesting == b.nesting && a.text == b.text;
  }
};

class CanonicalWriter {
 public:
  explicit CanonicalWriter(Session s) : session_(std::move(s)) {}

  Term write(const Real& a) { return write_coords(a.coords()); }

 private:
  struct Radical {
    RadicalKey key;
    Term term;
  };

  struct Monomial {
    Rational coeff;
    std::vector<const Radical*> factors;
  };

  const Radical& radical(std::size_t level) {
    auto it = radicals_.find(level);
    if (it != radicals_.end()) return it->second;
    const Real r = session_.radicand(level);
    std::size_t nesting = 1;
    for (std::size_t mask = 0; mask < r.coords().size(); ++mask) {
      if (r.coords()[mask] == 0) continue;
      for (std::size_t bit = 0; (std::size_t{1} << bit) <= mask; ++bit)
        if (mask & (std::size_t{1} << bit)) nesting = std::max(nesting, radical(bit + 1).key.nesting + 1);
    }
    Term body = write_coords(r.coords());
    Radical rad{{nesting, render(body)}, term::sqrt(body)};
    return radicals_.emplace(level, std::move(rad)).first->second;
  }

  Term write_coords(const detail::Coords& coords) {
    std::vector<Monomial> monomials;
    for (std::size_t mask = 0; mask < coords.size(); ++mask) {
      if (coords[mask] == 0) continue;
      Monomial m{coords[mask], {}};
      for (std::size_t bit = 0; (std::size_t{1} << bit) <= mask; ++bit)
        if (mask & (std::size_t{1} << bit)) m.factors.push_back(&radical(bit + 1));
      std::sort(m.factors.begin(), m.factors.end(),
                [](const Radical* a, const Radical* b) { return a->key < b->key; });
      monomials.push_back(std::move(m));
    }
    if (monomials.empty()) return term::zero();

    std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
      if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
      for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (a.factors[i]->key < b.factors[i]->key) return true;
        if (b.factors[i]->key < a.factors[i]->key) return false;
      }
      return false;
    });

    Term acc = monomial_term(monomials.front(), true);
    for (std::size_t i = 1; i < monomials.size(); ++i) {
      const auto& m = monomials[i];
      if (m.coeff < 0)
        acc = term::add(acc, term::neg(monomial_term({-m.coeff, m.factors}, false)));
      else
        acc = term::add(acc, monomial_term(m, false));
    }
    return acc;
  }

  // The leading monomial carries its own sign on its first factor: "-2 * sqrt(2)", "-sqrt(3)".
  static Term monomial_term(const Monomial& m, bool leading) {
    if (m.factors.empty()) return term::constant(m.coeff);
    const bool negative = leading && m.coeff < 0;
    const Rational mag = abs(m.coeff);
    Term acc;
    std::size_t first = 0;
    if (mag == 1) {
      acc = m.factors[0]->term;
      first = 1;
    } else {
      acc = Term::make_const(mag);
    }
    if (negative) acc = term::neg(acc);
    for (std::size_t i = first; i < m.factors.size(); ++i) acc = term::mul(acc, m.factors[i]->term);
    return acc;
  }

  Session session_;
  std::map<std::size_t, Radical> radicals_;
};

}  // namespace detail

inline Term canonical_term(const Real& a) { return detail::CanonicalWriter(a.session()).write(a); }

// Closed term text for a value; equal values of one session give identical strings.
inline std::string serialize(const Real& a) { return render(canonical_term(a)); }

}  // namespace smeadow
