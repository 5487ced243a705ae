#pragma once

// Totalized prime fields (F_p)_0 and the Lagrange equations
//   L_n:  (1 + x1^2 + ... + xn^2) / (1 + x1^2 + ... + xn^2) = 1,
// which hold in (F_p)_0 exactly when -1 is not a sum of n squares mod p.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "smeadow/errors.hpp"

namespace smeadow {

// Residues are plain integers in [0, p); the owning PrimeField does the arithmetic.
using Residue = std::uint64_t;

class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2) throw not_prime(static_cast<long long>(p), 0);
    if (p >= kMaxModulus) throw std::invalid_argument("modulus too large");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw not_prime(static_cast<long long>(p), static_cast<long long>(d));

    root_of_.assign(p, -1);
    for (std::uint64_t x = 0; x < p; ++x) {
      const std::uint64_t sq = x * x % p;
      if (root_of_[sq] < 0) root_of_[sq] = static_cast<std::int64_t>(x);
    }
    for (std::uint64_t v = 0; v < p; ++v)
      if (root_of_[v] >= 0) squares_.push_back(v);
  }

  std::uint64_t modulus() const { return p_; }

  // Sorted set {x^2 mod p}.
  const std::vector<Residue>& squares() const { return squares_; }
  bool is_square(Residue v) const { return root_of_[v % p_] >= 0; }
  // Smallest x with x^2 = v, if any.
  std::optional<Residue> smallest_root(Residue v) const {
    const auto r = root_of_[v % p_];
    if (r < 0) return std::nullopt;
    return static_cast<Residue>(r);
  }

  Residue reduce(long long v) const {
    const long long m = static_cast<long long>(p_);
    return static_cast<Residue>(((v % m) + m) % m);
  }

  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue mul(Residue a, Residue b) const { return a * b % p_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }

  Residue pow(Residue base, std::uint64_t e) const {
    Residue result = 1 % p_;
    base %= p_;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  // Totalized inverse: 0 -> 0, otherwise a^(p-2).
  Residue inv(Residue a) const { return a % p_ == 0 ? 0 : pow(a, p_ - 2); }

 private:
  std::uint64_t p_;
  std::vector<std::int64_t> root_of_;
  std::vector<Residue> squares_;
};

inline PrimeField make_field(std::uint64_t p) { return PrimeField(p); }

struct LagrangeResult {
  bool holds = true;
  // (x1, ..., xn) with 1 + sum xi^2 = 0, present iff !holds.
  std::vector<Residue> witness;
};

namespace detail {

inline void check_lagrange_n(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("Lagrange equation index must be in 1..4");
}

// Enumerates x_n, ..., x_2 (x_n slowest) and solves x_1 from the root table, so the first hit is
// the smallest witness comparing from the last coordinate.
inline bool find_witness(const PrimeField& f, int n, int index, Residue partial, std::vector<Residue>& xs) {
  if (index == 0) {
    const auto x1 = f.smallest_root(f.neg(f.add(1, partial)));
    if (!x1) return false;
    xs[0] = *x1;
    return true;
  }
  for (Residue x = 0; x < f.modulus(); ++x) {
    xs[index] = x;
    if (find_witness(f, n, index - 1, f.add(partial, f.mul(x, x)), xs)) return true;
  }
  return false;
}

}  // namespace detail

inline LagrangeResult lagrange_holds(const PrimeField& f, int n) {
  detail::check_lagrange_n(n);
  std::vector<Residue> xs(n, 0);
  if (detail::find_witness(f, n, n - 1, 0, xs)) return {false, xs};
  return {true, {}};
}

inline LagrangeResult lagrange_holds(std::uint64_t p, int n) { return lagrange_holds(PrimeField(p), n); }

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

struct LagrangeScan {
  int n = 1;
  std::uint64_t limit = 2;
  std::vector<std::uint64_t> holds;
  // Witnesses for the first kSampleSize primes where L_n fails.
  std::map<std::uint64_t, std::vector<Residue>> counterexample_sample;

  static constexpr std::size_t kSampleSize = 20;
};

// Every prime p <= limit for which (F_p)_0 satisfies L_n.
inline LagrangeScan scan_lagrange(int n, std::uint64_t limit) {
  detail::check_lagrange_n(n);
  if (limit < 2) throw std::invalid_argument("scan limit must be at least 2");
  LagrangeScan scan;
  scan.n = n;
  scan.limit = limit;
  for (auto p : primes_up_to(limit)) {
    auto result = lagrange_holds(PrimeField(p), n);
    if (result.holds)
      scan.holds.push_back(p);
    else if (scan.counterexample_sample.size() < LagrangeScan::kSampleSize)
      scan.counterexample_sample.emplace(p, std::move(result.witness));
  }
  return scan;
}

}  // namespace smeadow
