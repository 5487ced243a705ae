#include <gtest/gtest.h>

#include <vector>

#include "smeadow/errors.hpp"
#include "smeadow/finite_field.hpp"

using namespace smeadow;

TEST(PrimeField, TotalInverse) {
  EXPECT_EQ(PrimeField(7).inv(0), 0u);
  EXPECT_EQ(PrimeField(5).inv(2), 3u);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 101}) {
    const PrimeField f(p);
    for (Residue x = 0; x < p; ++x) {
      // x * (x * inv(x)) = x and inv(inv(x)) = x.
      EXPECT_EQ(f.mul(x, f.mul(x, f.inv(x))), x);
      EXPECT_EQ(f.inv(f.inv(x)), x);
    }
  }
}

TEST(PrimeField, RejectsComposites) {
  try {
    make_field(9);
    FAIL() << "expected not_prime";
  } catch (const not_prime& e) {
    EXPECT_EQ(e.factor(), 3);
  }
  EXPECT_THROW(make_field(1), not_prime);
  EXPECT_THROW(make_field(0), not_prime);
  EXPECT_THROW(make_field(91), not_prime);
}

TEST(PrimeField, SquareCount) {
  EXPECT_EQ(PrimeField(2).squares(), (std::vector<Residue>{0, 1}));
  EXPECT_EQ(PrimeField(3).squares(), (std::vector<Residue>{0, 1}));
  for (std::uint64_t p : {3, 5, 7, 11, 13, 97, 1009}) EXPECT_EQ(PrimeField(p).squares().size(), (p + 1) / 2);
}

TEST(Lagrange, Examples) {
  EXPECT_TRUE(lagrange_holds(3, 1).holds);
  const auto five = lagrange_holds(5, 1);
  EXPECT_FALSE(five.holds);
  EXPECT_EQ(five.witness, (std::vector<Residue>{2}));
  EXPECT_EQ(lagrange_holds(3, 2).witness, (std::vector<Residue>{1, 1}));
  EXPECT_EQ(lagrange_holds(2, 2).witness, (std::vector<Residue>{1, 0}));
  EXPECT_EQ(lagrange_holds(2, 1).witness, (std::vector<Residue>{1}));
  EXPECT_THROW(lagrange_holds(5, 0), std::invalid_argument);
  EXPECT_THROW(lagrange_holds(5, 5), std::invalid_argument);
}

TEST(Lagrange, ScanSmall) {
  EXPECT_EQ(scan_lagrange(1, 30).holds, (std::vector<std::uint64_t>{3, 7, 11, 19, 23}));
  EXPECT_TRUE(scan_lagrange(1, 2).holds.empty());
  EXPECT_TRUE(scan_lagrange(2, 1000).holds.empty());
  EXPECT_THROW(scan_lagrange(1, 1), std::invalid_argument);
}

TEST(Lagrange, WitnessesAreGenuine) {
  for (int n = 1; n <= 4; ++n) {
    const auto scan = scan_lagrange(n, 400);
    EXPECT_LE(scan.counterexample_sample.size(), LagrangeScan::kSampleSize);
    for (const auto& [p, w] : scan.counterexample_sample) {
      ASSERT_EQ(w.size(), static_cast<std::size_t>(n));
      const PrimeField f(p);
      Residue sum = 1;
      for (auto x : w) sum = f.add(sum, f.mul(x, x));
      EXPECT_EQ(sum, 0u) << "p=" << p << " n=" << n;
    }
  }
}

// Adding a variable can only make the sum vanish more easily.
TEST(Lagrange, FailureIsMonotoneInVariableCount) {
  for (auto p : primes_up_to(300))
    for (int n = 1; n < 4; ++n)
      if (!lagrange_holds(p, n).holds) {
        EXPECT_FALSE(lagrange_holds(p, n + 1).holds) << p << " " << n;
      }
}

TEST(Primes, Sieve) {
  EXPECT_EQ(primes_up_to(20), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(primes_up_to(1).empty());
  EXPECT_EQ(primes_up_to(10000).size(), 1229u);
}
