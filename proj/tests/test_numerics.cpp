#include <gtest/gtest.h>

#include "fpss/numerics.hpp"

using namespace fpss;

TEST(Numerics, rho_values) {
  EXPECT_EQ(rho(5, -1), 1);
  EXPECT_EQ(rho(5, 0), 0);
  EXPECT_EQ(rho(5, 1), 21);
  EXPECT_EQ(rho(5, 2), 25);
  EXPECT_EQ(rho(5, 3), 521);
  EXPECT_EQ(rho(5, 4), 650);
  EXPECT_THROW(rho(5, -2), std::domain_error);
}

TEST(Numerics, rho_closed_form_relations) {
  for (std::uint64_t p : {5ull, 7ull, 11ull})
    for (std::int64_t k = 1; k <= 8; ++k) {
      BigInt P = p;
      EXPECT_EQ(rho_exact(p, 2 * k - 1) * (P + 1), boost::multiprecision::pow(P, 2 * k + 1) + 1);
      EXPECT_EQ(rho_exact(p, 2 * k) * (P * P - 1), boost::multiprecision::pow(P, 2 * k + 2) - P * P);
    }
}

TEST(Numerics, rho_alternating_sum_and_recursion) {
  for (std::uint64_t p : {5ull, 7ull})
    for (std::int64_t k = 1; k <= 8; ++k) {
      BigInt alt = 0, P = p;
      for (int e = 0; e <= 2 * k; ++e) alt += (e % 2 ? -1 : 1) * boost::multiprecision::pow(P, e);
      EXPECT_EQ(rho_exact(p, 2 * k - 1), alt);
      EXPECT_EQ(rho_exact(p, 2 * k), P * P * rho_exact(p, 2 * k - 2) + P * P);
      EXPECT_EQ(rho_exact(p, 2 * k) % (P * P), 0);
    }
}

TEST(Numerics, rho_overflow_guard) {
  EXPECT_THROW(rho(7, 60), std::overflow_error);
  EXPECT_EQ(rho_sat(7, 60), std::numeric_limits<std::int64_t>::max());
  EXPECT_GT(rho_exact(7, 60), BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(Numerics, valuation) {
  EXPECT_EQ(vp(5, 50), 2u);
  EXPECT_EQ(vp(5, 7), 0u);
  EXPECT_EQ(vp(5, -125), 3u);
  EXPECT_THROW(vp(5, 0), std::domain_error);
  EXPECT_EQ(vp(5, std::numeric_limits<std::int64_t>::min()), 0u);
  EXPECT_EQ(vp(2, std::numeric_limits<std::int64_t>::min()), 63u);
}

TEST(Numerics, binomial_examples) {
  EXPECT_EQ(binom_mod_p(5, 1, 1), 2u);
  EXPECT_EQ(binom_mod_p(5, 2, 3), 0u);
  EXPECT_EQ(binom_mod_p(5, 5, 5), 2u);
}

TEST(NumericsProperty, lucas_matches_exact_binomial) {
  // Pascal rows kept exactly as big integers.
  std::vector<BigInt> row{1};
  for (std::uint64_t n = 0; n <= 2000; ++n) {
    for (std::uint64_t i = 0; i <= n; i += (n > 300 ? 37 : 1))
      for (Residue p : {3u, 5u, 7u})
        ASSERT_EQ(binom_mod_p(p, i, n - i), static_cast<Residue>(row[i] % p)) << n << ' ' << i;
    std::vector<BigInt> next(row.size() + 1);
    next[0] = 1;
    next.back() = 1;
    for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
    row.swap(next);
  }
}

TEST(Numerics, floor_division) {
  EXPECT_EQ(floor_div(-7, 5), -2);
  EXPECT_EQ(floor_mod(-7, 5), 3);
  EXPECT_EQ(floor_div(7, 5), 1);
  EXPECT_THROW(ipow(5, 40), std::overflow_error);
}
