#include <gtest/gtest.h>

#include <random>

#include "fpss/fp_linalg.hpp"

using namespace fpss;

namespace {

// Textbook dense Gaussian elimination mod p, used as an independent oracle.
std::size_t dense_rank(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  std::size_t rank = 0;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && ((a[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::int64_t inv = 1, x = ((a[rank][c] % p) + p) % p;
    for (std::int64_t k = 1; k < p; ++k)
      if (x * k % p == 1) inv = k;
    for (auto& v : a[rank]) v = ((v * inv) % p + p) % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::int64_t f = ((a[r][c] % p) + p) % p;
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Residue p, double density) {
  std::vector<std::vector<std::int64_t>> d(r, std::vector<std::int64_t>(c, 0));
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<std::int64_t> v(1, p - 1);
  for (auto& row : d)
    for (auto& x : row)
      if (u(rng) < density) x = v(rng);
  return SparseMatrix::from_dense(d, p, c);
}

std::vector<std::vector<std::int64_t>> to_dense(const SparseMatrix& m) {
  std::vector<std::vector<std::int64_t>> d(m.rows, std::vector<std::int64_t>(m.cols, 0));
  for (auto [r, c, v] : m.entries()) d[r][c] = v;
  return d;
}

SparseVec mat_vec(const SparseMatrix& m, const SparseVec& x) {
  PrimeField f(m.p);
  SparseVec out;
  for (std::size_t r = 0; r < m.rows; ++r) {
    Residue acc = 0;
    for (auto [c, v] : m.data[r])
      for (auto [k, w] : x)
        if (k == c) acc = f.add(acc, f.mul(v, w));
    if (acc) out.emplace_back(static_cast<std::uint32_t>(r), acc);
  }
  return out;
}

}  // namespace

TEST(FpLinalg, empty_matrix_has_rank_zero) {
  SparseMatrix m;
  m.p = 5;
  auto r = rref(m);
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.pivots.empty());
}

TEST(FpLinalg, identity_rank) {
  auto r = rref(SparseMatrix::from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(FpLinalg, dependent_rows) {
  auto r = rref(SparseMatrix::from_dense({{1, 2}, {2, 4}}, 5));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.rref.get(0, 0), 1u);
  EXPECT_EQ(r.rref.get(0, 1), 2u);
}

TEST(FpLinalg, kernel_examples) {
  EXPECT_TRUE(kernel_basis(SparseMatrix::from_dense({{1, 0}, {0, 1}}, 5)).empty());
  auto z = kernel_basis(SparseMatrix::from_dense({{0, 0, 0}, {0, 0, 0}}, 5));
  ASSERT_EQ(z.size(), 3u);
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(z[i], (SparseVec{{i, 1}}));
  auto k = kernel_basis(SparseMatrix::from_dense({{1, 2}}, 5));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (SparseVec{{0, 3}, {1, 1}}));
}

TEST(FpLinalg, quotient_examples) {
  EXPECT_EQ(quotient_basis({10, 11}, {{{10, 1}, {11, 1}}}, 5), (std::vector<std::uint64_t>{11}));
  EXPECT_EQ(quotient_basis({10}, {}, 5), (std::vector<std::uint64_t>{10}));
  EXPECT_EQ(quotient_basis({1, 2, 3}, {{{1, 1}}, {{2, 1}}}, 5), (std::vector<std::uint64_t>{3}));
  EXPECT_THROW(quotient_basis({1, 2}, {{{7, 1}}}, 5), std::invalid_argument);
}

TEST(FpLinalg, rejects_composite_modulus) { EXPECT_THROW(PrimeField(4), std::invalid_argument); }

TEST(FpLinalgProperty, rank_matches_dense_oracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = rng() % 8, c = rng() % 8;
    auto m = random_matrix(rng, r, c, 5, 0.1 + 0.8 * (trial % 5) / 5.0);
    EXPECT_EQ(rref(m).rank, dense_rank(to_dense(m), 5));
  }
}

TEST(FpLinalgProperty, rank_nullity_and_kernel) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Residue p = trial % 2 ? 5 : 7;
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    auto m = random_matrix(rng, r, c, p, 0.5);
    auto rr = rref(m);
    auto ker = kernel_basis(m);
    EXPECT_EQ(rr.rank + ker.size(), c);
    for (const auto& v : ker) EXPECT_TRUE(mat_vec(m, v).empty());
    SparseMatrix km(ker.size(), c, p);
    for (std::size_t i = 0; i < ker.size(); ++i) km.data[i] = ker[i];
    EXPECT_EQ(rref(km).rank, ker.size());
  }
}

TEST(FpLinalgProperty, rref_idempotent_and_row_space_preserved) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 5, 0.4);
    auto once = rref(m);
    auto twice = rref(once.rref);
    EXPECT_EQ(once.rref, twice.rref);
    EXPECT_EQ(once.pivots, twice.pivots);
    SparseMatrix stacked(m.rows + once.rank, m.cols, 5);
    for (std::size_t i = 0; i < m.rows; ++i) stacked.data[i] = m.data[i];
    for (std::size_t i = 0; i < once.rank; ++i) stacked.data[m.rows + i] = once.rref.data[i];
    EXPECT_EQ(rref(stacked).rank, once.rank);
  }
}
