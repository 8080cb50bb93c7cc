#include <gtest/gtest.h>

#include <set>

#include "fpss/numerics.hpp"
#include "fpss/tc_assembly.hpp"

using namespace fpss;

namespace {

// Degrees of free P(v2)-module generators spread over a window by hand.
PoincareSeries free_series(const std::vector<std::int64_t>& gens, std::int64_t v2, std::int64_t lo, std::int64_t hi) {
  PoincareSeries ps(lo, hi);
  for (std::int64_t g : gens)
    for (std::int64_t d = g; d <= hi; d += v2)
      if (d >= lo) ++ps[d];
  return ps;
}

// E(eb1, l2) (x) P(v2).
std::vector<std::int64_t> a_gens(std::int64_t p) {
  const std::int64_t e = 2 * p - 1, l = 2 * p * p - 1;
  return {0, e, l, e + l};
}

// Kernel of R - 1: A plus E(l2) (x) {t^d} plus E(eb1) (x) {t^{dp} l2}, each tensored with P(v2).
std::vector<std::int64_t> ker_gens(std::int64_t p) {
  auto g = a_gens(p);
  const std::int64_t e = 2 * p - 1, l = 2 * p * p - 1;
  for (std::int64_t d = 1; d < p * p - p; ++d)
    if (d % p) {
      g.push_back(-2 * d);
      g.push_back(-2 * d + l);
    }
  for (std::int64_t d = 1; d < p; ++d) {
    g.push_back(-2 * d * p + l);
    g.push_back(-2 * d * p + l + e);
  }
  return g;
}

std::set<std::string> labels(const PvModule& m) {
  std::set<std::string> s;
  for (const auto& g : m.generators) s.insert(g.label);
  return s;
}

}  // namespace

TEST(TcAssembly, r_map_on_named_monomials) {
  const Residue p = 5;
  const Algebra ta = tate_ambient(p, 1)->alg;
  const Algebra ha = hofix_ambient(p, 1)->alg;
  auto one = rh_image(p, ha.unit());
  ASSERT_TRUE(one);
  EXPECT_EQ(*one, ta.unit());
  auto a = rh_image(p, ha.monomial({{"eb1", 1}, {"l2", 1}, {"tm2", 3}}));
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, ta.monomial({{"eb1", 1}, {"l2", 1}, {"tm2", 3}}));
  // l2 mu2^{-25} (t mu2)^30 -> l2 t^25 (t mu2)^5.
  auto b = rh_image(p, ha.monomial({{"l2", 1}, {"m2", -25}, {"tm2", 30}}));
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, ta.monomial({{"l2", 1}, {"t", 25}, {"tm2", 5}}));
  // Negative d: the would-be target t^{-25} (t mu2)^25 is not a Tate class.
  EXPECT_FALSE(rh_image(p, ha.monomial({{"l2", 1}, {"m2", 25}})));
  EXPECT_FALSE(rh_image(p, ha.monomial({{"m0", 2}})));
  // G sends t^{-i} to mu0^i and t^{p^2 j} to mu2^{-j}.
  EXPECT_EQ(g_image(p, ta.monomial({{"t", -3}})), ha.monomial({{"m0", 3}}));
  EXPECT_EQ(g_image(p, ta.monomial({{"t", 22}})), ha.monomial({{"m0", 3}, {"m2", -1}}));
  EXPECT_EQ(g_image(p, ta.monomial({{"t", 50}, {"tm2", 4}})), ha.monomial({{"m2", -2}, {"tm2", 4}}));
  EXPECT_THROW(g_image(p, ta.monomial({{"t", 5}})), std::invalid_argument);
  // R is zero on B_2: t^{25} (t mu2)^c has no t^1 class to land on.
  EXPECT_FALSE(r_image(p, ta.monomial({{"t", 25}, {"tm2", 3}})));
}

TEST(TcAssembly, rh_map_clauses) {
  auto rep = rh_map_check(5, 9, 200);
  EXPECT_TRUE(rep.pass) << rep.witness;
  for (std::size_t c = 0; c < 4; ++c) EXPECT_GT(rep.checked[c], 0u) << c;
  EXPECT_GT(rep.targets_hit, 0u);
  EXPECT_THROW(rh_map_check(5, 8, 20), std::invalid_argument);
  EXPECT_THROW(rh_map_check(4, 9, 20), std::invalid_argument);
  EXPECT_TRUE(rh_map_check(7, 13, 120).pass);
}

TEST(TcAssembly, decomposition_is_a_disjoint_cover) {
  const Residue p = 5;
  auto dec = tf_decompose(p, 9, 120);
  std::size_t basis = 0;
  for (std::int64_t n = 9; n <= 120; ++n) basis += s1_tate_basis(p, n, dec.kmax).size();
  EXPECT_EQ(dec.size(), basis);
  const Algebra ta = tate_ambient(p, 1)->alg;
  auto has = [](const std::vector<Monomial>& v, const Monomial& m) { return std::find(v.begin(), v.end(), m) != v.end(); };
  EXPECT_TRUE(has(dec.A, ta.monomial({{"eb1", 1}, {"l2", 1}})));
  EXPECT_TRUE(has(dec.B.at(2), ta.monomial({{"l2", 1}, {"t", 25}, {"tm2", 1}})));
  EXPECT_TRUE(has(dec.C.at(2), ta.monomial({{"l2", 1}, {"t", 125}, {"tm2", 6}})));
  std::set<Monomial> all;
  auto collect = [&all](const std::vector<Monomial>& v) {
    for (const auto& m : v) {
      EXPECT_EQ(m[tate_gen::u], 0);
      EXPECT_TRUE(all.insert(m).second);
    }
  };
  collect(dec.A);
  collect(dec.D);
  for (const auto& [k, v] : dec.B) collect(v);
  for (const auto& [k, v] : dec.C) collect(v);
}

TEST(TcAssembly, fixed_points_match_closed_forms) {
  const std::int64_t p = 5, v2 = 2 * p * p - 2;
  auto fp = r_fixed_points(p, 9, 200);
  ASSERT_TRUE(fp.pass) << fp.failure;
  EXPECT_LT(fp.stable_level, fp.kmax);
  EXPECT_EQ(fp.ker, free_series(ker_gens(p), v2, 9, 200));
  EXPECT_EQ(fp.cok, free_series(a_gens(p), v2, 9, 200));
  // E(l2) (x) {t^d}: 2 (p - 1)^2 generators.
  EXPECT_EQ(ker_gens(p).size() - 4 - 2 * (p - 1), static_cast<std::size_t>(2 * (p - 1) * (p - 1)));
}

TEST(TcAssembly, stabilization_is_independent_of_level) {
  auto a = r_fixed_points(5, 9, 150);
  auto b = r_fixed_points(5, 9, 150, a.kmax + 1);
  ASSERT_TRUE(a.pass && b.pass) << a.failure << b.failure;
  EXPECT_EQ(a.ker, b.ker);
  EXPECT_EQ(a.cok, b.cok);
  // One level short of stability the top step is not yet bijective.
  EXPECT_FALSE(r_fixed_points(5, 9, 150, 3).pass);
}

TEST(TcAssembly, tc_presentation_and_exactness) {
  const Residue p = 5;
  auto tc = tc_presentation(p);
  auto s = tc.series(-1, 9);
  EXPECT_GE(s.at(-1), 1);
  EXPECT_TRUE(labels(tc).count("eb1"));
  EXPECT_GE(s.at(9), 1);
  auto rep = tc_exactness_check(p, 9, 100);
  EXPECT_TRUE(rep.pass) << rep.detail << " " << rep.expected << " vs " << rep.actual;
  auto low = tc_exactness_check(p, -5, 60);
  EXPECT_TRUE(low.pass) << low.detail;
  // Dropping one generator must be detected.
  auto broken = tc;
  broken.generators.pop_back();
  EXPECT_FALSE(tc_exactness_check(broken, 9, 100).pass);
  EXPECT_TRUE(k_tc_check(p, -5, 300).pass);
}

TEST(TcAssembly, k_rank_and_euler) {
  for (std::int64_t p : {5, 7, 11}) {
    auto k = k_presentation(static_cast<Residue>(p));
    EXPECT_EQ(k.rank(), static_cast<std::size_t>(8 + 2 * (p - 1) * (p - 1) + 2 * (p - 1)));
    EXPECT_EQ(k.rank(), static_cast<std::size_t>(2 * p * p - 2 * p + 8));
    EXPECT_EQ(k.euler(), 0);
    std::map<int, std::pair<int, int>> parity;
    for (const auto& g : k.generators) (g.degree % 2 == 0 ? parity[g.row].first : parity[g.row].second)++;
    ASSERT_EQ(parity.size(), 3u);
    for (const auto& [row, c] : parity) EXPECT_EQ(c.first, c.second) << row;
    EXPECT_FALSE(k.conditional);
  }
  EXPECT_EQ(k_presentation(5).rank(), 48u);
  EXPECT_EQ(k_presentation(7).rank(), 92u);
  EXPECT_THROW(k_presentation(3), std::invalid_argument);
}

TEST(TcAssembly, k_lp_conditional_presentation) {
  auto rep = k_lp_checks(5);
  EXPECT_TRUE(rep.pass) << rep.detail;
  EXPECT_TRUE(rep.localized_equal);
  EXPECT_EQ(rep.rank, 48u);
  EXPECT_EQ(rep.euler, 0);
  EXPECT_EQ(rep.kzp, poincare_series(std::vector<std::int64_t>{0, 9}, 0, 9));
  auto lp = k_lp_presentation(5);
  EXPECT_TRUE(lp.conditional);
  // Before inverting v2 the two presentations differ (dlog v1 sits in degree 1, l2 in 49).
  EXPECT_NE(lp.series(0, 60), k_presentation(5).series(0, 60));
  EXPECT_TRUE(k_lp_checks(7).pass);
}

TEST(TcAssembly, json_export) {
  auto j = to_json(k_presentation(5));
  EXPECT_EQ(j["p"], 5);
  EXPECT_EQ(j["v2_degree"], 48);
  EXPECT_EQ(j["rank"], 48);
  EXPECT_EQ(j["euler"], 0);
  EXPECT_EQ(j["generators"].size(), 48u);
  EXPECT_EQ(j["generators"][0]["freeness"], "free");
  EXPECT_EQ(to_json(k_lp_presentation(5))["conditional"], true);
}
