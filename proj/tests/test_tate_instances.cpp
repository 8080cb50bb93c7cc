#include <gtest/gtest.h>

#include <set>

#include "fpss/numerics.hpp"
#include "fpss/tate_instances.hpp"

using namespace fpss;

namespace {

std::string failures(const RunReport& r) {
  std::string s = r.error;
  for (const auto& c : r.checks)
    if (!c.report.pass) s += " [" + c.label + "] " + c.report.summary();
  return s;
}

// Degree-8 classes of the n = 1 Tate E^infinity listed by hand: t^{-4} and eb1 l2 t^{25}.
std::set<Monomial> expected_degree_8(const Algebra& a) {
  return {a.monomial({{"t", -4}}), a.monomial({{"eb1", 1}, {"l2", 1}, {"t", 25}})};
}

}  // namespace

TEST(TateInstances, scripts_are_strictly_increasing_with_closed_forms) {
  for (std::int64_t n : {1, 2, 3}) {
    for (const auto& inst : {cpn_tate_instance(5, n), cpn_hofix_instance(5, n)}) {
      ASSERT_EQ(inst.closed_forms.size(), inst.script.size() + 1);
      EXPECT_EQ(inst.script.size(), static_cast<std::size_t>(2 * n + 2));
      for (std::size_t i = 0; i < inst.script.size(); ++i) {
        if (i) {
          EXPECT_LT(inst.script[i - 1].r, inst.script[i].r);
        }
        EXPECT_EQ(inst.closed_forms[i + 1].r, inst.script[i].r + 1);
      }
      EXPECT_EQ(inst.script.back().r, 2 * rho(5, 2 * n) + 1);
    }
  }
  auto cp = cp_tate_instance(5);
  std::vector<std::int64_t> rs;
  for (const auto& d : cp.script) rs.push_back(d.r);
  EXPECT_EQ(rs, (std::vector<std::int64_t>{2, 42, 50, 51}));
  EXPECT_THROW(cpn_tate_instance(3, 1), std::invalid_argument);
  EXPECT_THROW(cpn_hofix_instance(5, 0), std::invalid_argument);
}

TEST(TateInstances, cp_run_matches_closed_forms) {
  const std::int64_t band = tate_band(5, 1);
  for (RunMode mode : {RunMode::Verification, RunMode::Propagation}) {
    auto rep = run_instance(cp_tate_instance(5), -20, 120, band, mode);
    EXPECT_TRUE(rep.pass) << failures(rep);
    ASSERT_EQ(rep.pages.size(), 4u);
    const Page& einf = rep.pages.back();
    EXPECT_EQ(einf.dim_total(8), 2u);
    std::set<Monomial> seen;
    for (const auto& [b, c] : einf.cells)
      if (b.total() == 8)
        for (std::size_t i = 0; i < c.dim(); ++i) {
          Element e = einf.rep_element(b, i);
          for (const auto& [m, x] : e.terms()) seen.insert(m);
        }
    EXPECT_EQ(seen, expected_degree_8(einf.ambient->alg));
  }
  // Degree 0 holds the unit and u1 l2 t^{24} = u1 l2 t^{-1} t^{p^2}.
  auto zero = run_instance(cp_tate_instance(5), 0, 0, band, RunMode::Propagation);
  EXPECT_TRUE(zero.pass);
  const Page& z = zero.pages.back();
  const Algebra& za = z.ambient->alg;
  EXPECT_EQ(z.dim_total(0), 2u);
  EXPECT_EQ(z.dim(Bideg{0, 0}), 1u);
  EXPECT_EQ(z.labels(za.bidegree(za.monomial({{"u1", 1}, {"l2", 1}, {"t", 24}}))).size(), 1u);
}

TEST(TateInstances, cpn_n1_coincides_with_cp) {
  const std::int64_t band = tate_band(5, 1);
  auto a = run_instance(cp_tate_instance(5), -20, 120, band, RunMode::Propagation);
  auto b = run_instance(cpn_tate_instance(5, 1), -20, 120, band, RunMode::Propagation);
  ASSERT_TRUE(a.pass && b.pass) << failures(a) << failures(b);
  ASSERT_EQ(a.pages.size(), b.pages.size());
  for (std::size_t i = 0; i < a.pages.size(); ++i) EXPECT_TRUE(pages_agree(a.pages[i], b.pages[i])) << i;
}

TEST(TateInstances, cpn_runs_small_window) {
  for (std::int64_t n : {1, 2}) {
    auto t = run_instance(cpn_tate_instance(5, n), -20, 60, tate_band(5, n), RunMode::Verification);
    EXPECT_TRUE(t.pass) << n << failures(t);
    auto h = run_instance(cpn_hofix_instance(5, n), -20, 60, hofix_band(5, n, 60), RunMode::Verification);
    EXPECT_TRUE(h.pass) << n << failures(h);
  }
  auto h1 = run_instance(cpn_hofix_instance(5, 1), -20, 60, hofix_band(5, 1, 60), RunMode::Propagation);
  EXPECT_TRUE(h1.pass) << failures(h1);
  auto empty = run_instance(cpn_tate_instance(5, 1), 5, 4, tate_band(5, 1), RunMode::Verification);
  EXPECT_TRUE(empty.pass) << failures(empty);
}

TEST(TateInstances, relabel_agreement_n1_n2) {
  const std::int64_t band = tate_band(5, 2);
  const std::int64_t last = 2 * rho(5, 2) + 1;
  for (RunMode mode : {RunMode::Propagation, RunMode::Verification}) {
    auto a = run_instance(cpn_tate_instance(5, 1), -20, 60, band, mode);
    auto b = run_instance(cpn_tate_instance(5, 2), -20, 60, band, mode, last);
    ASSERT_TRUE(a.pass && b.pass) << failures(a) << failures(b);
    EXPECT_EQ(b.pages.size(), 3u);
    auto rep = relabel_agreement(a, b, 5, 1);
    EXPECT_TRUE(rep.pass) << rep.failure;
    EXPECT_EQ(rep.compared, 3u);
  }
  auto a = run_instance(cpn_hofix_instance(5, 1), -20, 60, hofix_band(5, 2, 60), RunMode::Propagation);
  auto b = run_instance(cpn_hofix_instance(5, 2), -20, 60, hofix_band(5, 2, 60), RunMode::Propagation, last);
  auto rep = relabel_agreement(a, b, 5, 1);
  EXPECT_TRUE(rep.pass) << rep.failure;
}

TEST(TateInstances, s1_limit) {
  const std::int64_t band = tate_band(5, 2);
  std::int64_t n = window_sufficient_n(5, -40, 160, band);
  EXPECT_EQ(n, 3);
  auto rep = s1_limit_check(5, n, -40, 160, band);
  EXPECT_TRUE(rep.pass) << rep.witness;
  EXPECT_GT(rep.compared, 1000u);
  auto early = s1_limit_check(5, 1, -40, 160, band);
  EXPECT_FALSE(early.pass);
  auto s1 = s1_tate_member(5);
  Algebra a = tate_ambient(5, 3)->alg;
  EXPECT_TRUE(s1(a.unit()));
  EXPECT_TRUE(s1(a.monomial({{"l2", 1}})));
  EXPECT_FALSE(s1(a.monomial({{"u3", 1}})));
}

TEST(TateInstances, s1_hofix_limit) {
  const std::int64_t band = hofix_band(5, 1, 160);
  std::int64_t n = hofix_window_sufficient_n(5, -40, 160, band);
  EXPECT_EQ(n, 2);
  auto rep = s1_hofix_limit_check(5, n, -40, 160, band);
  EXPECT_TRUE(rep.pass) << rep.witness;
  EXPECT_GT(rep.compared, 1000u);
  EXPECT_FALSE(s1_hofix_limit_check(5, 1, -40, 160, band).pass);
}

TEST(TateInstances, lemma_checks) {
  for (std::int64_t n : {1, 2}) {
    auto gap = filtration_gap_check(5, n, -200, 400);
    EXPECT_TRUE(gap.pass) << gap.witness;
    EXPECT_GT(gap.parameters, 0u);
    EXPECT_GT(gap.candidates, 0u);
  }
  auto src = unique_source_check(5, 1, -200, 400);
  EXPECT_TRUE(src.pass) << src.witness;
  EXPECT_GT(src.parameters, 0u);
  auto src2 = unique_source_check(5, 2, -200, 400);
  EXPECT_TRUE(src2.pass);
  EXPECT_EQ(src2.parameters, 0u);
  auto wide = unique_source_check(5, 2, -10000, 10000);
  EXPECT_TRUE(wide.pass) << wide.witness;
  EXPECT_GT(wide.parameters, 0u);
  auto none = filtration_gap_check(5, 1, 5, 4);
  EXPECT_TRUE(none.pass);
  EXPECT_EQ(none.parameters, 0u);
}
