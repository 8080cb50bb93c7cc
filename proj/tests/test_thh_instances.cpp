#include <gtest/gtest.h>

#include "fpss/numerics.hpp"
#include "fpss/thh_instances.hpp"

using namespace fpss;

namespace {

// Monomial count of a product of one-generator algebras in total degrees 0..hi, by direct convolution.
struct Factor {
  std::int64_t degree;
  std::int64_t bound;  // 0 for unbounded
};

PoincareSeries product_series(const std::vector<Factor>& fs, std::int64_t hi) {
  std::vector<std::int64_t> c(hi + 1, 0);
  c[0] = 1;
  for (const auto& f : fs) {
    std::vector<std::int64_t> next(hi + 1, 0);
    for (std::int64_t n = 0; n <= hi; ++n)
      for (std::int64_t e = 0; (f.bound == 0 || e < f.bound) && n + e * f.degree <= hi; ++e) next[n + e * f.degree] += c[n];
    c.swap(next);
  }
  PoincareSeries ps(0, hi);
  for (std::int64_t n = 0; n <= hi; ++n) ps[n] = c[n];
  return ps;
}

// Dimensions of the E^infinity closed form by total degree, from factor data alone.
PoincareSeries bokstedt_einf_series(RingId ring, std::int64_t p, std::int64_t hi) {
  std::vector<Factor> fs;
  auto pk = [p](std::int64_t k) { std::int64_t v = 1; while (k--) v *= p; return v; };
  for (std::int64_t k = 1; 2 * pk(k) - 2 <= hi; ++k) fs.push_back({2 * pk(k) - 2, 0});
  std::vector<std::int64_t> taus, sxis;
  switch (ring) {
    case RingId::Zp: taus = {0, 1, 2, 3}; break;
    case RingId::ZLocal: taus = {1, 2, 3}; sxis = {1}; break;
    case RingId::Ell: taus = {2, 3}; sxis = {1, 2}; break;
    case RingId::EllModP: taus = {0, 2, 3}; sxis = {2}; break;
  }
  for (auto k : taus) {
    fs.push_back({2 * pk(k) - 1, 2});
    fs.push_back({2 * pk(k), p});
  }
  for (auto k : sxis) fs.push_back({2 * pk(k) - 1, 2});
  return product_series(fs, hi);
}

PoincareSeries dims_of(const Page& page, std::int64_t lo, std::int64_t hi) {
  PoincareSeries ps(lo, hi);
  for (std::int64_t n = lo; n <= hi; ++n) ps[n] = static_cast<std::int64_t>(page.dim_total(n));
  return ps;
}

}  // namespace

TEST(ThhInstances, bokstedt_e2_examples) {
  Page zp = bokstedt_e2(RingId::Zp, 5, 0, 20);
  auto astar = poincare_series(dual_steenrod(5, 20), 0, 20);
  for (std::int64_t t = 0; t <= 20; ++t) EXPECT_EQ(zp.dim(Bideg{0, t}), static_cast<std::size_t>(astar.at(t))) << t;

  Page ell = bokstedt_e2(RingId::Ell, 5, 0, 12);
  auto labels = ell.labels(Bideg{1, 8});
  EXPECT_EQ(labels, std::vector<std::string>{"sxib1"});
  EXPECT_EQ(bokstedt_e2(RingId::Ell, 5, 3, 2).total_dim(), 0u);
  EXPECT_THROW(bokstedt_e2(RingId::Zp, 2, 0, 4), std::invalid_argument);
  EXPECT_THROW(bokstedt_e2(RingId::Zp, 3, 0, 100000), std::length_error);
}

TEST(ThhInstances, bokstedt_einf_matches_closed_forms) {
  for (RingId ring : {RingId::Zp, RingId::ZLocal, RingId::Ell, RingId::EllModP}) {
    auto run = bokstedt_run(ring, 5, 0, 60);
    EXPECT_TRUE(run.report.pass) << ring_key(ring) << run.report.summary();
    EXPECT_EQ(dims_of(run.einf, 0, 60), bokstedt_einf_series(ring, 5, 60)) << ring_key(ring);
  }
  auto small = bokstedt_run(RingId::EllModP, 3, 0, 40);
  EXPECT_TRUE(small.report.pass) << small.report.summary();
  EXPECT_EQ(dims_of(small.einf, 0, 40), bokstedt_einf_series(RingId::EllModP, 3, 40));
}

TEST(ThhInstances, hh_closed_forms) {
  const Residue p = 5;
  Algebra ex(p, {Generator::exterior("x", 0, 9)});
  Algebra ex_closed(p, {Generator::exterior("x", 0, 9), Generator::divided("sx", 0, 10)});
  EXPECT_EQ(hh_bruteforce(ex, 12), poincare_series(ex_closed, 0, 12));
  Algebra po(p, {Generator::polynomial("x", 0, 2)});
  Algebra po_closed(p, {Generator::polynomial("x", 0, 2), Generator::exterior("sx", 0, 3)});
  EXPECT_EQ(hh_bruteforce(po, 12), poincare_series(po_closed, 0, 12));

  PoincareSeries unit(0, 6);
  unit[0] = 1;
  EXPECT_EQ(hh_bruteforce(Algebra(p, {}), 6), unit);
  EXPECT_THROW(hh_bruteforce(Algebra(p, {Generator::polynomial("z", 0, 0)}), 4), std::invalid_argument);
}

TEST(ThhInstances, hochschild_boundary_squares_to_zero) {
  for (Residue p : {3u, 5u}) {
    Algebra a(p, {Generator::exterior("e", 0, 1), Generator::polynomial("x", 0, 2), Generator::truncated("y", 0, 4, p)});
    HochschildComplex c(a, 9);
    for (std::int64_t n = 2; n <= 9; ++n)
      for (std::int64_t d = 0; d + n <= 10; ++d) {
        auto b1 = c.boundary(n, d), b0 = c.boundary(n - 1, d);
        if (!b1.rows || !b0.rows || !b0.cols) continue;
        auto bb = multiply(b1, b0);
        EXPECT_TRUE(bb.entries().empty()) << p << " " << n << " " << d;
      }
  }
}

TEST(ThhInstances, bokstedt_e2_matches_hh_oracle_on_subalgebras) {
  const Residue p = 5;
  const std::int64_t hi = 20;
  // P(xib1) (x) E(taub0) inside H_*(Z/p), and its Bokstedt E^2 part E(sxib1) (x) Gamma(staub0).
  Algebra sub(p, {Generator::polynomial("xib1", 0, 8), Generator::exterior("taub0", 0, 1)});
  Algebra e2(p, {Generator::polynomial("xib1", 0, 8), Generator::exterior("taub0", 0, 1),
                 Generator::exterior("sxib1", 1, 8), Generator::divided("staub0", 1, 1)});
  EXPECT_EQ(hh_bruteforce(sub, hi), poincare_series(e2, 0, hi));

  Page zp = bokstedt_e2(RingId::Zp, p, 0, 7);
  EXPECT_EQ(dims_of(zp, 0, 7), hh_bruteforce(sub, 7));
}

TEST(ThhInstances, v1_presentations) {
  const Residue p = 5;
  auto lp = v1_thh_presentation(RingId::EllModP, p);
  EXPECT_EQ(lp.series(9, 9).at(9), 1);
  EXPECT_EQ(lp.alg.format(lp.basis(9).at(0)), lp.alg.format(lp.alg.monomial({{"eb1", 1}})));
  EXPECT_EQ(v1_thh_presentation(RingId::Ell, p).series(9, 9).at(9), 1);
  EXPECT_EQ(v1_thh_presentation(RingId::Zp, p).series(0, 0).at(0), 1);
  for (std::int64_t d = 0; d < 2 * 5; ++d) EXPECT_EQ(lp.series(0, 20).at(d), 1) << d;
  EXPECT_THROW(v1_thh_presentation(RingId::Zp, 3), std::invalid_argument);
}

TEST(ThhInstances, poincare_identity) {
  for (RingId ring : {RingId::Zp, RingId::ZLocal, RingId::Ell, RingId::EllModP}) {
    auto rep = poincare_identity_check(ring, 5, 30);
    EXPECT_TRUE(rep.pass) << ring_key(ring) << " degree " << rep.failing_degree << ": " << rep.lhs_value << " vs "
                          << rep.rhs_value;
  }
  EXPECT_TRUE(poincare_identity_check(RingId::Zp, 5, 0).pass);
  EXPECT_TRUE(poincare_identity_check(RingId::EllModP, 7, 120).pass);
}

TEST(ThhInstancesProperty, bokstedt_scripts_are_differentials) {
  for (RingId ring : {RingId::Zp, RingId::EllModP}) {
    auto run = bokstedt_run(ring, 5, 0, 40);
    DiffRule d = bokstedt_rule(run.e2.ambient);
    auto wd = well_definedness_check(advance(run.e2, d.r), d);
    EXPECT_TRUE(wd.pass) << wd.summary();
    for (Residue c = 1; c < 5; ++c) {
      Page scaled = turn_page(advance(run.e2, d.r), rescaled(d, c));
      for (std::int64_t n = 0; n <= 40; ++n) EXPECT_EQ(scaled.dim_total(n), run.einf.dim_total(n));
    }
  }
}
