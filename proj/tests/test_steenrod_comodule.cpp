#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fpss/steenrod_comodule.hpp"

using namespace fpss;

namespace {

// One pure tensor a (x) b with a coefficient, left and right given as monomials of the same algebra.
struct Pure {
  Monomial a, b;
  Residue c;
};

// Graded tensor product of two sums of pure tensors: (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
std::vector<Pure> tensor_product(const Algebra& alg, const std::vector<Pure>& x, const std::vector<Pure>& y) {
  std::vector<Pure> out;
  const auto& f = alg.field();
  for (const auto& u : x)
    for (const auto& v : y) {
      auto [ac, s1] = multiply_monomials(alg, u.a, v.a);
      auto [bd, s2] = multiply_monomials(alg, u.b, v.b);
      Residue c = f.mul(f.mul(u.c, v.c), f.mul(s1, s2));
      if (alg.odd_total(u.b) && alg.odd_total(v.a)) c = f.neg(c);
      if (c) out.push_back({ac, bd, c});
    }
  return out;
}

Element to_combined(const CoactionTable& t, const std::vector<Pure>& xs) {
  Element e = t.combined().zero();
  for (const auto& x : xs) e += multiply(t.combined(), t.left(t.astar().term(x.a)), t.right(t.target().term(x.b))).scaled(x.c);
  return e;
}

PoincareSeries series_of(Residue p, const std::vector<Generator>& gens, std::int64_t hi, const MonomialFilter& f = {}) {
  return poincare_series(Algebra(p, gens), 0, hi, f);
}

}  // namespace

TEST(SteenrodComodule, coproduct_examples) {
  auto psi = steenrod_coproduct(5, 60);
  const Algebra& a = psi.astar();
  Element x = coproduct(psi, a.gen("xib1").terms().begin()->first);
  EXPECT_EQ(x, psi.right_gen("xib1") + psi.left_gen("xib1"));
  EXPECT_EQ(coproduct(psi, a.unit()), psi.combined().one());

  Monomial one = a.unit(), t0 = a.monomial({{"taub0", 1}}), t1 = a.monomial({{"taub1", 1}}),
           x1 = a.monomial({{"xib1", 1}});
  std::vector<Pure> psi_t0{{one, t0, 1}, {t0, one, 1}};
  std::vector<Pure> psi_t1{{one, t1, 1}, {t0, x1, 1}, {t1, one, 1}};
  Element expected = to_combined(psi, tensor_product(a, psi_t0, psi_t1));
  EXPECT_EQ(coproduct(psi, a.monomial({{"taub0", 1}, {"taub1", 1}})), expected);
  EXPECT_EQ(expected.terms().size(), 5u);
}

TEST(SteenrodComodule, coaction_examples) {
  const Residue p = 5;
  auto t = v1_thh_coaction(RingId::EllModP, p, 30);
  const Algebra& g = t.target();
  EXPECT_EQ(t.coaction(g.gen("staub0", p - 1)), t.right_gen("staub0", p - 1));
  EXPECT_EQ(t.coaction(g.one()), t.combined().one());
  Element x = multiply(g, g.gen("taub0"), g.gen("staub0"));
  Element expected = t.right(x) + multiply(t.combined(), t.left_gen("taub0"), t.right_gen("staub0"));
  EXPECT_EQ(t.coaction(x), expected);
}

TEST(SteenrodComodule, missing_generator_is_an_error) {
  Algebra a = dual_steenrod(5, 10);
  Algebra tg(5, {Generator::exterior("z", 0, 3)});
  CoactionTable t(a, tg);
  EXPECT_THROW(t.coaction(tg.gen("z")), std::invalid_argument);
  EXPECT_EQ(t.coaction(tg.one()), t.combined().one());
}

TEST(SteenrodComodule, primitivity_examples) {
  const Residue p = 5;
  auto lp = v1_thh_coaction(RingId::EllModP, p, 60);
  for (const auto& c : named_classes(RingId::EllModP, lp)) {
    if (c.name == "epsilonbar1") EXPECT_TRUE(lp.is_primitive(c.value));
  }
  auto zl = v1_thh_coaction(RingId::ZLocal, p, 60);
  const Algebra& g = zl.target();
  EXPECT_TRUE(zl.is_primitive(g.gen("staub1") + multiply(g, g.gen("tau0"), g.gen("sxib1"))));
  auto zp = v1_thh_coaction(RingId::Zp, p, 30);
  EXPECT_FALSE(zp.is_primitive(zp.target().gen("taub0")));
  EXPECT_FALSE(zl.is_primitive(g.gen("staub1")));
}

TEST(SteenrodComodule, primitivity_suite_covers_all_named_classes) {
  auto rep = primitivity_suite(5);
  EXPECT_TRUE(rep.pass);
  std::set<std::string> names;
  for (const auto& [n, ok] : rep.results) {
    EXPECT_TRUE(ok) << n;
    names.insert(n.substr(0, n.find('@')));
  }
  EXPECT_EQ(names, (std::set<std::string>{"epsilon0", "epsilon1", "lambda1", "lambda2", "mu0", "mu1", "mu2",
                                          "epsilonbar1"}));
}

TEST(SteenrodComodule, alpha_is_forced) {
  for (Residue p : {5u, 7u}) {
    auto rep = alpha_forcing(p);
    EXPECT_EQ(rep.suspension_admissible, (std::vector<Residue>{p - 1}));
    EXPECT_EQ(rep.coaction_consistent, (std::vector<Residue>{p - 1}));
    ASSERT_EQ(rep.primitive_combinations.size(), 1u);
    EXPECT_EQ(rep.primitive_combinations[0], std::make_pair(p - 1, p - 1));
    // Primitivity of some combination holds for every alpha once y carries the matching coaction.
    EXPECT_EQ(rep.primitive_for_some_lift.size(), p);
    EXPECT_TRUE(rep.forced_minus_one());
  }
}

TEST(SteenrodComodule, primitive_dimensions_match_v1_homotopy) {
  const Residue p = 5;
  const std::int64_t hi = 30;
  auto ext = [](std::string n, std::int64_t d) { return Generator::exterior(n, 0, d); };
  auto poly = [](std::string n, std::int64_t d) { return Generator::polynomial(n, 0, d); };
  std::map<RingId, PoincareSeries> expected{
      {RingId::Zp, series_of(p, {ext("e0", 1), ext("e1", 2 * p - 1), poly("m0", 2)}, hi)},
      {RingId::ZLocal, series_of(p, {ext("e1", 2 * p - 1), ext("l1", 2 * p - 1), poly("m1", 2 * p)}, hi)},
      {RingId::Ell, series_of(p, {ext("l1", 2 * p - 1), ext("l2", 2 * p * p - 1), poly("m2", 2 * p * p)}, hi)},
  };
  PoincareSeries lp(0, hi);
  for (std::int64_t d = 0; d < 2 * static_cast<std::int64_t>(p); ++d) lp[d] = 1;
  expected[RingId::EllModP] = lp;
  for (const auto& [ring, ps] : expected) {
    auto t = v1_thh_coaction(ring, p, hi);
    EXPECT_EQ(primitive_dimensions(t, 0, hi), ps) << ring_key(ring);
  }
}

TEST(SteenrodComoduleProperty, coassociativity_and_counit) {
  auto c5 = coassociativity_check(5, 100);
  EXPECT_TRUE(c5.pass) << c5.witness;
  EXPECT_GT(c5.checked, 100u);
  for (Residue p : {3u, 7u}) {
    auto c = coassociativity_check(p, 2 * p * p);
    EXPECT_TRUE(c.pass) << p << " " << c.witness;
    auto u = counit_check(p, 2 * p * p);
    EXPECT_TRUE(u.pass) << p << " " << u.witness;
  }
  EXPECT_TRUE(counit_check(5, 100).pass);
}

TEST(SteenrodComoduleProperty, coaction_is_counital_and_multiplicative) {
  const Residue p = 5;
  std::mt19937_64 rng(17);
  for (RingId ring : {RingId::Zp, RingId::ZLocal, RingId::Ell, RingId::EllModP}) {
    auto t = v1_thh_coaction(ring, p, 40);
    const Algebra& g = t.target();
    std::vector<Monomial> pool;
    for (std::int64_t d = 0; d <= 20; ++d)
      for (const auto& m : basis_in_bidegree(g, 0, d, t.target_filter())) pool.push_back(m);
    ASSERT_FALSE(pool.empty());
    for (int k = 0; k < 200; ++k) {
      const Monomial& a = pool[rng() % pool.size()];
      EXPECT_EQ(t.counit_side(t.coaction(a)), g.term(a)) << g.format(a);
      if (t.target_filter()) continue;
      const Monomial& b = pool[rng() % pool.size()];
      Element ab = multiply(g, g.term(a), g.term(b));
      EXPECT_EQ(t.coaction(ab), multiply(t.combined(), t.coaction(a), t.coaction(b)));
    }
  }
}
