#include <gtest/gtest.h>

#include <random>

#include "fpss/graded_algebra.hpp"
#include "fpss/numerics.hpp"

using namespace fpss;

namespace {

Algebra mixed_algebra() {
  return Algebra(5, {Generator::exterior("x", 0, 3), Generator::polynomial("y", 0, 2),
                     Generator::laurent("t", -2, 0), Generator::truncated("z", 0, 4, 3),
                     Generator::divided("g", 0, 2), Generator::exterior("v", -1, 0),
                     Generator::exterior("e", 0, 2)});
}

Monomial random_monomial(const Algebra& alg, std::mt19937_64& rng) {
  Monomial m = alg.unit();
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const auto& g = alg.gens()[i];
    switch (g.kind) {
      case GenKind::Exterior:
      case GenKind::Truncated: m[i] = static_cast<std::int64_t>(rng() % g.height); break;
      case GenKind::Polynomial:
      case GenKind::DividedPower: m[i] = static_cast<std::int64_t>(rng() % 8); break;
      case GenKind::Laurent: m[i] = static_cast<std::int64_t>(rng() % 9) - 4; break;
    }
  }
  return m;
}

// Sign by bubble-sorting the concatenated factor list of a then b, one factor per generator power.
int oracle_sign(const Algebra& alg, const Monomial& a, const Monomial& b) {
  struct F { std::size_t gen; bool odd; };
  std::vector<F> word;
  for (const Monomial* m : {&a, &b})
    for (std::size_t i = 0; i < alg.size(); ++i)
      if ((*m)[i]) word.push_back({i, alg.odd(i) && ((*m)[i] % 2 != 0)});
  int sign = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass)
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (word[k].gen > word[k + 1].gen) {
        if (word[k].odd && word[k + 1].odd) sign = -sign;
        std::swap(word[k], word[k + 1]);
      }
  return sign;
}

Element random_homogeneous(const Algebra& alg, std::mt19937_64& rng, int terms) {
  Monomial base = random_monomial(alg, rng);
  Element e = alg.term(base, 1 + rng() % 4);
  Bideg d = alg.bidegree(base);
  auto others = basis_in_bidegree(alg, d.s, d.t);
  for (int k = 0; k < terms && !others.empty(); ++k) e.add_term(others[rng() % others.size()], 1 + rng() % 4);
  return e;
}

}  // namespace

TEST(GradedAlgebra, multiply_examples) {
  Algebra a(5, {Generator::exterior("x", 0, 3), Generator::laurent("t", -2, 0), Generator::divided("st0", 1, 1)});
  EXPECT_TRUE(multiply(a, a.gen("x"), a.gen("x")).is_zero());
  EXPECT_EQ(multiply(a, a.gen("t"), a.gen("t", -1)), a.one());
  EXPECT_TRUE(multiply(a, a.gen("st0", 2), a.gen("st0", 3)).is_zero());
  EXPECT_EQ(multiply(a, a.gen("st0", 1), a.gen("st0", 1)), a.gen("st0", 2).scaled(2));
}

TEST(GradedAlgebra, rejects_mismatched_algebras_and_odd_polynomials) {
  Algebra a(5, {Generator::exterior("x", 0, 3)});
  Algebra b(5, {Generator::exterior("y", 0, 5)});
  EXPECT_THROW(multiply(a, a.gen("x"), b.gen("y")), std::invalid_argument);
  EXPECT_THROW(Algebra(5, {Generator::polynomial("w", 0, 3)}), std::invalid_argument);
}

TEST(GradedAlgebra, basis_examples) {
  Algebra tate(5, {Generator::exterior("u1", -1, 0), Generator::laurent("t", -2, 0)});
  auto b = basis_in_bidegree(tate, -2, 0);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(tate.format(b[0]), "t");
  Algebra thh(5, {Generator::exterior("l2", 0, 49), Generator::polynomial("m2", 0, 50)});
  auto c = basis_in_bidegree(thh, 0, 49);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(thh.format(c[0]), "l2");
  Algebra empty(5, {});
  EXPECT_EQ(basis_in_bidegree(empty, 0, 0).size(), 1u);
}

TEST(GradedAlgebra, proportional_laurent_generators_error_names_them) {
  Algebra a(5, {Generator::laurent("a", -2, 0), Generator::laurent("b", -4, 0)});
  try {
    basis_in_bidegree(a, 0, 0);
    FAIL();
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("a"), std::string::npos);
    EXPECT_NE(msg.find("b"), std::string::npos);
  }
}

TEST(GradedAlgebra, two_independent_laurent_generators) {
  Algebra a(5, {Generator::laurent("t", -2, 0), Generator::laurent("m", 0, 50)});
  auto b = basis_in_bidegree(a, -4, 100);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (Monomial{2, 2}));
}

TEST(GradedAlgebra, text_form) {
  Algebra a(5, {Generator::exterior("u1", -1, 0), Generator::laurent("t", -2, 0),
                Generator::polynomial("tm2", -2, 50).shown_as("(tm2)"), Generator::divided("g", 1, 1)});
  EXPECT_EQ(a.format(Monomial{1, -3, 2, 0}), "u1*t^-3*(tm2)^2");
  EXPECT_EQ(a.format(Monomial{0, 0, 0, 4}), "g[4]");
  EXPECT_EQ(a.format(a.unit()), "1");
}

TEST(GradedAlgebra, poincare_examples) {
  Algebra e(5, {Generator::exterior("tau0", 0, 1), Generator::exterior("tau1", 0, 9)});
  auto ps = poincare_series(e, 0, 10);
  for (std::int64_t d = 0; d <= 10; ++d) EXPECT_EQ(ps.at(d), (d == 0 || d == 1 || d == 9 || d == 10) ? 1 : 0);
  Algebra p(5, {Generator::polynomial("m0", 0, 2)});
  auto pp = poincare_series(p, 0, 8);
  for (std::int64_t d = 0; d <= 8; ++d) EXPECT_EQ(pp.at(d), d % 2 == 0 ? 1 : 0);
  Algebra z(5, {Generator::exterior("e0", 0, 1), Generator::exterior("e1", 0, 9), Generator::polynomial("m0", 0, 2)});
  EXPECT_EQ(poincare_series(z, 0, 10).at(10), 2);
}

TEST(GradedAlgebra, poincare_rejects_degree_zero_polynomial) {
  Algebra a(5, {Generator::polynomial("x", 0, 0)});
  EXPECT_THROW(poincare_series(a, 0, 4), std::invalid_argument);
}

TEST(GradedAlgebraProperty, sign_matches_bubble_sort_oracle) {
  auto alg = mixed_algebra();
  std::mt19937_64 rng(3);
  for (int k = 0; k < 2000; ++k) {
    auto a = random_monomial(alg, rng), b = random_monomial(alg, rng);
    auto [m, c] = multiply_monomials(alg, a, b);
    if (!c) continue;
    Residue expected_sign = oracle_sign(alg, a, b) == 1 ? 1 : 4;
    // Strip divided-power binomials to isolate the sign.
    std::size_t gi = alg.index("g");
    Residue bin = (a[gi] && b[gi]) ? binom_mod_p(5, a[gi], b[gi]) : 1;
    EXPECT_EQ(c, alg.field().mul(expected_sign, bin));
  }
}

TEST(GradedAlgebraProperty, associativity_commutativity_degree_additivity) {
  auto alg = mixed_algebra();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    auto a = random_homogeneous(alg, rng, 2);
    auto b = random_homogeneous(alg, rng, 2);
    auto c = random_homogeneous(alg, rng, 1);
    EXPECT_EQ(multiply(alg, multiply(alg, a, b), c), multiply(alg, a, multiply(alg, b, c)));
    bool oa = alg.odd_total(a.terms().begin()->first), ob = alg.odd_total(b.terms().begin()->first);
    auto ba = multiply(alg, b, a);
    EXPECT_EQ(multiply(alg, a, b), (oa && ob) ? -ba : ba);
    Bideg da = alg.bidegree(a.terms().begin()->first), db = alg.bidegree(b.terms().begin()->first);
    auto ab = multiply(alg, a, b);
    for (const auto& [m, v] : ab.terms()) {
      EXPECT_EQ(alg.bidegree(m).s, da.s + db.s);
      EXPECT_EQ(alg.bidegree(m).t, da.t + db.t);
    }
  }
}

TEST(GradedAlgebraProperty, divided_power_matches_truncated_tensor_product) {
  for (Residue p : {3u, 5u, 7u})
    for (std::int64_t deg : {2, 4}) {
      Algebra gam(p, {Generator::divided("g", 0, deg)});
      std::vector<Generator> pieces;
      std::int64_t pe = 1;
      for (int e = 0; pe * deg <= 400; ++e, pe *= p)
        pieces.push_back(Generator::truncated("g" + std::to_string(e), 0, pe * deg, p));
      Algebra trunc(p, pieces);
      EXPECT_EQ(poincare_series(gam, 0, 400), poincare_series(trunc, 0, 400));
    }
}

TEST(GradedAlgebraProperty, region_enumeration_matches_per_bidegree) {
  Algebra tate(5, {Generator::exterior("u", -1, 0), Generator::laurent("t", -2, 0),
                   Generator::exterior("eb1", 0, 9), Generator::polynomial("tm2", -2, 50)});
  Region r{-20, 30, 0, 120};
  auto all = enumerate_region(tate, r);
  std::size_t count = 0;
  for (std::int64_t n = -20; n <= 30; ++n)
    for (std::int64_t t = 0; t <= 120; ++t) {
      auto b = basis_in_bidegree(tate, n - t, t);
      auto it = all.find(Bideg{n - t, t});
      EXPECT_EQ(b, it == all.end() ? std::vector<Monomial>{} : it->second);
      count += b.size();
    }
  std::size_t total = 0;
  for (auto& [k, v] : all) total += v.size();
  EXPECT_EQ(total, count);
  EXPECT_GT(total, 0u);
}
