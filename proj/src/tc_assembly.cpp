#include "fpss/tc_assembly.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "fpss/numerics.hpp"

namespace fpss {

namespace {

constexpr std::int64_t kCapBudget = 10'000'000;

void require_prime(Residue p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 5");
}

void require_window(Residue p, std::int64_t lo, std::int64_t hi) {
  require_prime(p);
  if (lo <= hi && lo <= 2 * static_cast<std::int64_t>(p) - 2)
    throw std::invalid_argument("window must lie in degrees > 2p - 2");
}

std::int64_t pw(Residue p, std::int64_t e) { return ipow(p, static_cast<unsigned>(e)); }

// Total degree of each generator, read off the ambient.
struct Degrees {
  std::vector<std::int64_t> of;
  explicit Degrees(const Algebra& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      Monomial m = a.unit();
      m[i] = 1;
      of.push_back(a.total(m));
    }
  }
};

const Algebra& tate_alg(Residue p) {
  thread_local std::map<Residue, AmbientPtr> cache;
  auto& a = cache[p];
  if (!a) a = tate_ambient(p, 1);
  return a->alg;
}

const Algebra& hofix_alg(Residue p) {
  thread_local std::map<Residue, AmbientPtr> cache;
  auto& a = cache[p];
  if (!a) a = hofix_ambient(p, 1);
  return a->alg;
}

std::int64_t cap_for(Residue p, std::int64_t kmax) {
  if (kmax < 2) return 0;
  const std::int64_t c = rho(p, 2 * kmax - 2);
  if (c > kCapBudget) throw std::length_error("level too large for enumeration");
  return c;
}

std::int64_t resolve_level(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t kmax) {
  return kmax > 0 ? kmax : default_level(p, lo, hi);
}

enum class Part { A, B, C, D };

// Classification of a Tate basis monomial; k is meaningful for B and C.
std::vector<std::pair<Part, std::int64_t>> classify(Residue p, const Monomial& m) {
  using namespace tate_gen;
  std::vector<std::pair<Part, std::int64_t>> hits;
  const std::int64_t J = m[t], q = p;
  if (J == 0) {
    hits.push_back({Part::A, 0});
    return hits;
  }
  const std::int64_t v = vp(p, J);
  const std::int64_t d = J / pw(p, v);
  if (m[eb1] == 0 && v >= 2 && v % 2 == 0 && d > 0 && d < q * q - q) hits.push_back({Part::B, v / 2 + 1});
  if (m[l2] == 1 && v >= 3 && v % 2 == 1 && d > 0 && d < q) hits.push_back({Part::C, (v + 1) / 2});
  const bool first = m[eb1] == 0 && m[w] == 0 && v == 0;
  const bool b_out = m[eb1] == 0 && v >= 2 && v % 2 == 0 && !(d > 0 && d < q * q - q);
  const bool c_out = m[l2] == 1 && v >= 3 && v % 2 == 1 && !(d > 0 && d < q);
  if (first || b_out || c_out) hits.push_back({Part::D, 0});
  return hits;
}

SummandDecomposition decompose_degree(Residue p, std::int64_t n, std::int64_t kmax) {
  SummandDecomposition dec;
  dec.p = p;
  dec.lo = dec.hi = n;
  dec.kmax = kmax;
  const Algebra& a = tate_alg(p);
  for (const auto& m : s1_tate_basis(p, n, kmax)) {
    auto hits = classify(p, m);
    if (hits.size() != 1)
      throw std::logic_error(a.format(m) + (hits.empty() ? " lies in no summand" : " lies in two summands"));
    switch (hits[0].first) {
      case Part::A: dec.A.push_back(m); break;
      case Part::B: dec.B[hits[0].second].push_back(m); break;
      case Part::C: dec.C[hits[0].second].push_back(m); break;
      case Part::D: dec.D.push_back(m); break;
    }
  }
  return dec;
}

struct TowerStep {
  bool into = true;  // every image lands in the next lower part or vanishes
  std::size_t rank = 0;
  std::string witness;
};

// Matrix of R from `upper` to `lower` (lower empty means the images must vanish).
TowerStep tower_step(Residue p, const std::vector<Monomial>& upper, const std::vector<Monomial>& lower) {
  TowerStep st;
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
  SparseMatrix mat(upper.size(), lower.size(), p);
  for (std::size_t i = 0; i < upper.size(); ++i) {
    auto img = r_image(p, upper[i]);
    if (!img) continue;
    auto it = index.find(*img);
    if (it == index.end()) {
      if (st.into) st.witness = tate_alg(p).format(upper[i]) + " -> " + tate_alg(p).format(*img);
      st.into = false;
      continue;
    }
    mat.set(i, it->second, 1);
  }
  st.rank = upper.empty() || lower.empty() ? 0 : rref(mat).rank;
  return st;
}

std::string gen_label(const std::string& prefix, const std::string& body) {
  if (prefix.empty()) return body;
  return body == "1" ? prefix : prefix + "*" + body;
}

void add(PvModule& m, std::string label, std::int64_t degree, int row) {
  m.generators.push_back(PvGenerator{std::move(label), degree, 0, row});
}

// E(eb1) times one generator.
void add_eb1_pair(PvModule& m, Residue p, const std::string& label, std::int64_t degree, int row) {
  add(m, label, degree, row);
  add(m, gen_label("eb1", label), degree + 2 * static_cast<std::int64_t>(p) - 1, row);
}

PvModule skeleton(const std::string& id, Residue p) {
  require_prime(p);
  PvModule m;
  m.id = id;
  m.p = p;
  const std::int64_t q = p;
  m.v2_degree = 2 * q * q - 2;
  return m;
}

// E(dlog v1) (x) F_p{t^d v2 | 0 < d < p^2 - p, p does not divide d}.
void add_t_row(PvModule& m) {
  const std::int64_t q = m.p;
  for (std::int64_t d = 1; d < q * q - q; ++d) {
    if (d % q == 0) continue;
    const std::string body = "t^" + std::to_string(d) + "*v2";
    add(m, body, -2 * d + m.v2_degree, 2);
    add(m, gen_label("dlogv1", body), -2 * d + m.v2_degree + 1, 2);
  }
}

// E(eb1) (x) F_p{t^{dp} x | 0 < d < p} with x of degree x_degree.
void add_tp_row(PvModule& m, const std::string& x, std::int64_t x_degree) {
  const std::int64_t q = m.p;
  for (std::int64_t d = 1; d < q; ++d)
    add_eb1_pair(m, m.p, "t^" + std::to_string(d * q) + "*" + x, -2 * d * q + x_degree, 3);
}

}  // namespace

Monomial g_image(Residue p, const Monomial& tm) {
  if (!s1_tate_member(p)(tm)) throw std::invalid_argument("not an S^1 Tate E^infinity class: " + tate_alg(p).format(tm));
  const std::int64_t q = p, qq = q * q, J = tm[tate_gen::t];
  Monomial h = hofix_alg(p).unit();
  h[hofix_gen::eb1] = tm[tate_gen::eb1];
  h[hofix_gen::l2] = tm[tate_gen::l2];
  h[hofix_gen::w] = tm[tate_gen::w];
  if (floor_mod(J, q) != 0) {
    const std::int64_t i = floor_mod(-J, qq);
    h[hofix_gen::m0] = i;
    h[hofix_gen::M] = -(J + i) / qq;
  } else {
    h[hofix_gen::M] = -J / qq;
  }
  return h;
}

std::optional<Monomial> rh_image(Residue p, const Monomial& hm) {
  if (hm[hofix_gen::m0] != 0) return std::nullopt;
  Monomial tm = tate_alg(p).unit();
  tm[tate_gen::eb1] = hm[hofix_gen::eb1];
  tm[tate_gen::l2] = hm[hofix_gen::l2];
  tm[tate_gen::t] = -hm[hofix_gen::M];
  tm[tate_gen::w] = hm[hofix_gen::w] + hm[hofix_gen::M];
  if (tm[tate_gen::w] < 0 || !s1_tate_member(p)(tm)) return std::nullopt;
  return tm;
}

std::optional<Monomial> r_image(Residue p, const Monomial& tm) { return rh_image(p, g_image(p, tm)); }

std::int64_t tate_level(Residue p, const Monomial& tm) {
  const std::int64_t J = tm[tate_gen::t];
  if (J == 0) return 0;
  const std::int64_t v = vp(p, J);
  return v == 0 ? 1 : (v + 2) / 2;
}

std::int64_t hofix_level(Residue p, const Monomial& hm) {
  if (hm[hofix_gen::m0] != 0) return 1;
  const std::int64_t M = hm[hofix_gen::M];
  if (M == 0) return 0;
  return static_cast<std::int64_t>(vp(p, M)) / 2 + 2;
}

std::vector<Monomial> s1_tate_basis(Residue p, std::int64_t n, std::int64_t kmax) {
  using namespace tate_gen;
  const Algebra& a = tate_alg(p);
  const Degrees deg(a);
  const auto member = s1_tate_member(p);
  const std::int64_t cap = std::max(cap_for(p, kmax), n / deg.of[w] + 1);
  std::vector<Monomial> out;
  Monomial m = a.unit();
  for (std::int64_t e = 0; e <= 1; ++e)
    for (std::int64_t l = 0; l <= 1; ++l)
      for (std::int64_t c = 0; c <= cap; ++c) {
        const std::int64_t rest = n - c * deg.of[w] - e * deg.of[eb1] - l * deg.of[l2];
        if (rest % deg.of[t] != 0) continue;
        m[eb1] = e;
        m[l2] = l;
        m[w] = c;
        m[t] = rest / deg.of[t];
        if (tate_level(p, m) <= kmax && member(m)) out.push_back(m);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> s1_hofix_basis(Residue p, std::int64_t n, std::int64_t kmax) {
  using namespace hofix_gen;
  const Algebra& a = hofix_alg(p);
  const Degrees deg(a);
  const auto member = s1_hofix_member(p);
  const std::int64_t cap = std::max(cap_for(p, kmax), n / deg.of[w] + 1);
  std::vector<Monomial> out;
  Monomial m = a.unit();
  for (std::int64_t e = 0; e <= 1; ++e)
    for (std::int64_t l = 0; l <= 1; ++l)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(p); ++i)
        for (std::int64_t c = 0; c <= cap; ++c) {
          const std::int64_t rest = n - c * deg.of[w] - e * deg.of[eb1] - l * deg.of[l2] - i * deg.of[m0];
          if (floor_mod(rest, deg.of[M]) != 0) continue;
          m[eb1] = e;
          m[l2] = l;
          m[m0] = i;
          m[w] = c;
          m[M] = rest / deg.of[M];
          if (hofix_level(p, m) <= kmax && member(m)) out.push_back(m);
        }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t default_level(Residue p, std::int64_t lo, std::int64_t hi) {
  require_prime(p);
  const std::int64_t q = p;
  const std::int64_t need = std::abs(lo) + std::abs(hi) + 4 * q * q + 2 * q;
  std::int64_t k = 2;
  while (2 * pw(p, 2 * k - 2) <= need) ++k;
  return k + 1;
}

RhReport rh_map_check(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t kmax) {
  require_window(p, lo, hi);
  RhReport rep;
  rep.kmax = kmax = resolve_level(p, lo, hi, kmax);
  const Algebra& ta = tate_alg(p);
  const Algebra& ha = hofix_alg(p);
  const std::int64_t q = p;
  auto fail = [&rep](std::string w) {
    if (rep.pass) rep.witness = std::move(w);
    rep.pass = false;
  };
  for (std::int64_t n = lo; n <= hi; ++n) {
    const auto tate = s1_tate_basis(p, n, kmax);
    const auto hofix = s1_hofix_basis(p, n, kmax);
    const std::set<Monomial> hofix_set(hofix.begin(), hofix.end());

    // G is a bijection between the two bases.
    std::set<Monomial> g_set;
    for (const auto& x : tate) g_set.insert(g_image(p, x));
    if (g_set != hofix_set) fail("G is not a bijection in degree " + std::to_string(n));

    for (const auto& x : hofix) {
      const auto img = rh_image(p, x);
      const std::int64_t M = x[hofix_gen::M];
      const std::int64_t v = M == 0 ? 0 : vp(p, M);
      const std::int64_t d = M == 0 ? 0 : -M / pw(p, v);
      const bool free_m0 = x[hofix_gen::m0] == 0;
      if (free_m0 && M == 0) {
        ++rep.checked[0];
        Monomial same = ta.unit();
        same[tate_gen::eb1] = x[hofix_gen::eb1];
        same[tate_gen::l2] = x[hofix_gen::l2];
        same[tate_gen::w] = x[hofix_gen::w];
        if (!img || *img != same) fail("(a) " + ha.format(x));
      } else if (free_m0 && x[hofix_gen::eb1] == 0 && v >= 2 && v % 2 == 0 && d > 0 && d < q * q - q) {
        ++rep.checked[1];
        if (img && ((*img)[tate_gen::t] != -M || (*img)[tate_gen::eb1] != 0)) fail("(b) " + ha.format(x));
      } else if (free_m0 && x[hofix_gen::l2] == 1 && v >= 3 && v % 2 == 1 && d > 0 && d < q) {
        ++rep.checked[2];
        if (img && ((*img)[tate_gen::t] != -M || (*img)[tate_gen::l2] != 1)) fail("(c) " + ha.format(x));
      } else {
        ++rep.checked[3];
        if (img) fail("(d) " + ha.format(x) + " -> " + ta.format(*img));
      }
    }

    // Surjectivity in (b) and (c): every target class below the top level has its source.
    for (const auto& y : tate) {
      const std::int64_t J = y[tate_gen::t];
      if (J <= 0 || tate_level(p, y) >= kmax) continue;
      const std::int64_t v = vp(p, J), d = J / pw(p, v);
      const bool b = y[tate_gen::eb1] == 0 && v >= 2 && v % 2 == 0 && d < q * q - q;
      const bool c = y[tate_gen::l2] == 1 && v >= 3 && v % 2 == 1 && d < q;
      if (!b && !c) continue;
      Monomial src = ha.unit();
      src[hofix_gen::eb1] = y[tate_gen::eb1];
      src[hofix_gen::l2] = y[tate_gen::l2];
      src[hofix_gen::M] = -J;
      src[hofix_gen::w] = y[tate_gen::w] + J;
      const auto img = rh_image(p, src);
      if (!hofix_set.count(src) || !img || *img != y)
        fail(std::string(b ? "(b)" : "(c)") + " target not hit: " + ta.format(y));
      else
        ++rep.targets_hit;
    }
  }
  return rep;
}

std::size_t SummandDecomposition::size() const {
  std::size_t s = A.size() + D.size();
  for (const auto& [k, v] : B) s += v.size();
  for (const auto& [k, v] : C) s += v.size();
  return s;
}

SummandDecomposition tf_decompose(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t kmax) {
  require_window(p, lo, hi);
  SummandDecomposition dec;
  dec.p = p;
  dec.lo = lo;
  dec.hi = hi;
  dec.kmax = kmax = resolve_level(p, lo, hi, kmax);
  for (std::int64_t n = lo; n <= hi; ++n) {
    auto part = decompose_degree(p, n, kmax);
    dec.A.insert(dec.A.end(), part.A.begin(), part.A.end());
    dec.D.insert(dec.D.end(), part.D.begin(), part.D.end());
    for (auto& [k, v] : part.B) dec.B[k].insert(dec.B[k].end(), v.begin(), v.end());
    for (auto& [k, v] : part.C) dec.C[k].insert(dec.C[k].end(), v.begin(), v.end());
  }
  return dec;
}

FixedPointReport r_fixed_points(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t kmax) {
  require_window(p, lo, hi);
  FixedPointReport rep;
  rep.kmax = kmax = resolve_level(p, lo, hi, kmax);
  rep.ker = PoincareSeries(lo, hi);
  rep.cok = PoincareSeries(lo, hi);
  const Algebra& a = tate_alg(p);
  auto fail = [&rep](std::string w) {
    if (rep.pass) rep.failure = std::move(w);
    rep.pass = false;
  };
  for (std::int64_t n = lo; n <= hi; ++n) {
    const auto dec = decompose_degree(p, n, kmax);
    for (const auto& x : dec.A)
      if (r_image(p, x) != x) fail("R is not the identity on " + a.format(x));
    for (const auto& x : dec.D)
      if (r_image(p, x)) fail("R is nonzero on " + a.format(x));

    std::int64_t stable = 2;
    auto tower = [&](const std::map<std::int64_t, std::vector<Monomial>>& parts, const char* name) {
      auto at = [&parts](std::int64_t k) -> const std::vector<Monomial>& {
        static const std::vector<Monomial> none;
        auto it = parts.find(k);
        return it == parts.end() ? none : it->second;
      };
      for (std::int64_t k = 2; k <= kmax; ++k) {
        const auto& lower = at(k - 1);
        const auto st = tower_step(p, at(k), lower);
        if (!st.into) fail(std::string(name) + "_" + std::to_string(k) + " step leaves the tower: " + st.witness);
        if (k == 2) continue;
        if (st.rank != lower.size())
          fail(std::string(name) + "_" + std::to_string(k) + " -> " + name + "_" + std::to_string(k - 1) +
               " is not surjective in degree " + std::to_string(n));
        if (st.rank != at(k).size()) stable = std::max(stable, k);
      }
      return static_cast<std::int64_t>(at(kmax).size());
    };
    const std::int64_t lim_b = tower(dec.B, "B");
    const std::int64_t lim_c = tower(dec.C, "C");
    rep.stable_level = std::max(rep.stable_level, stable);
    rep.ker[n] = static_cast<std::int64_t>(dec.A.size()) + lim_b + lim_c;
    rep.cok[n] = static_cast<std::int64_t>(dec.A.size());
  }
  if (rep.stable_level >= kmax) fail("towers not yet stable below level " + std::to_string(kmax));
  return rep;
}

std::size_t PvModule::rank() const { return generators.size(); }

std::int64_t PvModule::euler() const {
  std::int64_t e = 0;
  for (const auto& g : generators) e += (floor_mod(g.degree, 2) == 0) ? 1 : -1;
  return e;
}

PoincareSeries PvModule::series(std::int64_t lo, std::int64_t hi) const {
  PoincareSeries ps(lo, hi);
  for (const auto& g : generators)
    for (std::int64_t k = 0; g.height == 0 || k < g.height; ++k) {
      const std::int64_t d = g.degree + k * v2_degree;
      if (d > hi) break;
      if (d >= lo) ++ps[d];
    }
  return ps;
}

std::vector<std::int64_t> PvModule::localized() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(v2_degree), 0);
  for (const auto& g : generators)
    if (g.height == 0) ++out[static_cast<std::size_t>(floor_mod(g.degree, v2_degree))];
  return out;
}

PvModule tc_presentation(Residue p) {
  PvModule m = skeleton("tc", p);
  const std::int64_t l2 = m.v2_degree + 1;
  for (const auto& [label, degree] : std::vector<std::pair<std::string, std::int64_t>>{
           {"1", 0}, {"del", -1}, {"l2", l2}, {"del*l2", l2 - 1}})
    add_eb1_pair(m, p, label, degree, 1);
  add_t_row(m);
  add_tp_row(m, "l2", l2);
  return m;
}

PvModule k_presentation(Residue p) {
  PvModule m = skeleton("k", p);
  const std::int64_t l2 = m.v2_degree + 1;
  for (const auto& [label, degree] : std::vector<std::pair<std::string, std::int64_t>>{
           {"1", 0}, {"del*l2", l2 - 1}, {"l2", l2}, {"del*v2", m.v2_degree - 1}})
    add_eb1_pair(m, p, label, degree, 1);
  add_t_row(m);
  add_tp_row(m, "l2", l2);
  return m;
}

PvModule k_lp_presentation(Residue p) {
  PvModule m = skeleton("k-lp-conditional", p);
  m.conditional = true;
  const std::int64_t l2 = m.v2_degree + 1;
  for (const auto& [label, degree] : std::vector<std::pair<std::string, std::int64_t>>{
           {"1", 0}, {"del*l2", l2 - 1}, {"dlogv1", 1}, {"del*v2", m.v2_degree - 1}})
    add_eb1_pair(m, p, label, degree, 1);
  add_t_row(m);
  add_tp_row(m, "v2*dlogv1", m.v2_degree + 1);
  return m;
}

PoincareSeries low_degree_tc_series(Residue p, std::int64_t lo, std::int64_t hi) {
  const std::int64_t e = 2 * static_cast<std::int64_t>(p) - 1;
  return poincare_series(std::vector<std::int64_t>{0, -1, e, e - 1}, lo, hi);
}

SeriesReport tc_exactness_check(Residue p, std::int64_t lo, std::int64_t hi) {
  return tc_exactness_check(tc_presentation(p), lo, hi);
}

SeriesReport tc_exactness_check(const PvModule& tc, std::int64_t lo, std::int64_t hi) {
  SeriesReport rep;
  const Residue p = tc.p;
  const std::int64_t cut = 2 * static_cast<std::int64_t>(p) - 2;
  const PoincareSeries pres = tc.series(lo, hi);
  const PoincareSeries low = low_degree_tc_series(p, lo, hi);
  FixedPointReport fp;
  if (hi > cut) {
    fp = r_fixed_points(p, std::max(lo, cut + 1), hi + 1);
    if (!fp.pass) {
      rep.pass = false;
      rep.detail = fp.failure;
      return rep;
    }
  }
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t got = n <= cut ? low.at(n) : fp.ker.at(n) + fp.cok.at(n + 1);
    if (got != pres.at(n)) {
      rep.pass = false;
      rep.failing_degree = n;
      rep.expected = pres.at(n);
      rep.actual = got;
      rep.detail = "degree " + std::to_string(n);
      return rep;
    }
  }
  return rep;
}

SeriesReport k_tc_check(Residue p, std::int64_t lo, std::int64_t hi) {
  SeriesReport rep;
  const std::int64_t e = 2 * static_cast<std::int64_t>(p) - 1;
  const PoincareSeries tc = tc_presentation(p).series(lo, hi);
  const PoincareSeries k = k_presentation(p).series(lo, hi);
  const PoincareSeries g = poincare_series(std::vector<std::int64_t>{-1, e - 1}, lo, hi);
  for (std::int64_t n = lo; n <= hi; ++n)
    if (tc.at(n) != k.at(n) + g.at(n)) {
      rep.pass = false;
      rep.failing_degree = n;
      rep.expected = tc.at(n);
      rep.actual = k.at(n) + g.at(n);
      rep.detail = "degree " + std::to_string(n);
      return rep;
    }
  return rep;
}

KLpReport k_lp_checks(Residue p) {
  KLpReport rep;
  const PvModule lp = k_lp_presentation(p);
  const PvModule k = k_presentation(p);
  const std::int64_t q = p;
  rep.localized_equal = lp.localized() == k.localized();
  rep.rank = lp.rank();
  rep.euler = lp.euler();
  rep.kzp = poincare_series(std::vector<std::int64_t>{0, 2 * q - 1}, 0, 2 * q - 1);
  if (!rep.localized_equal) rep.detail += "localized series differ; ";
  if (rep.rank != static_cast<std::size_t>(2 * q * q - 2 * q + 8)) rep.detail += "rank " + std::to_string(rep.rank) + "; ";
  if (rep.euler != 0) rep.detail += "euler " + std::to_string(rep.euler) + "; ";
  rep.pass = rep.detail.empty();
  return rep;
}

nlohmann::ordered_json to_json(const PvModule& m) {
  nlohmann::ordered_json j;
  j["id"] = m.id;
  j["p"] = m.p;
  j["v2_degree"] = m.v2_degree;
  j["rank"] = m.rank();
  j["euler"] = m.euler();
  j["conditional"] = m.conditional;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : m.generators) {
    nlohmann::ordered_json r;
    r["label"] = g.label;
    r["degree"] = g.degree;
    r["freeness"] = g.height == 0 ? std::string("free") : "truncated(" + std::to_string(g.height) + ")";
    r["row"] = g.row;
    gens.push_back(r);
  }
  j["generators"] = gens;
  return j;
}

}  // namespace fpss
