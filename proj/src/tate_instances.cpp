#include "fpss/tate_instances.hpp"

#include <limits>
#include <stdexcept>

#include "fpss/numerics.hpp"

namespace fpss {

namespace {

void require(Residue p, std::int64_t n) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 5, got " + std::to_string(p));
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

std::int64_t pw(Residue p, std::int64_t e) { return ipow(p, static_cast<unsigned>(e)); }

// F_p{e0^d m0^i : d + 2i <= 2p - 2} plus eb1 alone.
MonomialFilter module_filter(std::size_t e0, std::size_t m0, std::size_t eb1, std::int64_t p) {
  return [=](const Monomial& m) {
    if (m[eb1]) return m[e0] == 0 && m[m0] == 0;
    return m[e0] + 2 * m[m0] <= 2 * p - 2;
  };
}

std::vector<Generator> module_gens(std::int64_t p) {
  return {Generator::exterior("e0", 0, 1), Generator::truncated("m0", 0, 2, p),
          Generator::exterior("eb1", 0, 2 * p - 1), Generator::exterior("l2", 0, 2 * p * p - 1)};
}

// Valuation with v_p(0) treated as larger than any bound used here.
std::int64_t val(Residue p, std::int64_t j) {
  return j == 0 ? std::numeric_limits<std::int64_t>::max() : static_cast<std::int64_t>(vp(p, j));
}

// Stage of a run: number of eb1 families and lambda2 families applied, or E^2, or E^infinity.
struct Stage {
  bool e2 = false;
  std::int64_t eps = 0;
  std::int64_t lam = 0;
  bool final = false;
};

bool tate_member(Residue p, std::int64_t n, const Stage& st, const Monomial& m) {
  using namespace tate_gen;
  if (st.e2) return true;
  if (m[e0] || m[m0]) return false;
  if (st.eps == 0) return true;
  const std::int64_t J = m[t], c = m[w];
  const std::int64_t pp = static_cast<std::int64_t>(p) * p;
  if (m[eb1] == 0 && c == 0 && floor_mod(J, p) != 0) {
    if (st.lam == 0) return true;
    return floor_mod(J, pp) >= pp - p + 1;
  }
  const std::int64_t v = val(p, J);
  for (std::int64_t k = 2; k <= st.eps; ++k)
    if (m[eb1] == 0 && v == 2 * k - 2 && c < rho(p, 2 * k - 3)) return true;
  for (std::int64_t k = 2; k <= st.lam; ++k)
    if (m[l2] == 1 && v == 2 * k - 1 && c < rho(p, 2 * k - 2)) return true;
  if (st.final) return m[u] == 0 && v >= 2 * n && c < rho(p, 2 * n - 2) + 1;
  return v >= st.eps + st.lam;
}

bool hofix_member(Residue p, std::int64_t n, const Stage& st, const Monomial& m) {
  using namespace hofix_gen;
  if (st.e2) return true;
  if (m[e0]) return false;
  const std::int64_t J = m[M], c = m[w];
  if (m[m0]) return c == 0 && m[eb1] == 0;
  if (st.eps == 0) return true;
  const std::int64_t v = val(p, J);
  for (std::int64_t k = 1; k <= st.eps; ++k)
    if (m[eb1] == 0 && v == 2 * k - 2 && c < rho(p, 2 * k - 1)) return true;
  for (std::int64_t k = 1; k <= st.lam; ++k)
    if (m[l2] == 1 && v == 2 * k - 1 && c < rho(p, 2 * k)) return true;
  if (st.final) return m[u] == 0 && v >= 2 * n && c < rho(p, 2 * n) + 1;
  return v >= st.eps + st.lam;
}

std::string page_label(std::int64_t r) { return "E^" + std::to_string(r); }

using Member = bool (*)(Residue, std::int64_t, const Stage&, const Monomial&);

ClosedForm closed(Residue p, std::int64_t n, Member fn, Stage st, std::int64_t r, std::string label = {}) {
  return ClosedForm{r, label.empty() ? page_label(r) : std::move(label),
                    [p, n, fn, st](const Monomial& m) { return fn(p, n, st, m); }};
}

Element single(const AmbientPtr& amb, const Monomial& m, Residue c = 1) {
  return c ? amb->alg.term(m, c) : amb->alg.zero();
}

}  // namespace

AmbientPtr tate_ambient(Residue p, std::int64_t n) {
  require(p, n);
  const std::int64_t q = p;
  std::vector<Generator> g{Generator::exterior("u" + std::to_string(n), -1, 0), Generator::laurent("t", -2, 0)};
  for (auto& x : module_gens(q)) g.push_back(x);
  g.push_back(Generator::polynomial("tm2", -2, 2 * q * q).shown_as("(tm2)"));
  using namespace tate_gen;
  return make_ambient(Algebra(p, std::move(g)), module_filter(e0, m0, eb1, q), "tate:cp");
}

AmbientPtr hofix_ambient(Residue p, std::int64_t n) {
  require(p, n);
  const std::int64_t q = p;
  std::vector<Generator> g{Generator::exterior("u" + std::to_string(n), -1, 0)};
  for (auto& x : module_gens(q)) g.push_back(x);
  g.push_back(Generator::polynomial("tm2", -2, 2 * q * q).shown_as("(tm2)"));
  g.push_back(Generator::laurent("m2", 0, 2 * q * q));
  using namespace hofix_gen;
  return make_left_half_plane_ambient(Algebra(p, std::move(g)), module_filter(e0, m0, eb1, q), "hofix:cp");
}

SSInstance cpn_tate_instance(Residue p, std::int64_t n) {
  using namespace tate_gen;
  SSInstance inst{"tate:cp:" + std::to_string(n), p, n, tate_ambient(p, n), {}, {}};
  const AmbientPtr amb = inst.ambient;
  const Algebra& alg = amb->alg;
  inst.closed_forms.push_back(closed(p, n, tate_member, Stage{true, 0, 0, false}, 2));
  inst.script.push_back(derivation_rule(2, "d2", alg, {{"e0", alg.term(alg.monomial({{"t", 1}, {"m0", 1}}))}}));
  inst.closed_forms.push_back(closed(p, n, tate_member, Stage{}, 3));
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t shift = pw(p, 2 * k - 1) - pw(p, 2 * k), dc = rho(p, 2 * k - 3);
    const std::int64_t r1 = 2 * rho(p, 2 * k - 1);
    inst.script.push_back(family_rule(r1, "eb1 family " + std::to_string(k), [=](const Monomial& m) {
      if (m[eb1] != 1 || m[e0] || m[m0]) return amb->alg.zero();
      const std::int64_t J = m[t] - shift;
      if (val(p, J) != 2 * k - 2) return amb->alg.zero();
      Monomial x = m;
      x[eb1] = 0;
      x[t] = J;
      x[w] += dc;
      return single(amb, x);
    }));
    inst.closed_forms.push_back(closed(p, n, tate_member, Stage{false, k, k - 1, false}, r1 + 1));

    const std::int64_t q = pw(p, 2 * k - 1), up = pw(p, 2 * k), dl = rho(p, 2 * k - 2);
    const std::int64_t r2 = 2 * rho(p, 2 * k);
    inst.script.push_back(family_rule(r2, "l2 family " + std::to_string(k), [=](const Monomial& m) {
      if (m[l2] || m[e0] || m[m0]) return amb->alg.zero();
      const std::int64_t J = m[t];
      const std::int64_t J0 = -floor_mod(-J, q);
      const std::int64_t mult = (J - J0) / q;
      const Residue c = amb->alg.field().reduce(mult);
      if (!c) return amb->alg.zero();
      Monomial x = m;
      x[l2] = 1;
      x[t] = J + up;
      x[w] += dl;
      return single(amb, x, c);
    }));
    inst.closed_forms.push_back(closed(p, n, tate_member, Stage{false, k, k, false}, r2 + 1));
  }
  const std::int64_t top = pw(p, 2 * n), dc = rho(p, 2 * n - 2) + 1;
  const std::int64_t r = 2 * rho(p, 2 * n) + 1;
  inst.script.push_back(family_rule(r, "u family", [=](const Monomial& m) {
    if (m[u] != 1 || m[e0] || m[m0] || floor_mod(m[t], top) != 0) return amb->alg.zero();
    Monomial x = m;
    x[u] = 0;
    x[t] += top;
    x[w] += dc;
    return single(amb, x);
  }));
  inst.closed_forms.push_back(closed(p, n, tate_member, Stage{false, n, n, true}, r + 1, "E^inf"));
  return inst;
}

SSInstance cpn_hofix_instance(Residue p, std::int64_t n) {
  using namespace hofix_gen;
  SSInstance inst{"hofix:cp:" + std::to_string(n), p, n, hofix_ambient(p, n), {}, {}};
  const AmbientPtr amb = inst.ambient;
  const Algebra& alg = amb->alg;
  inst.closed_forms.push_back(closed(p, n, hofix_member, Stage{true, 0, 0, false}, 2));
  inst.script.push_back(
      derivation_rule(2, "d2", alg, {{"e0", alg.term(alg.monomial({{"tm2", 1}, {"m2", -1}, {"m0", 1}}))}}));
  inst.closed_forms.push_back(closed(p, n, hofix_member, Stage{}, 3));
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t shift = pw(p, 2 * k) - pw(p, 2 * k - 1), dc = rho(p, 2 * k - 1);
    const std::int64_t r1 = 2 * rho(p, 2 * k - 1);
    inst.script.push_back(family_rule(r1, "eb1 family " + std::to_string(k), [=](const Monomial& m) {
      if (m[eb1] != 1 || m[e0] || m[m0]) return amb->alg.zero();
      const std::int64_t J = m[M] - shift;
      if (val(p, J) != 2 * k - 2) return amb->alg.zero();
      Monomial x = m;
      x[eb1] = 0;
      x[M] = J;
      x[w] += dc;
      return single(amb, x);
    }));
    inst.closed_forms.push_back(closed(p, n, hofix_member, Stage{false, k, k - 1, false}, r1 + 1));

    const std::int64_t q = pw(p, 2 * k - 1), up = pw(p, 2 * k), dl = rho(p, 2 * k);
    const std::int64_t r2 = 2 * rho(p, 2 * k);
    inst.script.push_back(family_rule(r2, "l2 family " + std::to_string(k), [=](const Monomial& m) {
      if (m[l2] || m[e0] || m[m0] || val(p, m[M]) != 2 * k - 1) return amb->alg.zero();
      Monomial x = m;
      x[l2] = 1;
      x[M] -= up;
      x[w] += dl;
      return single(amb, x, amb->alg.field().reduce(m[M] / q));
    }));
    inst.closed_forms.push_back(closed(p, n, hofix_member, Stage{false, k, k, false}, r2 + 1));
  }
  const std::int64_t top = pw(p, 2 * n), dc = rho(p, 2 * n) + 1;
  const std::int64_t r = 2 * rho(p, 2 * n) + 1;
  inst.script.push_back(family_rule(r, "u family", [=](const Monomial& m) {
    if (m[u] != 1 || m[e0] || m[m0] || floor_mod(m[M], top) != 0) return amb->alg.zero();
    Monomial x = m;
    x[u] = 0;
    x[M] -= top;
    x[w] += dc;
    return single(amb, x);
  }));
  inst.closed_forms.push_back(closed(p, n, hofix_member, Stage{false, n, n, true}, r + 1, "E^inf"));
  return inst;
}

SSInstance cp_tate_instance(Residue p) {
  using namespace tate_gen;
  SSInstance inst{"tate:cp", p, 1, tate_ambient(p, 1), {}, {}};
  const AmbientPtr amb = inst.ambient;
  const std::int64_t q = p, qq = q * q;

  // d^2(x) = t sigma(x), sigma(e0 m0^{i-1}) = m0^i, extended over E(u) (x) P(t^{+-1}) (x) E(l2) (x) P(t mu2).
  inst.script.push_back(family_rule(2, "d2", [amb](const Monomial& m) {
    if (m[e0] != 1) return amb->alg.zero();
    Monomial x = m;
    x[e0] = 0;
    x[m0] += 1;
    x[t] += 1;
    if (!amb->filter(x)) return amb->alg.zero();
    return single(amb, x, m[u] ? amb->alg.field().neg(1) : 1);
  }));
  // d(t^{p-p^2} t^{-i} eb1) = t mu2 t^{-i} for 0 < i < p, times P(t^{+-p}) (x) E(u, l2) (x) P(t mu2).
  inst.script.push_back(family_rule(2 * qq - 2 * q + 2, "d(eb1)", [amb, q, qq](const Monomial& m) {
    if (m[eb1] != 1 || m[e0] || m[m0]) return amb->alg.zero();
    std::int64_t i = q - floor_mod(m[t], q);
    if (i == q) return amb->alg.zero();
    Monomial x = m;
    x[eb1] = 0;
    x[t] += qq - q;
    x[w] += 1;
    return single(amb, x);
  }));
  // d(t^{p q}) = q t^{p q + p^2} l2 from d(t^{p-p^2}) = t^p l2, with t^{-i}, 0 <= i < p, a cycle.
  inst.script.push_back(family_rule(2 * qq, "d(t^p)", [amb, q, qq](const Monomial& m) {
    if (m[l2] || m[e0] || m[m0]) return amb->alg.zero();
    std::int64_t k = floor_div(m[t] + q - 1, q);
    Residue c = amb->alg.field().reduce(k);
    if (!c) return amb->alg.zero();
    Monomial x = m;
    x[l2] = 1;
    x[t] += qq;
    return single(amb, x, c);
  }));
  // d(u t^{-p^2}) = t mu2, times P(t^{+-p^2}) (x) E(eb1, l2) (x) P(t mu2).
  inst.script.push_back(family_rule(2 * qq + 1, "d(u)", [amb, qq](const Monomial& m) {
    if (m[u] != 1 || m[e0] || m[m0] || floor_mod(m[t], qq) != 0) return amb->alg.zero();
    Monomial x = m;
    x[u] = 0;
    x[t] += qq;
    x[w] += 1;
    return single(amb, x);
  }));

  auto plain = [](const Monomial& m) { return m[e0] == 0 && m[m0] == 0; };
  auto low = [q, qq](const Monomial& m) {
    return m[eb1] == 0 && m[w] == 0 && floor_mod(m[t], qq) >= qq - q + 1;
  };
  inst.closed_forms.push_back({2, "E^2", [](const Monomial&) { return true; }});
  inst.closed_forms.push_back({3, "E^3", plain});
  inst.closed_forms.push_back({2 * qq - 2 * q + 3, page_label(2 * qq - 2 * q + 3), [=](const Monomial& m) {
                                 if (!plain(m)) return false;
                                 if (floor_mod(m[t], q) == 0) return true;
                                 return m[eb1] == 0 && m[w] == 0;
                               }});
  inst.closed_forms.push_back({2 * qq + 1, page_label(2 * qq + 1), [=](const Monomial& m) {
                                 return plain(m) && (low(m) || floor_mod(m[t], qq) == 0);
                               }});
  inst.closed_forms.push_back({2 * qq + 2, "E^inf", [=](const Monomial& m) {
                                 if (!plain(m)) return false;
                                 if (low(m)) return true;
                                 return m[u] == 0 && m[w] == 0 && floor_mod(m[t], qq) == 0;
                               }});
  return inst;
}

std::int64_t tate_band(Residue p, std::int64_t n) {
  require(p, n);
  const std::int64_t q = p;
  return 2 * q * q * (rho(p, 2 * n - 2) + 2) + 2 * q * q + 2 * q;
}

std::int64_t hofix_band(Residue p, std::int64_t n, std::int64_t hi) {
  require(p, n);
  return hi + 2 * rho(p, 2 * n) + 6;
}

RunReport run_instance(const SSInstance& inst, std::int64_t lo, std::int64_t hi, std::int64_t band, RunMode mode,
                       std::optional<std::int64_t> last_page) {
  RunReport rep;
  rep.id = inst.id;
  const TrustWindow target{lo, hi, band};
  try {
    if (inst.closed_forms.size() != inst.script.size() + 1)
      throw std::logic_error("instance needs one closed form per page");
    for (std::size_t i = 1; i < inst.script.size(); ++i)
      if (inst.script[i].r <= inst.script[i - 1].r) throw std::logic_error("script pages must increase");
    std::size_t count = inst.script.size();
    if (last_page)
      while (count > 0 && inst.script[count - 1].r + 1 > *last_page) --count;
    const std::int64_t steps = static_cast<std::int64_t>(count);
    std::int64_t extra = 0;
    for (std::size_t i = 0; i < count; ++i) extra += inst.script[i].r - 1;

    Page page;
    if (mode == RunMode::Propagation)
      page = seed_full(inst.ambient, TrustWindow{lo - steps, hi + steps, band + extra}, 2, "E");
    for (std::size_t i = 0; i < count; ++i) {
      const DiffRule& d = inst.script[i];
      const ClosedForm& before = inst.closed_forms[i];
      const ClosedForm& after = inst.closed_forms[i + 1];
      Page src;
      if (mode == RunMode::Verification) {
        src = seed_closed(inst.ambient, TrustWindow{lo - 1, hi + 1, band + d.r - 1}, d.r, before.member, before.label);
      } else {
        src = advance(page, d.r);
      }
      CheckReport wd = well_definedness_check(src, d);
      if (!wd.pass) rep.checks.push_back({d.name + " well-defined on " + before.label, d.r, wd});
      page = turn_page(src, d);
      page.name = after.label;
      if (after.r != page.r) throw std::logic_error("closed form " + after.label + " is not the page after " + d.name);
      Page cf = seed_closed(inst.ambient, mode == RunMode::Verification ? target : page.window, page.r, after.member,
                            after.label);
      rep.checks.push_back({after.label, page.r, compare_pages(page, cf)});
      rep.pages.push_back(restrict_page(page, target));
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  rep.pass = rep.error.empty();
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.report.pass;
  return rep;
}

namespace {

// Reduced echelon rows of the span of the given vectors.
std::vector<SparseVec> canonical(Residue p, const std::vector<SparseVec>& a, const std::vector<SparseVec>& b = {}) {
  Echelon e(p);
  for (const auto& v : a) e.insert(v);
  for (const auto& v : b) e.insert(v);
  return e.reduced_rows();
}

}  // namespace

bool pages_agree(const Page& a, const Page& b) {
  if (a.r != b.r) return false;
  const Residue p = a.ambient->alg.prime();
  auto nonzero = [](const Page& x) {
    std::vector<std::pair<Bideg, const Cell*>> out;
    for (const auto& [bd, c] : x.cells)
      if (c.dim()) out.emplace_back(bd, &c);
    return out;
  };
  auto na = nonzero(a), nb = nonzero(b);
  if (na.size() != nb.size()) return false;
  for (std::size_t i = 0; i < na.size(); ++i) {
    const Cell& x = *na[i].second;
    const Cell& y = *nb[i].second;
    if (!(na[i].first == nb[i].first) || *x.basis != *y.basis || x.dim() != y.dim()) return false;
    if (canonical(p, x.bound) != canonical(p, y.bound)) return false;
    if (canonical(p, x.reps, x.bound) != canonical(p, y.reps, y.bound)) return false;
  }
  return true;
}

RelabelReport relabel_agreement(const RunReport& small, const RunReport& large, Residue p, std::int64_t n) {
  RelabelReport rep;
  const std::int64_t limit = 2 * rho(p, 2 * n) + 1;
  for (const auto& a : small.pages) {
    if (a.r > limit) continue;
    const Page* match = nullptr;
    for (const auto& b : large.pages)
      if (b.r == a.r) match = &b;
    if (!match) {
      rep.pass = false;
      rep.failure = "no E^" + std::to_string(a.r) + " in the larger run";
      return rep;
    }
    TrustWindow w = a.window.intersect(match->window);
    ++rep.compared;
    if (!pages_agree(restrict_page(a, w), restrict_page(*match, w))) {
      rep.pass = false;
      rep.failure = "E^" + std::to_string(a.r) + " differs";
      return rep;
    }
  }
  if (rep.compared == 0) {
    rep.pass = false;
    rep.failure = "no pages compared";
  }
  return rep;
}

MonomialPredicate s1_tate_member(Residue p) {
  return [p](const Monomial& m) {
    using namespace tate_gen;
    if (m[u] || m[e0] || m[m0]) return false;
    const std::int64_t J = m[t], c = m[w];
    const std::int64_t pp = static_cast<std::int64_t>(p) * p;
    if (m[eb1] == 0 && c == 0 && floor_mod(J, p) != 0) return floor_mod(J, pp) >= pp - p + 1;
    if (J == 0) return true;
    const std::int64_t v = vp(p, J);
    if (v >= 2 && v % 2 == 0 && m[eb1] == 0) return c < rho_sat(p, v - 1);
    if (v >= 3 && v % 2 == 1 && m[l2] == 1) return c < rho_sat(p, v - 1);
    return false;
  };
}

MonomialPredicate s1_hofix_member(Residue p) {
  return [p](const Monomial& m) {
    using namespace hofix_gen;
    if (m[u] || m[e0]) return false;
    const std::int64_t J = m[M], c = m[w];
    if (m[m0]) return c == 0 && m[eb1] == 0;
    if (J == 0) return true;
    const std::int64_t v = vp(p, J);
    if (v % 2 == 0 && m[eb1] == 0) return c < rho_sat(p, v + 1);
    if (v % 2 == 1 && m[l2] == 1) return c < rho_sat(p, v + 1);
    return false;
  };
}

std::int64_t window_sufficient_n(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t band) {
  require(p, 1);
  const std::int64_t q = p;
  const std::int64_t smax = std::max(std::abs(lo - band), std::abs(hi));
  const std::int64_t jmax = (smax + 1) / 2 + band / (2 * q * q) + 1;
  for (std::int64_t n = 1;; ++n)
    if (pw(p, 2 * n) > jmax && 2 * q * q * (rho(p, 2 * n - 2) + 1) > band) return n;
}

LimitReport s1_limit_check(Residue p, std::int64_t n, std::int64_t lo, std::int64_t hi, std::int64_t band) {
  LimitReport rep;
  rep.n = n;
  SSInstance inst = cpn_tate_instance(p, n);
  const auto& einf = inst.closed_forms.back().member;
  const auto s1 = s1_tate_member(p);
  const Algebra& alg = inst.ambient->alg;
  for (const auto& [b, mons] : enumerate_region(alg, Region{lo, hi, 0, band}, inst.ambient->filter))
    for (const auto& m : mons) {
      if (m[tate_gen::u]) continue;
      ++rep.compared;
      if (einf(m) != s1(m) && rep.pass) {
        rep.pass = false;
        rep.first_disagreement = b;
        rep.witness = alg.format(m) + (einf(m) ? " only in the finite stage" : " only in the limit");
      }
    }
  return rep;
}

std::int64_t hofix_window_sufficient_n(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t band) {
  require(p, 1);
  const std::int64_t q = p;
  const std::int64_t cmax = std::max<std::int64_t>(0, (band - lo) / 2);
  const std::int64_t mmax = cmax + (std::abs(lo) + std::abs(hi)) / (2 * q * q) + 2;
  for (std::int64_t n = 1;; ++n)
    if (pw(p, 2 * n) > mmax && rho(p, 2 * n) >= cmax) return n;
}

LimitReport s1_hofix_limit_check(Residue p, std::int64_t n, std::int64_t lo, std::int64_t hi, std::int64_t band) {
  LimitReport rep;
  rep.n = n;
  SSInstance inst = cpn_hofix_instance(p, n);
  const auto& einf = inst.closed_forms.back().member;
  const auto s1 = s1_hofix_member(p);
  const Algebra& alg = inst.ambient->alg;
  for (const auto& [b, mons] : enumerate_region(alg, Region{lo, hi, lo, band}, inst.ambient->filter))
    for (const auto& m : mons) {
      if (m[hofix_gen::u]) continue;
      ++rep.compared;
      if (einf(m) != s1(m) && rep.pass) {
        rep.pass = false;
        rep.first_disagreement = b;
        rep.witness = alg.format(m) + (einf(m) ? " only in the finite stage" : " only in the limit");
      }
    }
  return rep;
}

LemmaReport filtration_gap_check(Residue p, std::int64_t n, std::int64_t lo, std::int64_t hi) {
  LemmaReport rep;
  SSInstance inst = cpn_hofix_instance(p, n);
  const auto& einf = inst.closed_forms.back().member;
  const Algebra& alg = inst.ambient->alg;
  const std::int64_t q = p, qq = q * q;
  const std::int64_t ry = rho(p, 2 * n - 1), cmax = rho(p, 2 * n) + 1;
  const std::int64_t sy = -2 * ry;
  // Module monomials of the ambient with their degrees.
  std::vector<Monomial> module;
  for (const auto& mons : enumerate_region(alg, Region{0, 2 * q - 1, 0, 2 * q - 1}, inst.ambient->filter))
    for (const auto& m : mons.second)
      if (!m[hofix_gen::u] && !m[hofix_gen::l2] && !m[hofix_gen::w] && !m[hofix_gen::M]) module.push_back(m);
  for (std::int64_t j = lo; j <= hi; ++j) {
    if (j == 0 || static_cast<std::int64_t>(vp(p, j)) != 2 * n - 2) continue;
    ++rep.parameters;
    const std::int64_t ny = (2 * qq - 2) * ry + 2 * qq * j;
    for (const auto& base : module)
      for (std::int64_t a = 0; a <= 1; ++a)
        for (std::int64_t b = 0; b <= 1; ++b)
          for (std::int64_t c = 0; c <= cmax; ++c) {
            Monomial m = base;
            m[hofix_gen::u] = a;
            m[hofix_gen::l2] = b;
            m[hofix_gen::w] = c;
            const std::int64_t rest = ny - alg.total(m);
            if (floor_mod(rest, 2 * qq) != 0) continue;
            m[hofix_gen::M] = rest / (2 * qq);
            if (!einf(m)) continue;
            ++rep.candidates;
            if (alg.bidegree(m).s < sy && rep.pass) {
              rep.pass = false;
              rep.witness = "j=" + std::to_string(j) + ": " + alg.format(m);
            }
          }
  }
  return rep;
}

LemmaReport unique_source_check(Residue p, std::int64_t n, std::int64_t lo, std::int64_t hi) {
  LemmaReport rep;
  AmbientPtr amb = tate_ambient(p, n + 1);
  const Algebra& alg = amb->alg;
  const std::int64_t q = p, qq = q * q, step = pw(p, 2 * n);
  const std::int64_t r1 = rho(p, 2 * n - 1);
  const std::int64_t tz = 2 * qq * r1, tmax = tz - 2 * rho(p, 2 * n) - 1;
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (i == 0 || static_cast<std::int64_t>(vp(p, i)) != 2 * n) continue;
    ++rep.parameters;
    const std::int64_t nz = (2 * qq - 2) * r1 - 2 * i;
    Monomial expected = alg.unit();
    expected[tate_gen::eb1] = 1;
    expected[tate_gen::t] = pw(p, 2 * n + 1) - pw(p, 2 * n + 2) + i;
    std::vector<Monomial> found;
    for (std::int64_t a = 0; a <= 1; ++a)
      for (std::int64_t e = 0; e <= 1; ++e)
        for (std::int64_t b = 0; b <= 1; ++b)
          for (std::int64_t c = 0;; ++c) {
            Monomial m = alg.unit();
            m[tate_gen::u] = a;
            m[tate_gen::eb1] = e;
            m[tate_gen::l2] = b;
            m[tate_gen::w] = c;
            if (alg.bidegree(m).t > tmax) break;
            ++rep.candidates;
            const std::int64_t rest = nz + 1 - alg.total(m);
            if (floor_mod(rest, 2 * step) != 0) continue;
            m[tate_gen::t] = -rest / 2;
            found.push_back(m);
          }
    if (rep.pass && (found.size() != 1 || found[0] != expected)) {
      rep.pass = false;
      rep.witness = "i=" + std::to_string(i) + ":";
      for (const auto& m : found) rep.witness += " " + alg.format(m);
      if (found.empty()) rep.witness += " no source";
    }
  }
  return rep;
}

}  // namespace fpss
