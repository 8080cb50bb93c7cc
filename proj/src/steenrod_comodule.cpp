#include "fpss/steenrod_comodule.hpp"

#include <stdexcept>

#include "fpss/numerics.hpp"
#include "fpss/spectral_sequence.hpp"

namespace fpss {

namespace {

Algebra renamed(const Algebra& a, const std::string& prefix) {
  std::vector<Generator> g = a.gens();
  for (auto& x : g) {
    x.name = prefix + x.name;
    x.display = prefix + x.display;
  }
  return Algebra(a.prime(), g);
}

// Copies e from algebra `from` into `to`, placing generator i of `from` at position offset + i.
Element transport(const Element& e, const Algebra& from, const Algebra& to, std::size_t offset) {
  Element out = to.zero();
  for (const auto& [m, c] : e.terms()) {
    Monomial mm = to.unit();
    for (std::size_t i = 0; i < from.size(); ++i) mm[offset + i] = m[i];
    out.add_term(mm, c);
  }
  return out;
}

std::string xib(std::int64_t k) { return "xib" + std::to_string(k); }
std::string taub(std::int64_t k) { return "taub" + std::to_string(k); }

std::int64_t xi_degree(Residue p, std::int64_t k) { return 2 * (ipow(p, static_cast<unsigned>(k)) - 1); }
std::int64_t tau_degree(Residue p, std::int64_t k) { return 2 * ipow(p, static_cast<unsigned>(k)) - 1; }

}  // namespace

Algebra dual_steenrod(Residue p, std::int64_t cap) {
  std::vector<Generator> g;
  for (std::int64_t k = 1; xi_degree(p, k) <= cap; ++k) g.push_back(Generator::polynomial(xib(k), 0, xi_degree(p, k)));
  for (std::int64_t k = 0; tau_degree(p, k) <= cap; ++k) g.push_back(Generator::exterior(taub(k), 0, tau_degree(p, k)));
  return Algebra(p, g);
}

CoactionTable::CoactionTable(Algebra astar, Algebra target, MonomialFilter target_filter)
    : astar_(std::move(astar)),
      target_(std::move(target)),
      combined_(renamed(astar_, kLeftPrefix).tensor(target_)),
      filter_(std::move(target_filter)),
      table_(target_.size()) {}

Element CoactionTable::left(const Element& a) const { return transport(a, astar_, combined_, 0); }
Element CoactionTable::right(const Element& x) const { return transport(x, target_, combined_, astar_.size()); }
Element CoactionTable::left_gen(const std::string& name, std::int64_t exp) const {
  return left(astar_.gen(name, exp));
}
Element CoactionTable::right_gen(const std::string& name, std::int64_t exp) const {
  return right(target_.gen(name, exp));
}

void CoactionTable::set(const std::string& gen, const Element& value) {
  std::size_t i = target_.index(gen);
  const auto& g = target_.gens()[i];
  for (const auto& [m, c] : value.terms())
    if (combined_.total(m) != g.total())
      throw std::invalid_argument("coaction value on " + gen + " is not homogeneous of the generator's degree");
  table_[i] = value;
}

bool CoactionTable::has(const std::string& gen) const {
  auto i = target_.find(gen);
  return i && table_[*i].has_value();
}

Element CoactionTable::coaction(const Monomial& m) const {
  Element acc = combined_.one();
  for (std::size_t i = 0; i < target_.size(); ++i) {
    if (!m[i]) continue;
    const auto& g = target_.gens()[i];
    if (!table_[i]) throw std::invalid_argument("no coaction given for generator " + g.name);
    if (m[i] < 0) throw std::invalid_argument("coaction of a negative power of " + g.name);
    const Element& v = *table_[i];
    if (g.kind == GenKind::DividedPower) {
      if (!(v == right(target_.gen(g.name))))
        throw std::invalid_argument("divided powers of the non-primitive generator " + g.name);
      acc = multiply(combined_, acc, right(target_.gen(g.name, m[i])));
      continue;
    }
    for (std::int64_t e = 0; e < m[i]; ++e) acc = multiply(combined_, acc, v);
  }
  if (filter_) {
    const std::size_t off = astar_.size();
    for (const auto& [cm, c] : acc.terms()) {
      Monomial r(cm.begin() + static_cast<std::ptrdiff_t>(off), cm.end());
      if (!filter_(r)) throw std::logic_error("coaction leaves the target basis at " + combined_.format(cm));
    }
  }
  return acc;
}

Element CoactionTable::coaction(const Element& x) const {
  Element out = combined_.zero();
  for (const auto& [m, c] : x.terms()) out += coaction(m).scaled(c);
  return out;
}

Element CoactionTable::counit_side(const Element& e) const {
  Element out = target_.zero();
  const std::size_t off = astar_.size();
  for (const auto& [m, c] : e.terms()) {
    bool unit_left = true;
    for (std::size_t i = 0; i < off; ++i) unit_left = unit_left && m[i] == 0;
    if (unit_left) out.add_term(Monomial(m.begin() + static_cast<std::ptrdiff_t>(off), m.end()), c);
  }
  return out;
}

bool CoactionTable::is_primitive(const Element& x) const { return coaction(x) == right(x); }

namespace {

// Coproduct formulas for the xib and taub generators present in the target.
void fill_steenrod_entries(CoactionTable& t, Residue p, std::int64_t cap) {
  const Algebra& tg = t.target();
  auto left_or_one = [&](const std::string& n) { return n.empty() ? t.combined().one() : t.left_gen(n); };
  for (std::int64_t k = 1; xi_degree(p, k) <= cap; ++k) {
    if (!tg.find(xib(k))) continue;
    Element v = t.combined().zero();
    for (std::int64_t i = 0; i <= k; ++i) {
      std::int64_t j = k - i;
      Element l = left_or_one(i ? xib(i) : "");
      Element r = j ? t.right_gen(xib(j), ipow(p, static_cast<unsigned>(i))) : t.combined().one();
      v += multiply(t.combined(), l, r);
    }
    t.set(xib(k), v);
  }
  for (std::int64_t k = 0; tau_degree(p, k) <= cap; ++k) {
    if (!tg.find(taub(k))) continue;
    Element v = t.right_gen(taub(k));
    for (std::int64_t i = 0; i <= k; ++i) {
      std::int64_t j = k - i;
      Element r = j ? t.right_gen(xib(j), ipow(p, static_cast<unsigned>(i))) : t.combined().one();
      v += multiply(t.combined(), t.left_gen(taub(i)), r);
    }
    t.set(taub(k), v);
  }
}

}  // namespace

CoactionTable steenrod_coproduct(Residue p, std::int64_t cap) {
  Algebra a = dual_steenrod(p, cap);
  CoactionTable t(a, a);
  fill_steenrod_entries(t, p, cap);
  return t;
}

Element coproduct(const CoactionTable& psi, const Monomial& m) { return psi.coaction(m); }

CoassociativityReport coassociativity_check(Residue p, std::int64_t cap) {
  CoassociativityReport rep;
  CoactionTable psi = steenrod_coproduct(p, cap);
  const Algebra& a = psi.astar();
  const std::size_t n = a.size();
  Algebra triple = renamed(a, "a.").tensor(renamed(a, "b.")).tensor(a);
  auto place = [&](const Monomial& m, std::size_t off) {
    Monomial out = triple.unit();
    for (std::size_t i = 0; i < n; ++i) out[off + i] = m[i];
    return out;
  };
  std::map<Monomial, Element> cache;
  auto psi_of = [&](const Monomial& m) -> const Element& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, psi.coaction(m)).first;
    return it->second;
  };
  for (std::int64_t d = 0; d <= cap; ++d) {
    for (const auto& m : basis_in_bidegree(a, 0, d)) {
      ++rep.checked;
      const Element& pm = psi_of(m);
      Element lhs = triple.zero(), rhs = triple.zero();
      for (const auto& [cm, c] : pm.terms()) {
        Monomial x(cm.begin(), cm.begin() + static_cast<std::ptrdiff_t>(n));
        Monomial y(cm.begin() + static_cast<std::ptrdiff_t>(n), cm.end());
        // (psi (x) id): psi(x) fills the a. and b. slots; (id (x) psi): psi(y) fills the b. and last slots.
        lhs += multiply(triple, transport(psi_of(x), psi.combined(), triple, 0), triple.term(place(y, 2 * n), c));
        rhs += multiply(triple, triple.term(place(x, 0), c), transport(psi_of(y), psi.combined(), triple, n));
      }
      if (!(lhs == rhs)) {
        rep.pass = false;
        if (rep.witness.empty()) rep.witness = a.format(m);
      }
    }
  }
  return rep;
}

CoassociativityReport counit_check(Residue p, std::int64_t cap) {
  CoassociativityReport rep;
  CoactionTable psi = steenrod_coproduct(p, cap);
  const Algebra& a = psi.astar();
  const std::size_t n = a.size();
  for (std::int64_t d = 0; d <= cap; ++d) {
    for (const auto& m : basis_in_bidegree(a, 0, d)) {
      ++rep.checked;
      Element pm = psi.coaction(m);
      Element left_counit = psi.counit_side(pm);
      Element right_counit = a.zero();
      for (const auto& [cm, c] : pm.terms()) {
        bool unit_right = true;
        for (std::size_t i = n; i < cm.size(); ++i) unit_right = unit_right && cm[i] == 0;
        if (unit_right) right_counit.add_term(Monomial(cm.begin(), cm.begin() + static_cast<std::ptrdiff_t>(n)), c);
      }
      if (!(left_counit == a.term(m)) || !(right_counit == a.term(m))) {
        rep.pass = false;
        if (rep.witness.empty()) rep.witness = a.format(m);
      }
    }
  }
  return rep;
}

std::string ring_key(RingId r) {
  switch (r) {
    case RingId::Zp: return "zp";
    case RingId::ZLocal: return "zlocal";
    case RingId::Ell: return "ell";
    case RingId::EllModP: return "ellmodp";
  }
  return "";
}

std::optional<RingId> parse_ring(const std::string& key) {
  for (RingId r : {RingId::Zp, RingId::ZLocal, RingId::Ell, RingId::EllModP})
    if (ring_key(r) == key) return r;
  return std::nullopt;
}

CoactionTable v1_thh_coaction(RingId ring, Residue p, std::int64_t cap) {
  std::vector<Generator> g;
  auto add = [&](Generator x) {
    if (x.total() <= cap) g.push_back(std::move(x));
  };
  add(Generator::exterior("tau0", 0, 1));
  add(Generator::exterior("tau1", 0, tau_degree(p, 1)));
  const std::int64_t tau_min = ring == RingId::Zp ? 0 : ring == RingId::ZLocal ? 1 : 2;
  for (std::int64_t k = 1; xi_degree(p, k) <= cap; ++k) add(Generator::polynomial(xib(k), 0, xi_degree(p, k)));
  if (ring == RingId::EllModP) add(Generator::exterior(taub(0), 0, 1));
  for (std::int64_t k = tau_min; tau_degree(p, k) <= cap; ++k) add(Generator::exterior(taub(k), 0, tau_degree(p, k)));
  auto sxi = [&](std::int64_t k) { add(Generator::exterior("s" + xib(k), 0, tau_degree(p, k))); };
  auto stau = [&](std::int64_t k) { add(Generator::polynomial("s" + taub(k), 0, tau_degree(p, k) + 1)); };
  switch (ring) {
    case RingId::Zp: stau(0); break;
    case RingId::ZLocal: sxi(1); stau(1); break;
    case RingId::Ell: sxi(1); sxi(2); stau(2); break;
    case RingId::EllModP:
      stau(0);
      add(Generator::exterior("y", 0, tau_degree(p, 1)));
      sxi(2);
      stau(2);
      break;
  }
  Algebra target(p, g);
  MonomialFilter filter;
  if (ring == RingId::EllModP) {
    auto i_t0 = target.find(taub(0)), i_s0 = target.find("s" + taub(0)), i_y = target.find("y");
    filter = [=](const Monomial& m) {
      std::int64_t d = (i_t0 ? m[*i_t0] : 0), e = (i_s0 ? m[*i_s0] : 0), y = (i_y ? m[*i_y] : 0);
      if (y) return d == 0 && e == 0;
      return d + 2 * e <= 2 * static_cast<std::int64_t>(p) - 2;
    };
  }
  CoactionTable t(dual_steenrod(p, cap), target, filter);
  fill_steenrod_entries(t, p, cap);
  const Residue m1 = p - 1;
  // H_*(V(1)) in conjugate generators: tau0 = -taub0, tau1 = -taub1 + taub0 xib1, xi1 = -xib1.
  if (t.target().find("tau0")) t.set("tau0", t.right_gen("tau0") + t.left_gen("taub0").scaled(m1));
  if (t.target().find("tau1")) {
    Element v = t.right_gen("tau1");
    v += multiply(t.combined(), t.left_gen("xib1"), t.right_gen("tau0")).scaled(m1);
    v += t.left_gen("taub1").scaled(m1);
    v += multiply(t.combined(), t.left_gen("taub0"), t.left_gen("xib1"));
    t.set("tau1", v);
  }
  for (std::int64_t k = 1; k <= 2; ++k) {
    std::string s = "s" + xib(k);
    if (t.target().find(s)) t.set(s, t.right_gen(s));
  }
  for (std::int64_t k = 0; k <= 2; ++k) {
    std::string s = "s" + taub(k);
    if (!t.target().find(s)) continue;
    Element v = t.right_gen(s);
    if (k > 0) v += multiply(t.combined(), t.left_gen("taub0"), t.right_gen("s" + xib(k)));
    t.set(s, v);
  }
  if (t.target().find("y")) {
    Element v = t.right_gen("y");
    v += multiply(t.combined(), t.left_gen("taub0"), t.right_gen("staub0", p - 1));
    v += multiply(t.combined(), t.left_gen("taub0"), t.right_gen("xib1")).scaled(m1);
    v += t.left_gen("taub1").scaled(m1);
    t.set("y", v);
  }
  return t;
}

std::vector<NamedClass> named_classes(RingId ring, const CoactionTable& table) {
  const Algebra& a = table.target();
  const Residue p = a.prime(), m1 = p - 1;
  auto has = [&](std::initializer_list<const char*> names) {
    for (auto n : names)
      if (!a.find(n)) return false;
    return true;
  };
  auto prod = [&](const Element& x, const Element& y) { return multiply(a, x, y); };
  std::vector<NamedClass> out;
  if (has({"taub0", "tau0"}) && ring == RingId::Zp) out.push_back({"epsilon0", a.gen("taub0") + a.gen("tau0")});
  if (has({"taub1", "tau0", "xib1", "tau1"}) && ring != RingId::Ell && ring != RingId::EllModP)
    out.push_back({"epsilon1", a.gen("taub1") + prod(a.gen("tau0"), a.gen("xib1")) + a.gen("tau1")});
  if (has({"sxib1"})) out.push_back({"lambda1", a.gen("sxib1")});
  if (has({"sxib2"})) out.push_back({"lambda2", a.gen("sxib2")});
  if (has({"staub0"}) && ring == RingId::Zp) out.push_back({"mu0", a.gen("staub0")});
  if (has({"staub1", "tau0", "sxib1"})) out.push_back({"mu1", a.gen("staub1") + prod(a.gen("tau0"), a.gen("sxib1"))});
  if (has({"staub2", "tau0", "sxib2"})) out.push_back({"mu2", a.gen("staub2") + prod(a.gen("tau0"), a.gen("sxib2"))});
  if (has({"y", "tau0", "staub0", "xib1", "tau1"})) {
    Element e = a.gen("y") + prod(a.gen("tau0"), a.gen("staub0", p - 1));
    e += prod(a.gen("tau0"), a.gen("xib1")).scaled(m1);
    e += a.gen("tau1").scaled(m1);
    out.push_back({"epsilonbar1", e});
  }
  return out;
}

PrimitivityReport primitivity_suite(Residue p) {
  PrimitivityReport rep;
  const std::int64_t cap = 2 * static_cast<std::int64_t>(p) * p + 2;
  for (RingId r : {RingId::Zp, RingId::ZLocal, RingId::Ell, RingId::EllModP}) {
    CoactionTable t = v1_thh_coaction(r, p, cap);
    for (const auto& c : named_classes(r, t)) {
      bool ok = t.is_primitive(c.value);
      rep.results.emplace_back(c.name + "@" + ring_key(r), ok);
      rep.pass = rep.pass && ok;
    }
  }
  return rep;
}

PoincareSeries primitive_dimensions(const CoactionTable& table, std::int64_t lo, std::int64_t hi) {
  PoincareSeries ps(lo, hi);
  const Algebra& tg = table.target();
  const Residue p = tg.prime();
  for (std::int64_t d = std::max<std::int64_t>(lo, 0); d <= hi; ++d) {
    auto basis = basis_in_bidegree(tg, 0, d, table.target_filter());
    if (basis.empty()) continue;
    std::map<Monomial, std::uint32_t> rows;
    std::vector<SparseVec> cols;
    for (const auto& m : basis) {
      Element diff = table.coaction(m) - table.right(tg.term(m));
      SparseVec v;
      for (const auto& [cm, c] : diff.terms()) {
        auto it = rows.emplace(cm, static_cast<std::uint32_t>(rows.size())).first;
        v.emplace_back(it->second, c);
      }
      cols.push_back(std::move(v));
    }
    SparseMatrix mat(rows.size(), basis.size(), p);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, v] : cols[c]) mat.data[r].emplace_back(static_cast<std::uint32_t>(c), v);
    for (auto& row : mat.data) std::sort(row.begin(), row.end());
    ps[d] = static_cast<std::int64_t>(kernel_basis(mat).size());
  }
  return ps;
}

bool AlphaReport::forced_minus_one() const {
  if (suspension_admissible.size() != 1 || coaction_consistent.size() != 1) return false;
  if (primitive_combinations.size() != 1) return false;
  const Residue m1 = p - 1;
  return suspension_admissible.front() == m1 && coaction_consistent.front() == m1 &&
         primitive_combinations.front() == std::make_pair(m1, m1);
}

AlphaReport alpha_forcing(Residue p) {
  AlphaReport rep;
  rep.p = p;
  const Residue m1 = p - 1;

  // Suspension in H_*(THH(Z/p)) = A_* (x) P(sigma taub0): sigma is a derivation with
  // sigma taub0 = staub0, sigma taub1 = staub0^p, sigma xib1 = 0, sigma staub0 = 0.
  Algebra z(p, {Generator::polynomial("xib1", 0, xi_degree(p, 1)), Generator::exterior("taub0", 0, 1),
                Generator::exterior("taub1", 0, tau_degree(p, 1)), Generator::polynomial("staub0", 0, 2)});
  std::vector<Element> sigma(z.size(), z.zero());
  sigma[z.index("taub0")] = z.gen("staub0");
  sigma[z.index("taub1")] = z.gen("staub0", p);
  auto suspend = [&](const Element& x) {
    Element out = z.zero();
    for (const auto& [m, c] : x.terms()) out += leibniz_expand(z, sigma, m).scaled(c);
    return out;
  };
  const Monomial allowed1 = z.monomial({{"taub0", 1}, {"taub1", 1}});
  const Monomial allowed2 = z.monomial({{"xib1", 1}, {"staub0", 1}});
  for (Residue alpha = 0; alpha < p; ++alpha) {
    bool some_beta = false;
    for (Residue beta = 0; beta < p; ++beta) {
      Element lift = multiply(z, z.gen("taub0"), z.gen("staub0", p - 1)) + z.gen("taub1").scaled(alpha) +
                     multiply(z, z.gen("xib1"), z.gen("taub0")).scaled(beta);
      Element s = suspend(lift);
      bool ok = true;
      for (const auto& [m, c] : s.terms()) ok = ok && (m == allowed1 || m == allowed2);
      some_beta = some_beta || ok;
    }
    if (some_beta) rep.suspension_admissible.push_back(alpha);
  }

  // Coaction of the image of y under the Z/p table against the stated coaction of y.
  const std::int64_t cap = 2 * static_cast<std::int64_t>(p) + 2;
  CoactionTable zp = v1_thh_coaction(RingId::Zp, p, cap);
  const Algebra& zt = zp.target();
  for (Residue alpha = 0; alpha < p; ++alpha) {
    bool any = false;
    for (Residue beta = 0; beta < p; ++beta) {
      Element image = multiply(zt, zt.gen("taub0"), zt.gen("staub0", p - 1)) + zt.gen("taub1").scaled(alpha) +
                      multiply(zt, zt.gen("xib1"), zt.gen("taub0")).scaled(beta);
      Element stated = zp.right(image);
      stated += multiply(zp.combined(), zp.left_gen("taub0"), zp.right_gen("staub0", p - 1));
      stated += multiply(zp.combined(), zp.left_gen("taub0"), zp.right_gen("xib1")).scaled(m1);
      stated += zp.left_gen("taub1").scaled(m1);
      if (zp.coaction(image) == stated) any = true;
    }
    if (any) rep.coaction_consistent.push_back(alpha);
  }

  // Primitive combinations over l/p, first with y carrying the alpha-lift coaction, then the stated one.
  CoactionTable lp = v1_thh_coaction(RingId::EllModP, p, cap);
  const Algebra& lt = lp.target();
  auto candidate = [&](Residue c, Residue d) {
    Element e = lt.gen("y") + multiply(lt, lt.gen("tau0"), lt.gen("staub0", p - 1));
    e += multiply(lt, lt.gen("tau0"), lt.gen("xib1")).scaled(c);
    e += lt.gen("tau1").scaled(d);
    return e;
  };
  for (Residue alpha = 0; alpha < p; ++alpha) {
    CoactionTable ta = lp;
    Element v = ta.right_gen("y");
    v += multiply(ta.combined(), ta.left_gen("taub0"), ta.right_gen("staub0", p - 1));
    v += multiply(ta.combined(), ta.left_gen("taub0"), ta.right_gen("xib1")).scaled(alpha);
    v += ta.left_gen("taub1").scaled(alpha);
    ta.set("y", v);
    bool any = false;
    for (Residue c = 0; c < p && !any; ++c)
      for (Residue d = 0; d < p && !any; ++d) any = ta.is_primitive(candidate(c, d));
    if (any) rep.primitive_for_some_lift.push_back(alpha);
  }
  for (Residue c = 0; c < p; ++c)
    for (Residue d = 0; d < p; ++d)
      if (lp.is_primitive(candidate(c, d))) rep.primitive_combinations.emplace_back(c, d);
  return rep;
}

}  // namespace fpss
