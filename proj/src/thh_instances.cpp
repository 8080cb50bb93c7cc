#include "fpss/thh_instances.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fpss/numerics.hpp"

namespace fpss {

namespace {

std::int64_t xi_deg(Residue p, std::int64_t k) { return 2 * ipow(p, static_cast<unsigned>(k)) - 2; }
std::int64_t tau_deg(Residue p, std::int64_t k) { return 2 * ipow(p, static_cast<unsigned>(k)) - 1; }

// Indices k with taub_k in H_*(B).
bool has_taub(RingId ring, std::int64_t k) {
  switch (ring) {
    case RingId::Zp: return k >= 0;
    case RingId::ZLocal: return k >= 1;
    case RingId::Ell: return k >= 2;
    case RingId::EllModP: return k == 0 || k >= 2;
  }
  return false;
}

// H_*(B) generators at s = 0, xib_k first, then taub_k.
std::vector<Generator> homology_gens(RingId ring, Residue p, std::int64_t cap) {
  std::vector<Generator> g;
  for (std::int64_t k = 1; xi_deg(p, k) <= cap; ++k)
    g.push_back(Generator::polynomial("xib" + std::to_string(k), 0, xi_deg(p, k)));
  for (std::int64_t k = 0; tau_deg(p, k) <= cap; ++k)
    if (has_taub(ring, k)) g.push_back(Generator::exterior("taub" + std::to_string(k), 0, tau_deg(p, k)));
  return g;
}

void require_prime(Residue p, Residue min) {
  if (p < min || !is_prime(p))
    throw std::invalid_argument("p must be a prime >= " + std::to_string(min) + ", got " + std::to_string(p));
}

// Number of monomials of total degree at most hi, saturating at the budget.
std::int64_t count_up_to(const Algebra& alg, std::int64_t hi) {
  const std::int64_t cap = kBokstedtMonomialBudget + 1;
  if (hi < 0) return 0;
  std::vector<std::int64_t> c(hi + 1, 0);
  c[0] = 1;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    std::int64_t d = alg.gens()[i].total();
    std::int64_t b = alg.bound(i) ? alg.bound(i) : std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> next(hi + 1, 0);
    if (b == std::numeric_limits<std::int64_t>::max()) {
      for (std::int64_t n = 0; n <= hi; ++n) next[n] = std::min(cap, c[n] + (n >= d ? next[n - d] : 0));
    } else {
      for (std::int64_t n = 0; n <= hi; ++n) {
        if (!c[n]) continue;
        for (std::int64_t e = 0; e < b && n + e * d <= hi; ++e) next[n + e * d] = std::min(cap, next[n + e * d] + c[n]);
      }
    }
    c.swap(next);
  }
  std::int64_t total = 0;
  for (auto v : c) total = std::min(cap, total + v);
  return total;
}

}  // namespace

AmbientPtr bokstedt_ambient(RingId ring, Residue p, std::int64_t cap) {
  require_prime(p, 3);
  std::vector<Generator> g = homology_gens(ring, p, cap);
  for (std::int64_t k = 1; xi_deg(p, k) + 1 <= cap; ++k)
    g.push_back(Generator::exterior("sxib" + std::to_string(k), 1, xi_deg(p, k)));
  for (std::int64_t k = 0; tau_deg(p, k) + 1 <= cap; ++k)
    if (has_taub(ring, k)) g.push_back(Generator::divided("staub" + std::to_string(k), 1, tau_deg(p, k)));
  return make_ambient(Algebra(p, std::move(g)), {}, "bokstedt:" + ring_key(ring));
}

DiffRule bokstedt_rule(const AmbientPtr& ambient) {
  const Algebra& alg = ambient->alg;
  const auto p = static_cast<std::int64_t>(alg.prime());
  // (divided power index, index of the sxib one step up)
  std::vector<std::pair<std::size_t, std::optional<std::size_t>>> links;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const auto& name = alg.gens()[i].name;
    if (name.rfind("staub", 0) != 0) continue;
    std::int64_t k = std::stoll(name.substr(5));
    links.emplace_back(i, alg.find("sxib" + std::to_string(k + 1)));
  }
  return family_rule(static_cast<std::int64_t>(p) - 1, "d" + std::to_string(p - 1),
                     [ambient, links, p](const Monomial& m) {
                       const Algebra& a = ambient->alg;
                       Element out = a.zero();
                       for (const auto& [i, target] : links) {
                         if (m[i] < p) continue;
                         if (!target)
                           throw SpectralSequenceError("rule image lands outside the ambient: no successor of " +
                                                       a.gens()[i].name);
                         Monomial rest = m;
                         rest[i] -= p;
                         Monomial s = a.unit();
                         s[*target] = 1;
                         out += multiply(a, a.term(s), a.term(rest));
                       }
                       return out;
                     });
}

MonomialPredicate bokstedt_einf_member(RingId ring, const AmbientPtr& ambient) {
  const Algebra& alg = ambient->alg;
  const auto p = static_cast<std::int64_t>(alg.prime());
  std::vector<std::size_t> divided, dead;
  auto survives = [ring](std::int64_t k) {
    switch (ring) {
      case RingId::Zp: return false;
      case RingId::ZLocal: return k == 1;
      case RingId::Ell: return k == 1 || k == 2;
      case RingId::EllModP: return k == 2;
    }
    return false;
  };
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const auto& name = alg.gens()[i].name;
    if (name.rfind("staub", 0) == 0) divided.push_back(i);
    if (name.rfind("sxib", 0) == 0 && !survives(std::stoll(name.substr(4)))) dead.push_back(i);
  }
  return [divided, dead, p](const Monomial& m) {
    for (auto i : divided)
      if (m[i] >= p) return false;
    for (auto i : dead)
      if (m[i]) return false;
    return true;
  };
}

Page bokstedt_e2(RingId ring, Residue p, std::int64_t lo, std::int64_t hi) {
  require_prime(p, 3);
  auto amb = bokstedt_ambient(ring, p, std::max<std::int64_t>(hi, 0));
  if (count_up_to(amb->alg, hi) > kBokstedtMonomialBudget)
    throw std::length_error("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] exceeds the monomial budget");
  return seed_full(amb, TrustWindow{lo, hi, std::nullopt}, 2, "E");
}

BokstedtRun bokstedt_run(RingId ring, Residue p, std::int64_t lo, std::int64_t hi) {
  require_prime(p, 3);
  auto amb = bokstedt_ambient(ring, p, std::max<std::int64_t>(hi + 2, 0));
  if (count_up_to(amb->alg, hi + 1) > kBokstedtMonomialBudget)
    throw std::length_error("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] exceeds the monomial budget");
  BokstedtRun run;
  run.e2 = seed_full(amb, TrustWindow{lo - 1, hi + 1, std::nullopt}, 2, "E");
  DiffRule d = bokstedt_rule(amb);
  Page at = advance(run.e2, d.r);
  run.einf = turn_page(at, d);
  run.einf.name = "Einf";
  run.closed = seed_closed(amb, TrustWindow{lo, hi, std::nullopt}, run.einf.r, bokstedt_einf_member(ring, amb),
                           "Einf");
  run.report = compare_pages(run.einf, run.closed);
  return run;
}

HochschildComplex::HochschildComplex(const Algebra& alg, std::int64_t max_total) : alg_(alg), max_total_(max_total) {
  for (const auto& g : alg.gens()) {
    if (g.total() < 1) throw std::invalid_argument("generator " + g.name + " has total degree < 1");
    if (g.kind == GenKind::Laurent) throw std::invalid_argument("generator " + g.name + " is invertible");
  }
  const std::int64_t top = max_total + 1;
  Region reg{0, top, std::nullopt, std::nullopt};
  std::vector<Generator> flat = alg.gens();
  for (auto& g : flat) {
    g.t = g.total();
    g.s = 0;
  }
  Algebra a(alg.prime(), flat);
  reg.t_lo = 0;
  reg.t_hi = top;
  for (const auto& [b, v] : enumerate_region(a, reg))
    for (const auto& m : v) {
      ids_[m] = static_cast<std::uint32_t>(mons_.size());
      mons_.push_back(m);
      deg_.push_back(b.total());
    }
  std::vector<std::vector<std::uint32_t>> by_deg(top + 1);
  for (std::uint32_t i = 0; i < mons_.size(); ++i) by_deg[deg_[i]].push_back(i);

  // Tuples (a0, a1, ..., an) with deg a_i >= 1 for i >= 1 and n + sum deg <= top.
  std::vector<std::uint32_t> cur;
  std::function<void(std::int64_t, std::int64_t)> extend = [&](std::int64_t n, std::int64_t d) {
    chains_[{n, d}].push_back(cur);
    for (std::int64_t e = 1; n + 1 + d + e <= top; ++e)
      for (auto id : by_deg[e]) {
        cur.push_back(id);
        extend(n + 1, d + e);
        cur.pop_back();
      }
  };
  for (std::int64_t e = 0; e <= top; ++e)
    for (auto id : by_deg[e]) {
      cur.assign(1, id);
      extend(0, e);
    }
}

const std::vector<std::vector<std::uint32_t>>& HochschildComplex::chains(std::int64_t n, std::int64_t d) const {
  static const std::vector<std::vector<std::uint32_t>> none;
  auto it = chains_.find({n, d});
  return it == chains_.end() ? none : it->second;
}

SparseMatrix HochschildComplex::boundary(std::int64_t n, std::int64_t d) const {
  const auto& src = chains(n, d);
  const auto& dst = chains(n - 1, d);
  SparseMatrix b(src.size(), dst.size(), alg_.prime());
  if (n <= 0 || src.empty()) return b;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
  const auto& f = alg_.field();
  for (std::size_t row = 0; row < src.size(); ++row) {
    const auto& a = src[row];
    std::map<std::uint32_t, Residue> img;
    auto add = [&](const std::vector<std::uint32_t>& tuple, Residue c) {
      auto it = index.find(tuple);
      if (it == index.end()) return;  // merged factor became the unit: degenerate, zero in the normalized complex
      img[it->second] = f.add(img[it->second], c);
    };
    for (std::int64_t i = 0; i < n; ++i) {
      auto [prod, c] = multiply_monomials(alg_, mons_[a[i]], mons_[a[i + 1]]);
      if (!c) continue;
      std::vector<std::uint32_t> t(a.begin(), a.begin() + i);
      t.push_back(ids_.at(prod));
      t.insert(t.end(), a.begin() + i + 2, a.end());
      add(t, i % 2 ? f.neg(c) : c);
    }
    {
      auto [prod, c] = multiply_monomials(alg_, mons_[a[n]], mons_[a[0]]);
      if (c) {
        std::int64_t before = 0;
        for (std::int64_t i = 0; i < n; ++i) before += deg_[a[i]];
        bool neg = (n % 2 != 0) != ((deg_[a[n]] % 2 != 0) && (before % 2 != 0));
        std::vector<std::uint32_t> t{ids_.at(prod)};
        t.insert(t.end(), a.begin() + 1, a.begin() + n);
        add(t, neg ? f.neg(c) : c);
      }
    }
    for (const auto& [col, v] : img)
      if (v) b.set(row, col, v);
  }
  return b;
}

PoincareSeries HochschildComplex::homology() const {
  PoincareSeries ps(0, max_total_);
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> rank;
  auto rk = [&](std::int64_t n, std::int64_t d) -> std::size_t {
    if (n <= 0) return 0;
    auto key = std::make_pair(n, d);
    auto it = rank.find(key);
    if (it != rank.end()) return it->second;
    return rank[key] = fpss::rref(boundary(n, d)).rank;
  };
  for (const auto& [key, v] : chains_) {
    auto [n, d] = key;
    if (n + d > max_total_) continue;
    ps[n + d] += static_cast<std::int64_t>(v.size() - rk(n, d) - rk(n + 1, d));
  }
  return ps;
}

PoincareSeries hh_bruteforce(const Algebra& alg, std::int64_t max_total) {
  return HochschildComplex(alg, max_total).homology();
}

PoincareSeries Presentation::series(std::int64_t lo, std::int64_t hi) const {
  return poincare_series(alg, lo, hi, filter);
}

std::vector<Monomial> Presentation::basis(std::int64_t degree) const {
  return basis_in_bidegree(alg, 0, degree, filter);
}

namespace {

// F_p{x^d y^i : d + 2i <= 2p - 2} plus z alone, on an exterior x of degree 1, a height-p truncated y of
// degree 2 and an exterior z of degree 2p - 1.
MonomialFilter module_filter(const Algebra& alg, const std::string& x, const std::string& y, const std::string& z) {
  std::size_t ix = alg.index(x), iy = alg.index(y), iz = alg.index(z);
  const auto p = static_cast<std::int64_t>(alg.prime());
  return [ix, iy, iz, p](const Monomial& m) {
    if (m[iz]) return m[ix] == 0 && m[iy] == 0;
    return m[ix] + 2 * m[iy] <= 2 * p - 2;
  };
}

}  // namespace

Presentation v1_thh_presentation(RingId ring, Residue p) {
  require_prime(p, 5);
  const std::int64_t q = p;
  auto ext = [](const char* n, std::int64_t d) { return Generator::exterior(n, 0, d); };
  auto poly = [](const char* n, std::int64_t d) { return Generator::polynomial(n, 0, d); };
  Presentation out{"thh:v1:" + ring_key(ring), Algebra(), {}};
  switch (ring) {
    case RingId::Zp:
      out.alg = Algebra(p, {ext("e0", 1), ext("e1", 2 * q - 1), poly("m0", 2)});
      break;
    case RingId::ZLocal:
      out.alg = Algebra(p, {ext("e1", 2 * q - 1), ext("l1", 2 * q - 1), poly("m1", 2 * q)});
      break;
    case RingId::Ell:
      out.alg = Algebra(p, {ext("l1", 2 * q - 1), ext("l2", 2 * q * q - 1), poly("m2", 2 * q * q)});
      break;
    case RingId::EllModP:
      out.alg = Algebra(p, {ext("e0", 1), Generator::truncated("m0", 0, 2, q), ext("eb1", 2 * q - 1),
                            ext("l2", 2 * q * q - 1), poly("m2", 2 * q * q)});
      out.filter = module_filter(out.alg, "e0", "m0", "eb1");
      break;
  }
  return out;
}

Presentation thh_homology_presentation(RingId ring, Residue p, std::int64_t cap) {
  require_prime(p, 3);
  const std::int64_t q = p;
  Presentation out{"thh:h:" + ring_key(ring), Algebra(), {}};
  std::vector<Generator> g = homology_gens(ring == RingId::EllModP ? RingId::Ell : ring, p, cap);
  auto add = [&](Generator x) {
    if (x.total() <= cap) g.push_back(std::move(x));
  };
  switch (ring) {
    case RingId::Zp:
      add(Generator::polynomial("staub0", 0, 2));
      break;
    case RingId::ZLocal:
      add(Generator::exterior("sxib1", 0, 2 * q - 1));
      add(Generator::polynomial("staub1", 0, 2 * q));
      break;
    case RingId::Ell:
      add(Generator::exterior("sxib1", 0, 2 * q - 1));
      add(Generator::exterior("sxib2", 0, 2 * q * q - 1));
      add(Generator::polynomial("staub2", 0, 2 * q * q));
      break;
    case RingId::EllModP:
      add(Generator::exterior("sxib2", 0, 2 * q * q - 1));
      add(Generator::polynomial("staub2", 0, 2 * q * q));
      g.push_back(Generator::exterior("taub0", 0, 1));
      g.push_back(Generator::truncated("staub0", 0, 2, q));
      g.push_back(Generator::exterior("y", 0, 2 * q - 1));
      break;
  }
  out.alg = Algebra(p, std::move(g));
  if (ring == RingId::EllModP) out.filter = module_filter(out.alg, "taub0", "staub0", "y");
  return out;
}

Presentation v1_homology_presentation(Residue p) {
  require_prime(p, 3);
  return {"h:v1",
          Algebra(p, {Generator::exterior("tau0", 0, 1), Generator::exterior("tau1", 0, 2 * static_cast<std::int64_t>(p) - 1)}),
          {}};
}

IdentityReport poincare_identity_check(RingId ring, Residue p, std::int64_t N) {
  IdentityReport rep;
  const std::int64_t hi = std::max<std::int64_t>(N, 0);
  PoincareSeries astar = poincare_series(dual_steenrod(p, hi), 0, hi);
  rep.lhs = v1_homology_presentation(p).series(0, hi) * thh_homology_presentation(ring, p, hi).series(0, hi);
  rep.rhs = astar * v1_thh_presentation(ring, p).series(0, hi);
  for (std::int64_t d = 0; d <= N; ++d)
    if (rep.lhs.at(d) != rep.rhs.at(d)) {
      rep.pass = false;
      rep.failing_degree = d;
      rep.lhs_value = rep.lhs.at(d);
      rep.rhs_value = rep.rhs.at(d);
      break;
    }
  return rep;
}

}  // namespace fpss
