#include "fpss/graded_algebra.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fpss/numerics.hpp"

namespace fpss {

Generator Generator::exterior(std::string name, std::int64_t s, std::int64_t t) {
  return {name, s, t, GenKind::Exterior, 2, name};
}
Generator Generator::polynomial(std::string name, std::int64_t s, std::int64_t t) {
  return {name, s, t, GenKind::Polynomial, 0, name};
}
Generator Generator::laurent(std::string name, std::int64_t s, std::int64_t t) {
  return {name, s, t, GenKind::Laurent, 0, name};
}
Generator Generator::truncated(std::string name, std::int64_t s, std::int64_t t, std::int64_t h) {
  if (h < 2) throw std::invalid_argument("truncation height must be at least 2");
  return {name, s, t, GenKind::Truncated, h, name};
}
Generator Generator::divided(std::string name, std::int64_t s, std::int64_t t) {
  return {name, s, t, GenKind::DividedPower, 0, name};
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

Residue Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Element::add_term(const Monomial& m, Residue c) {
  if (p_ == 0) throw std::logic_error("element has no ground field");
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    Residue v = (it->second + c) % p_;
    if (v) it->second = v;
    else terms_.erase(it);
  }
}

void Element::check_compatible(const Element& o) {
  if (o.id_ == 0) return;
  if (id_ == 0) {
    id_ = o.id_;
    p_ = o.p_;
    return;
  }
  if (id_ != o.id_) throw std::invalid_argument("elements belong to different algebras");
}

Element& Element::operator+=(const Element& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, p_ - c);
  return *this;
}

Element Element::operator-() const { return scaled(p_ - 1); }

Element Element::scaled(Residue c) const {
  Element r(id_, p_);
  if (p_ == 0) return r;
  c %= p_;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_)
    r.terms_.emplace(m, static_cast<Residue>(static_cast<std::uint64_t>(v) * c % p_));
  return r;
}

Algebra::Algebra(Residue p, std::vector<Generator> gens) : p_(p), field_(p), gens_(std::move(gens)) {
  std::uint64_t h = 1469598103934665603ULL ^ p;
  auto mix = [&h](std::uint64_t v) { h = (h ^ v) * 1099511628211ULL; };
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    auto& g = gens_[i];
    if (g.display.empty()) g.display = g.name;
    if (!by_name_.emplace(g.name, i).second) throw std::invalid_argument("duplicate generator " + g.name);
    bool odd = (g.total() % 2) != 0;
    if (odd && g.kind != GenKind::Exterior)
      throw std::invalid_argument("odd-degree generator " + g.name + " must be exterior");
    if (g.kind == GenKind::Truncated && g.height < 2)
      throw std::invalid_argument("truncation height must be at least 2");
    if (g.kind == GenKind::Exterior) g.height = 2;
    odd_.push_back(odd);
    for (char c : g.name) mix(static_cast<unsigned char>(c));
    mix(static_cast<std::uint64_t>(g.s));
    mix(static_cast<std::uint64_t>(g.t));
    mix(static_cast<std::uint64_t>(g.kind));
    mix(static_cast<std::uint64_t>(g.height));
  }
  if (h == 0) h = 1;
  id_ = h;
}

std::optional<std::size_t> Algebra::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t Algebra::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown generator " + name);
  return *i;
}

std::int64_t Algebra::bound(std::size_t i) const {
  const auto& g = gens_[i];
  if (g.kind == GenKind::Exterior || g.kind == GenKind::Truncated) return g.height;
  return 0;
}

Monomial Algebra::monomial(const std::vector<std::pair<std::string, std::int64_t>>& factors) const {
  Monomial m = unit();
  for (const auto& [n, e] : factors) m[index(n)] += e;
  if (!valid(m)) throw std::invalid_argument("invalid exponent in monomial");
  return m;
}

bool Algebra::valid(const Monomial& m) const {
  if (m.size() != gens_.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& g = gens_[i];
    switch (g.kind) {
      case GenKind::Exterior:
      case GenKind::Truncated:
        if (m[i] < 0 || m[i] >= g.height) return false;
        break;
      case GenKind::Polynomial:
      case GenKind::DividedPower:
        if (m[i] < 0) return false;
        break;
      case GenKind::Laurent:
        break;
    }
  }
  return true;
}

Bideg Algebra::bidegree(const Monomial& m) const {
  Bideg b;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    b.s = checked_add(b.s, checked_mul(m[i], gens_[i].s));
    b.t = checked_add(b.t, checked_mul(m[i], gens_[i].t));
  }
  return b;
}

bool Algebra::odd_total(const Monomial& m) const {
  bool o = false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (odd_[i] && (m[i] & 1)) o = !o;
  return o;
}

Element Algebra::one() const { return term(unit()); }

Element Algebra::term(const Monomial& m, Residue c) const {
  if (!valid(m)) throw std::invalid_argument("invalid monomial");
  Element e = zero();
  e.add_term(m, c);
  return e;
}

Element Algebra::gen(const std::string& name, std::int64_t exp) const { return term(monomial({{name, exp}})); }

std::string Algebra::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    const auto& g = gens_[i];
    out += g.display;
    if (g.kind == GenKind::DividedPower) out += "[" + std::to_string(m[i]) + "]";
    else if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Algebra::format(const Element& e) const {
  if (e.is_zero()) return "0";
  std::vector<std::pair<Monomial, Residue>> ts(e.terms().begin(), e.terms().end());
  std::sort(ts.begin(), ts.end(), [this](const auto& a, const auto& b) { return canonical_less(*this, a.first, b.first); });
  std::string out;
  for (const auto& [m, c] : ts) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += format(m);
  }
  return out;
}

Algebra Algebra::tensor(const Algebra& other) const {
  if (other.p_ != p_) throw std::invalid_argument("tensor of algebras over different primes");
  std::vector<Generator> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Algebra(p_, g);
}

bool canonical_less(const Algebra& alg, const Monomial& a, const Monomial& b) {
  auto da = alg.total(a), db = alg.total(b);
  if (da != db) return da < db;
  return a < b;
}

std::pair<Monomial, Residue> multiply_monomials(const Algebra& alg, const Monomial& a, const Monomial& b) {
  const std::size_t n = alg.size();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("monomial does not belong to algebra");
  const auto& f = alg.field();
  Monomial out(n, 0);
  Residue coeff = 1;
  // Moving each factor of b left past the later factors of a.
  bool parity = false;
  bool suffix_odd = false;
  for (std::size_t k = n; k-- > 0;) {
    if (alg.odd(k) && (b[k] & 1) && suffix_odd) parity = !parity;
    if (alg.odd(k) && (a[k] & 1)) suffix_odd = !suffix_odd;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = alg.gens()[i];
    std::int64_t e = a[i] + b[i];
    switch (g.kind) {
      case GenKind::Exterior:
      case GenKind::Truncated:
        if (e >= g.height) return {out, 0};
        break;
      case GenKind::DividedPower:
        if (a[i] && b[i]) {
          coeff = f.mul(coeff, binom_mod_p(alg.prime(), static_cast<std::uint64_t>(a[i]),
                                           static_cast<std::uint64_t>(b[i])));
          if (!coeff) return {out, 0};
        }
        break;
      case GenKind::Polynomial:
      case GenKind::Laurent:
        break;
    }
    out[i] = e;
  }
  if (parity) coeff = f.neg(coeff);
  return {out, coeff};
}

Element multiply(const Algebra& alg, const Element& a, const Element& b) {
  for (const Element* e : {&a, &b})
    if (e->algebra_id() != 0 && e->algebra_id() != alg.id())
      throw std::invalid_argument("element does not belong to algebra");
  Element r = alg.zero();
  const auto& f = alg.field();
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto [m, c] = multiply_monomials(alg, ma, mb);
      if (c) r.add_term(m, f.mul(c, f.mul(ca, cb)));
    }
  return r;
}

namespace {

struct Functional {
  std::int64_t cs = 0, ct = 0;
  std::int64_t eval(std::int64_t s, std::int64_t t) const { return cs * s + ct * t; }
};

class RegionEnumerator {
 public:
  RegionEnumerator(const Algebra& alg, const Region& region, const MonomialFilter& filter)
      : alg_(alg), reg_(region), filter_(filter) {
    const auto& gens = alg.gens();
    bool all_t_nonneg = std::all_of(gens.begin(), gens.end(), [](const Generator& g) { return g.t >= 0; });
    if (!reg_.t_lo && all_t_nonneg) reg_.t_lo = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (alg.bound(i)) bounded_.push_back(i);
      else if (gens[i].kind == GenKind::Laurent) laurent_.push_back(i);
      else unbounded_.push_back(i);
    }
    if (laurent_.size() > 2) throw std::invalid_argument("more than two Laurent generators: enumeration unsupported");
    if (laurent_.size() == 2) {
      const auto& a = gens[laurent_[0]];
      const auto& b = gens[laurent_[1]];
      det_ = a.s * b.t - a.t * b.s;
      if (det_ == 0)
        throw std::invalid_argument("infinite bidegree: Laurent generators " + a.name + " and " + b.name +
                                    " have proportional bidegrees");
      if (!(reg_.lo == reg_.hi && reg_.t_lo && reg_.t_hi && *reg_.t_lo == *reg_.t_hi))
        throw std::invalid_argument("two Laurent generators require a single bidegree");
    }
    for (auto i : unbounded_) phi_.push_back(choose_functional(i));
  }

  void run(std::map<Bideg, std::vector<Monomial>>& out) {
    if (reg_.hi < reg_.lo) return;
    if (reg_.t_lo && reg_.t_hi && *reg_.t_hi < *reg_.t_lo) return;
    out_ = &out;
    cur_.assign(alg_.size(), 0);
    bounded_step(0, 0, 0);
  }

 private:
  std::optional<std::int64_t> max_over_region(const Functional& f) const {
    // f = cs*N + (ct-cs)*t
    std::int64_t a = f.cs, b = f.ct - f.cs;
    std::int64_t v = a > 0 ? a * reg_.hi : a * reg_.lo;
    if (b > 0) {
      if (!reg_.t_hi) return std::nullopt;
      v += b * *reg_.t_hi;
    } else if (b < 0) {
      if (!reg_.t_lo) return std::nullopt;
      v += b * *reg_.t_lo;
    }
    return v;
  }

  std::pair<Functional, std::int64_t> choose_functional(std::size_t gi) const {
    static const Functional candidates[] = {{1, 1}, {0, 1}, {-1, 0}, {1, 0}, {0, -1}, {-1, -1}};
    const auto& gens = alg_.gens();
    for (const auto& f : candidates) {
      if (f.eval(gens[gi].s, gens[gi].t) <= 0) continue;
      bool ok = true;
      for (auto j : unbounded_)
        if (j != gi && f.eval(gens[j].s, gens[j].t) < 0) ok = false;
      for (auto j : laurent_)
        if (f.eval(gens[j].s, gens[j].t) != 0) ok = false;
      if (!ok) continue;
      auto m = max_over_region(f);
      if (!m) continue;
      return {f, *m};
    }
    throw std::invalid_argument("infinite region: generator " + gens[gi].name + " has unbounded exponent");
  }

  void bounded_step(std::size_t k, std::int64_t s, std::int64_t t) {
    if (k == bounded_.size()) {
      unbounded_step(0, s, t);
      return;
    }
    std::size_t gi = bounded_[k];
    const auto& g = alg_.gens()[gi];
    for (std::int64_t e = 0; e < alg_.bound(gi); ++e) {
      cur_[gi] = e;
      bounded_step(k + 1, s + e * g.s, t + e * g.t);
    }
    cur_[gi] = 0;
  }

  void unbounded_step(std::size_t k, std::int64_t s, std::int64_t t) {
    if (k == unbounded_.size()) {
      leaf(s, t);
      return;
    }
    std::size_t gi = unbounded_[k];
    const auto& g = alg_.gens()[gi];
    const auto& [f, fmax] = phi_[k];
    std::int64_t step = f.eval(g.s, g.t);
    std::int64_t budget = fmax - f.eval(s, t);
    if (budget < 0) return;
    std::int64_t emax = budget / step;
    for (std::int64_t e = 0; e <= emax; ++e) {
      cur_[gi] = e;
      unbounded_step(k + 1, s + e * g.s, t + e * g.t);
    }
    cur_[gi] = 0;
  }

  bool in_region(std::int64_t s, std::int64_t t) const {
    std::int64_t n = s + t;
    if (n < reg_.lo || n > reg_.hi) return false;
    if (reg_.t_lo && t < *reg_.t_lo) return false;
    if (reg_.t_hi && t > *reg_.t_hi) return false;
    return true;
  }

  void emit(std::int64_t s, std::int64_t t) {
    if (filter_ && !filter_(cur_)) return;
    (*out_)[Bideg{s, t}].push_back(cur_);
  }

  void leaf(std::int64_t s, std::int64_t t) {
    const auto& gens = alg_.gens();
    if (laurent_.empty()) {
      if (in_region(s, t)) emit(s, t);
      return;
    }
    if (laurent_.size() == 2) {
      const auto& a = gens[laurent_[0]];
      const auto& b = gens[laurent_[1]];
      std::int64_t ts = reg_.lo - *reg_.t_lo - s, tt = *reg_.t_lo - t;
      std::int64_t x = ts * b.t - tt * b.s, y = a.s * tt - a.t * ts;
      if (x % det_ || y % det_) return;
      cur_[laurent_[0]] = x / det_;
      cur_[laurent_[1]] = y / det_;
      emit(s + cur_[laurent_[0]] * a.s + cur_[laurent_[1]] * b.s, t + cur_[laurent_[0]] * a.t + cur_[laurent_[1]] * b.t);
      cur_[laurent_[0]] = cur_[laurent_[1]] = 0;
      return;
    }
    std::size_t li = laurent_[0];
    const auto& g = gens[li];
    std::int64_t lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
    auto constrain = [&](std::int64_t coef, std::int64_t base, std::optional<std::int64_t> a,
                         std::optional<std::int64_t> b) {
      // a <= base + e*coef <= b
      if (coef == 0) {
        if ((a && base < *a) || (b && base > *b)) hi = lo - 1;
        return;
      }
      std::optional<std::int64_t> l, h;
      if (coef > 0) {
        if (a) l = -floor_div(-(*a - base), coef);
        if (b) h = floor_div(*b - base, coef);
      } else {
        if (b) l = -floor_div(-(*b - base), coef);
        if (a) h = floor_div(*a - base, coef);
      }
      if (l) lo = std::max(lo, *l);
      if (h) hi = std::min(hi, *h);
    };
    constrain(g.total(), s + t, reg_.lo, reg_.hi);
    constrain(g.t, t, reg_.t_lo, reg_.t_hi);
    if (lo == std::numeric_limits<std::int64_t>::min() || hi == std::numeric_limits<std::int64_t>::max())
      throw std::invalid_argument("infinite region: Laurent generator " + g.name + " is unbounded");
    for (std::int64_t e = lo; e <= hi; ++e) {
      cur_[li] = e;
      emit(s + e * g.s, t + e * g.t);
    }
    cur_[li] = 0;
  }

  const Algebra& alg_;
  Region reg_;
  const MonomialFilter& filter_;
  std::vector<std::size_t> bounded_, unbounded_, laurent_;
  std::vector<std::pair<Functional, std::int64_t>> phi_;
  std::int64_t det_ = 0;
  std::map<Bideg, std::vector<Monomial>>* out_ = nullptr;
  Monomial cur_;
};

}  // namespace

std::map<Bideg, std::vector<Monomial>> enumerate_region(const Algebra& alg, const Region& region,
                                                        const MonomialFilter& filter) {
  std::map<Bideg, std::vector<Monomial>> out;
  RegionEnumerator(alg, region, filter).run(out);
  for (auto& [b, v] : out) std::sort(v.begin(), v.end());
  return out;
}

std::vector<Monomial> basis_in_bidegree(const Algebra& alg, std::int64_t s, std::int64_t t,
                                        const MonomialFilter& filter) {
  Region r{s + t, s + t, t, t};
  auto m = enumerate_region(alg, r, filter);
  auto it = m.find(Bideg{s, t});
  return it == m.end() ? std::vector<Monomial>{} : it->second;
}

PoincareSeries PoincareSeries::operator*(const PoincareSeries& o) const {
  std::int64_t l = lo + o.lo;
  std::int64_t h = std::min(hi + o.lo, lo + o.hi);
  PoincareSeries r(l, h);
  for (std::int64_t n = l; n <= h; ++n) {
    std::int64_t acc = 0;
    for (std::int64_t i = lo; i <= hi; ++i) acc += at(i) * o.at(n - i);
    r[n] = acc;
  }
  return r;
}

PoincareSeries PoincareSeries::restricted(std::int64_t l, std::int64_t h) const {
  PoincareSeries r(l, h);
  for (std::int64_t n = l; n <= h; ++n) r[n] = at(n);
  return r;
}

std::string PoincareSeries::to_string() const {
  std::ostringstream os;
  for (std::int64_t n = lo; n <= hi; ++n) os << n << ':' << at(n) << (n < hi ? " " : "");
  return os.str();
}

PoincareSeries poincare_series(const Algebra& alg, std::int64_t lo, std::int64_t hi, const MonomialFilter& filter) {
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const auto& g = alg.gens()[i];
    if (g.total() == 0 && !alg.bound(i))
      throw std::invalid_argument("infinite degree: generator " + g.name + " has total degree 0");
  }
  PoincareSeries ps(lo, hi);
  Region r{lo, hi, std::nullopt, std::nullopt};
  // Poincare series are taken over total degree; collapse the bigrading onto it.
  std::vector<Generator> flat = alg.gens();
  for (auto& g : flat) {
    g.t = g.total();
    g.s = 0;
  }
  Algebra a(alg.prime(), flat);
  r.t_lo = lo;
  r.t_hi = hi;
  for (const auto& [b, v] : enumerate_region(a, r, filter)) ps[b.total()] += static_cast<std::int64_t>(v.size());
  return ps;
}

PoincareSeries poincare_series(const std::vector<std::int64_t>& degrees, std::int64_t lo, std::int64_t hi) {
  PoincareSeries ps(lo, hi);
  for (auto d : degrees)
    if (d >= lo && d <= hi) ps[d] += 1;
  return ps;
}

}  // namespace fpss
