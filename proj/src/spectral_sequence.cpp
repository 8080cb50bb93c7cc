#include "fpss/spectral_sequence.hpp"

#include <algorithm>
#include <sstream>

#include <omp.h>

namespace fpss {

TrustWindow TrustWindow::intersect(const TrustWindow& o) const {
  TrustWindow w{std::max(lo, o.lo), std::min(hi, o.hi), t_hi};
  if (o.t_hi) w.t_hi = t_hi ? std::min(*t_hi, *o.t_hi) : *o.t_hi;
  return w;
}

AmbientPtr make_ambient(Algebra alg, MonomialFilter filter, std::string name) {
  for (const auto& g : alg.gens())
    if (g.t < 0) throw SpectralSequenceError("ambient generator " + g.name + " has negative internal degree");
  return std::make_shared<const Ambient>(Ambient{std::move(alg), std::move(filter), std::move(name), false});
}

AmbientPtr make_left_half_plane_ambient(Algebra alg, MonomialFilter filter, std::string name) {
  for (const auto& g : alg.gens())
    if (g.s > 0) throw SpectralSequenceError("ambient generator " + g.name + " has positive filtration");
  return std::make_shared<const Ambient>(Ambient{std::move(alg), std::move(filter), std::move(name), true});
}

std::optional<std::uint32_t> Cell::index_of(const Monomial& m) const {
  auto it = std::lower_bound(basis->begin(), basis->end(), m);
  if (it == basis->end() || *it != m) return std::nullopt;
  return static_cast<std::uint32_t>(it - basis->begin());
}

std::size_t Page::dim(const Bideg& b) const {
  auto it = cells.find(b);
  return it == cells.end() ? 0 : it->second.dim();
}

std::size_t Page::dim_total(std::int64_t n) const {
  std::size_t d = 0;
  for (const auto& [b, c] : cells)
    if (b.total() == n) d += c.dim();
  return d;
}

std::size_t Page::total_dim() const {
  std::size_t d = 0;
  for (const auto& [b, c] : cells) d += c.dim();
  return d;
}

Element Page::rep_element(const Bideg& b, std::size_t i) const {
  const auto& c = cells.at(b);
  Element e = ambient->alg.zero();
  for (const auto& [k, v] : c.reps.at(i)) e.add_term((*c.basis)[k], v);
  return e;
}

std::vector<std::string> Page::labels(const Bideg& b) const {
  std::vector<std::string> out;
  auto it = cells.find(b);
  if (it == cells.end()) return out;
  for (std::size_t i = 0; i < it->second.dim(); ++i) {
    const auto& rep = it->second.reps[i];
    if (rep.size() == 1 && rep[0].second == 1) out.push_back(ambient->alg.format((*it->second.basis)[rep[0].first]));
    else out.push_back(ambient->alg.format(rep_element(b, i)));
  }
  return out;
}

std::string Page::dump() const {
  std::ostringstream os;
  for (const auto& [b, c] : cells) {
    if (!c.dim()) continue;
    os << "s=" << b.s << " t=" << b.t << " dim=" << c.dim() << " basis=";
    auto ls = labels(b);
    for (std::size_t i = 0; i < ls.size(); ++i) os << (i ? "," : "") << ls[i];
    os << '\n';
  }
  return os.str();
}

namespace {

std::map<Bideg, std::vector<Monomial>> enumerate_window(const Ambient& amb, const TrustWindow& w) {
  if (w.empty()) return {};
  Region reg{w.lo, w.hi, amb.left_half_plane ? w.lo : 0, w.t_hi};
  return enumerate_region(amb.alg, reg, amb.filter);
}

SparseVec unit_vec(std::uint32_t i) { return SparseVec{{i, 1}}; }

Bideg target_of(const Bideg& b, std::int64_t r) { return Bideg{b.s - r, b.t + r - 1}; }
Bideg source_of(const Bideg& b, std::int64_t r) { return Bideg{b.s + r, b.t - r + 1}; }

SparseVec element_to_vec(const Cell* cell, const Element& e, const Algebra& alg) {
  SparseVec v;
  for (const auto& [m, c] : e.terms()) {
    std::optional<std::uint32_t> idx;
    if (cell) idx = cell->index_of(m);
    if (!idx) throw SpectralSequenceError("rule image lands outside the ambient: " + alg.format(m));
    v.emplace_back(*idx, c);
  }
  std::sort(v.begin(), v.end());
  return v;
}

// Rule applied to an ambient-coordinate vector of cell X, expressed in cell Y's ambient coordinates.
SparseVec image_of(const DiffRule& rule, const Algebra& alg, const Cell& x, const Cell* y, const SparseVec& v,
                   std::map<std::uint32_t, SparseVec>& cache) {
  const auto& f = alg.field();
  SparseVec acc;
  for (const auto& [k, c] : v) {
    auto it = cache.find(k);
    if (it == cache.end()) {
      Element img = rule.image(alg, (*x.basis)[k]);
      it = cache.emplace(k, element_to_vec(y, img, alg)).first;
    }
    acc = axpy(f, acc, c, it->second);
  }
  return acc;
}

struct CoordSystem {
  Echelon ech;
  std::uint32_t n_amb = 0;

  CoordSystem(const Cell& c, Residue p) : ech(p), n_amb(static_cast<std::uint32_t>(c.basis->size())) {
    for (const auto& b : c.bound) ech.insert(b);
    for (std::size_t i = 0; i < c.reps.size(); ++i) {
      SparseVec row = c.reps[i];
      row.emplace_back(n_amb + static_cast<std::uint32_t>(i), 1);
      ech.insert(row);
    }
  }

  // Coordinates of v against the representatives, modulo the boundaries.
  SparseVec coords(const SparseVec& v) const {
    SparseVec res = ech.reduce(v);
    SparseVec out;
    for (const auto& [k, c] : res) {
      if (k < n_amb) throw SpectralSequenceError("differential image is not a class on the page");
      out.emplace_back(k - n_amb, ech.field().neg(c));
    }
    return out;
  }
};

struct ErrorSlot {
  std::vector<std::string> msgs;
  explicit ErrorSlot(std::size_t n) : msgs(n) {}
  void rethrow() const {
    for (const auto& m : msgs)
      if (!m.empty()) throw SpectralSequenceError(m);
  }
};

void check_rule(const Page& page, const DiffRule& rule) {
  if (rule.r != page.r)
    throw SpectralSequenceError("rule length " + std::to_string(rule.r) + " does not match page E" +
                                std::to_string(page.r));
  if (rule.r < 1) throw SpectralSequenceError("differential length must be positive");
}

}  // namespace

Page seed_full(AmbientPtr ambient, const TrustWindow& window, std::int64_t r, std::string name) {
  Page page{ambient, r, window, Provenance::Computed, std::move(name), {}};
  for (auto& [b, mons] : enumerate_window(*ambient, window)) {
    Cell c;
    c.basis = std::make_shared<const std::vector<Monomial>>(std::move(mons));
    for (std::uint32_t i = 0; i < c.basis->size(); ++i) c.reps.push_back(unit_vec(i));
    page.cells.emplace(b, std::move(c));
  }
  return page;
}

Page seed_closed(AmbientPtr ambient, const TrustWindow& window, std::int64_t r, const MonomialPredicate& member,
                 std::string name) {
  Page page{ambient, r, window, Provenance::ClosedForm, std::move(name), {}};
  for (auto& [b, mons] : enumerate_window(*ambient, window)) {
    Cell c;
    c.basis = std::make_shared<const std::vector<Monomial>>(std::move(mons));
    for (std::uint32_t i = 0; i < c.basis->size(); ++i) {
      if (member((*c.basis)[i])) c.reps.push_back(unit_vec(i));
      else c.bound.push_back(unit_vec(i));
    }
    page.cells.emplace(b, std::move(c));
  }
  return page;
}

Page restrict_page(const Page& page, const TrustWindow& window) {
  Page out{page.ambient, page.r, page.window.intersect(window), page.provenance, page.name, {}};
  for (const auto& [b, c] : page.cells)
    if (out.window.contains(b)) out.cells.emplace(b, c);
  return out;
}

Element DiffRule::image(const Algebra& alg, const Monomial& m) const {
  Element e = alg.zero();
  switch (kind) {
    case Kind::Zero: return e;
    case Kind::Derivation: e = apply_leibniz(alg, values, m, r); break;
    case Kind::Family: {
      e = family(m);
      Bideg src = alg.bidegree(m);
      for (const auto& [mm, c] : e.terms()) {
        if (!alg.valid(mm)) throw SpectralSequenceError("rule image has an invalid exponent: " + alg.format(mm));
        Bideg b = alg.bidegree(mm);
        if (b.s != src.s - r || b.t != src.t + r - 1)
          throw SpectralSequenceError("rule " + name + " sends " + alg.format(m) + " to the wrong bidegree");
      }
      break;
    }
  }
  return scale == 1 ? e : e.scaled(scale);
}

DiffRule zero_rule(std::int64_t r) { return DiffRule{r, "zero", DiffRule::Kind::Zero, 1, {}, {}}; }

DiffRule derivation_rule(std::int64_t r, std::string name, const Algebra& alg,
                         const std::map<std::string, Element>& values) {
  DiffRule d{r, std::move(name), DiffRule::Kind::Derivation, 1, {}, {}};
  d.values.assign(alg.size(), alg.zero());
  for (const auto& [n, v] : values) d.values[alg.index(n)] = v;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const auto& g = alg.gens()[i];
    for (const auto& [m, c] : d.values[i].terms()) {
      Bideg b = alg.bidegree(m);
      if (b.s != g.s - r || b.t != g.t + r - 1)
        throw SpectralSequenceError("derivation value on " + g.name + " has the wrong bidegree");
    }
  }
  return d;
}

DiffRule family_rule(std::int64_t r, std::string name, std::function<Element(const Monomial&)> fn) {
  return DiffRule{r, std::move(name), DiffRule::Kind::Family, 1, {}, std::move(fn)};
}

DiffRule rescaled(const DiffRule& rule, Residue c) {
  if (c == 0) throw SpectralSequenceError("rescaling factor must be nonzero");
  DiffRule d = rule;
  d.scale = c;
  return d;
}

Element leibniz_expand(const Algebra& alg, const std::vector<Element>& values, const Monomial& m) {
  const auto& f = alg.field();
  Element out = alg.zero();
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if (!m[i] || values[i].is_zero()) continue;
    const auto& g = alg.gens()[i];
    Monomial left = alg.unit(), right = alg.unit();
    for (std::size_t j = 0; j < i; ++j) left[j] = m[j];
    for (std::size_t j = i + 1; j < alg.size(); ++j) right[j] = m[j];
    // d(x^e) = e x^{e-1} dx, or gamma_{e-1} dx for divided powers.
    Monomial lower = alg.unit();
    lower[i] = m[i] - 1;
    Residue coef = g.kind == GenKind::DividedPower ? 1 : f.reduce(m[i]);
    if (!coef) continue;
    if (!alg.valid(lower)) continue;
    Element dx = multiply(alg, alg.term(lower, coef), values[i]);
    Element term = multiply(alg, multiply(alg, alg.term(left), dx), alg.term(right));
    if (alg.odd_total(left)) term = -term;
    out += term;
  }
  return out;
}

Element apply_leibniz(const Algebra& alg, const std::vector<Element>& values, const Monomial& m, std::int64_t r) {
  Element out = leibniz_expand(alg, values, m);
  Bideg src = alg.bidegree(m);
  for (const auto& [mm, c] : out.terms()) {
    Bideg b = alg.bidegree(mm);
    if (b.s != src.s - r || b.t != src.t + r - 1)
      throw SpectralSequenceError("derivation image of " + alg.format(m) + " has the wrong bidegree");
  }
  return out;
}

TrustWindow shrink(const TrustWindow& w, std::int64_t r) {
  TrustWindow o{w.lo + 1, w.hi - 1, w.t_hi};
  if (o.t_hi) *o.t_hi -= (r - 1);
  return o;
}

Page turn_page(const Page& page, const DiffRule& rule) {
  check_rule(page, rule);
  const Algebra& alg = page.ambient->alg;
  const Residue p = alg.prime();
  const std::int64_t r = rule.r;
  TrustWindow nw = shrink(page.window, r);

  std::vector<const Bideg*> keys;
  std::vector<const Cell*> vals;
  std::vector<Bideg> sorted;
  for (const auto& [b, c] : page.cells) {
    keys.push_back(&b);
    vals.push_back(&c);
    sorted.push_back(b);
  }
  const std::size_t n = keys.size();
  auto lookup = [&](const Bideg& b) -> std::ptrdiff_t {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), b);
    if (it == sorted.end() || !(*it == b)) return -1;
    return it - sorted.begin();
  };
  std::vector<std::ptrdiff_t> tgt(n, -1), src(n, -1);
  std::vector<char> need_out(n, 0), need_coord(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    tgt[i] = lookup(target_of(sorted[i], r));
    src[i] = lookup(source_of(sorted[i], r));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (nw.contains(*keys[i]) || nw.contains(target_of(*keys[i], r))) need_out[i] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (need_out[i] && tgt[i] >= 0) need_coord[tgt[i]] = 1;

  std::vector<std::unique_ptr<CoordSystem>> coord(n);
  std::vector<std::vector<SparseVec>> dout(n);
  ErrorSlot err(n);
  const std::int64_t ni = static_cast<std::int64_t>(n);

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < ni; ++i) {
    if (!need_coord[i]) continue;
    try {
      coord[i] = std::make_unique<CoordSystem>(*vals[i], p);
    } catch (const std::exception& e) {
      err.msgs[i] = e.what();
    }
  }
  err.rethrow();

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < ni; ++i) {
    if (!need_out[i]) continue;
    try {
      const Cell& x = *vals[i];
      const Cell* y = tgt[i] >= 0 ? vals[tgt[i]] : nullptr;
      std::map<std::uint32_t, SparseVec> cache;
      dout[i].reserve(x.reps.size());
      for (const auto& rep : x.reps) {
        SparseVec img = image_of(rule, alg, x, y, rep, cache);
        dout[i].push_back(img.empty() ? SparseVec{} : coord[tgt[i]]->coords(img));
      }
    } catch (const std::exception& e) {
      err.msgs[i] = "at s=" + std::to_string(keys[i]->s) + " t=" + std::to_string(keys[i]->t) + ": " + e.what();
    }
  }
  err.rethrow();

  std::vector<std::optional<Cell>> out(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < ni; ++i) {
    if (!nw.contains(*keys[i])) continue;
    try {
      const Cell& x = *vals[i];
      const std::size_t nx = x.reps.size();
      const std::size_t ny = tgt[i] >= 0 ? vals[tgt[i]]->reps.size() : 0;
      SparseMatrix m(ny, nx, p);
      for (std::size_t c = 0; c < nx; ++c)
        for (const auto& [row, v] : dout[i][c]) m.data[row].emplace_back(static_cast<std::uint32_t>(c), v);
      std::vector<SparseVec> ker;
      if (ny == 0)
        for (std::uint32_t c = 0; c < nx; ++c) ker.push_back(unit_vec(c));
      else
        ker = kernel_basis(m);

      Echelon span(p);
      Echelon bound(p);
      for (const auto& b : x.bound) bound.insert(b);
      const PrimeField& f = alg.field();
      auto to_ambient = [&](const SparseVec& coords) {
        SparseVec a;
        for (const auto& [k, c] : coords) a = axpy(f, a, c, x.reps[k]);
        return a;
      };
      if (src[i] >= 0 && vals[src[i]]->dim()) {
        for (const auto& col : dout[src[i]]) {
          if (col.empty()) continue;
          if (ny) {
            SparseVec dd;
            for (const auto& [k, c] : col) dd = axpy(f, dd, c, dout[i][k]);
            if (!dd.empty())
              throw SpectralSequenceError("d o d is nonzero at s=" + std::to_string(keys[i]->s) +
                                          " t=" + std::to_string(keys[i]->t));
          }
          span.insert(col);
          bound.insert(to_ambient(col));
        }
      }
      Echelon surv(p);
      for (const auto& k : ker)
        if (span.insert(k)) surv.insert(bound.reduce(to_ambient(k)));
      Cell c;
      c.basis = x.basis;
      c.reps = surv.reduced_rows();
      c.bound = bound.reduced_rows();
      out[i] = std::move(c);
    } catch (const std::exception& e) {
      err.msgs[i] = e.what();
    }
  }
  err.rethrow();

  Page res{page.ambient, page.r + 1, nw, Provenance::Computed, page.name, {}};
  for (std::size_t i = 0; i < n; ++i)
    if (out[i]) res.cells.emplace_hint(res.cells.end(), *keys[i], std::move(*out[i]));
  return res;
}

namespace {

// Rows of an echelon basis of the given vectors, in reduced form.
std::vector<SparseVec> rref_rows(const std::vector<SparseVec>& vs, std::size_t cols, Residue p) {
  SparseMatrix m(vs.size(), cols, p);
  for (std::size_t i = 0; i < vs.size(); ++i) m.data[i] = vs[i];
  return rref(m).rref.data;
}

// Reduce v by rows of a reduced echelon matrix.
SparseVec reduce_by(const PrimeField& f, SparseVec v, const std::vector<SparseVec>& rrows) {
  for (const auto& row : rrows) {
    std::uint32_t piv = row.front().first;
    auto it = std::lower_bound(v.begin(), v.end(), piv, [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (it != v.end() && it->first == piv) v = axpy(f, v, f.neg(it->second), row);
  }
  return v;
}

std::size_t rank_of(const std::vector<SparseVec>& vs, std::size_t cols, Residue p) {
  SparseMatrix m(vs.size(), cols, p);
  for (std::size_t i = 0; i < vs.size(); ++i) m.data[i] = vs[i];
  return rref(m).rank;
}

}  // namespace

Page turn_page_serial(const Page& page, const DiffRule& rule) {
  check_rule(page, rule);
  const Algebra& alg = page.ambient->alg;
  const Residue p = alg.prime();
  const PrimeField& f = alg.field();
  const std::int64_t r = rule.r;
  TrustWindow nw = shrink(page.window, r);
  Page res{page.ambient, page.r + 1, nw, Provenance::Computed, page.name, {}};

  auto find = [&](const Bideg& b) -> const Cell* {
    auto it = page.cells.find(b);
    return it == page.cells.end() ? nullptr : &it->second;
  };
  for (const auto& [b, x] : page.cells) {
    if (!nw.contains(b)) continue;
    const Cell* y = find(target_of(b, r));
    const Cell* z = find(source_of(b, r));
    std::map<std::uint32_t, SparseVec> cache_x, cache_z;
    const std::size_t nx = x.reps.size();
    std::vector<SparseVec> cycles;
    if (y) {
      const std::size_t ny_amb = y->basis->size();
      std::vector<SparseVec> imgs;
      for (const auto& rep : x.reps) imgs.push_back(image_of(rule, alg, x, y, rep, cache_x));
      // Every image must be a class on the page.
      std::vector<SparseVec> page_span = y->bound;
      page_span.insert(page_span.end(), y->reps.begin(), y->reps.end());
      std::size_t base_rank = rank_of(page_span, ny_amb, p);
      for (const auto& im : imgs) {
        auto with = page_span;
        with.push_back(im);
        if (rank_of(with, ny_amb, p) != base_rank)
          throw SpectralSequenceError("differential image is not a class on the page");
      }
      // Kernel of [D(reps) | B_Y] with columns indexing unknowns; project onto the first nx.
      const std::size_t nb = y->bound.size();
      SparseMatrix m(ny_amb, nx + nb, p);
      for (std::size_t c = 0; c < nx; ++c)
        for (const auto& [row, v] : imgs[c]) m.data[row].emplace_back(static_cast<std::uint32_t>(c), v);
      for (std::size_t c = 0; c < nb; ++c)
        for (const auto& [row, v] : y->bound[c]) m.data[row].emplace_back(static_cast<std::uint32_t>(nx + c), v);
      for (auto& row : m.data) std::sort(row.begin(), row.end());
      for (const auto& k : kernel_basis(m)) {
        SparseVec proj;
        for (const auto& [c, v] : k)
          if (c < nx) proj.emplace_back(c, v);
        if (proj.empty()) continue;
        SparseVec amb;
        for (const auto& [c, v] : proj) amb = axpy(f, amb, v, x.reps[c]);
        cycles.push_back(amb);
      }
    } else {
      for (const auto& rep : x.reps) {
        std::map<std::uint32_t, SparseVec> tmp;
        if (!image_of(rule, alg, x, nullptr, rep, tmp).empty())
          throw SpectralSequenceError("rule image lands outside the ambient");
      }
      cycles = x.reps;
    }
    std::vector<SparseVec> bvecs = x.bound;
    if (z)
      for (const auto& rep : z->reps) bvecs.push_back(image_of(rule, alg, *z, &x, rep, cache_z));
    const std::size_t n_amb = x.basis->size();
    auto brows = rref_rows(bvecs, n_amb, p);
    std::vector<SparseVec> reduced;
    for (const auto& c : cycles) reduced.push_back(reduce_by(f, c, brows));
    Cell c;
    c.basis = x.basis;
    c.reps = rref_rows(reduced, n_amb, p);
    c.bound = brows;
    res.cells.emplace_hint(res.cells.end(), b, std::move(c));
  }
  return res;
}

Page advance(const Page& page, std::int64_t r) {
  if (r < page.r) throw SpectralSequenceError("cannot move to an earlier page");
  Page out = page;
  out.r = r;
  return out;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " checked=" << checked;
  if (!failures.empty()) os << " first_failure=\"" << failures.front() << "\"";
  return os.str();
}

CheckReport well_definedness_check(const Page& page, const DiffRule& rule) {
  CheckReport rep;
  const Algebra& alg = page.ambient->alg;
  const Residue p = alg.prime();
  for (const auto& [b, x] : page.cells) {
    Bideg tb = target_of(b, rule.r);
    if (!page.window.contains(tb)) continue;
    auto yt = page.cells.find(tb);
    const Cell* y = yt == page.cells.end() ? nullptr : &yt->second;
    Echelon by(p);
    if (y)
      for (const auto& v : y->bound) by.insert(v);
    std::map<std::uint32_t, SparseVec> cache;
    for (const auto& bv : x.bound) {
      ++rep.checked;
      std::string witness;
      try {
        SparseVec img = image_of(rule, alg, x, y, bv, cache);
        if (!by.contains(img)) {
          Element e = alg.zero();
          for (const auto& [k, c] : bv) e.add_term((*x.basis)[k], c);
          Element ie = alg.zero();
          for (const auto& [k, c] : img) ie.add_term((*y->basis)[k], c);
          witness = "boundary " + alg.format(e) + " maps to non-boundary " + alg.format(ie);
        }
      } catch (const std::exception& ex) {
        witness = ex.what();
      }
      if (!witness.empty()) {
        rep.pass = false;
        if (rep.failures.size() < 20) rep.failures.push_back(witness);
      }
    }
  }
  return rep;
}

CheckReport compare_pages(const Page& computed, const Page& closed) {
  if (computed.ambient->alg.id() != closed.ambient->alg.id() || computed.ambient->name != closed.ambient->name)
    throw SpectralSequenceError("pages live in incomparable ambients");
  CheckReport rep;
  const Algebra& alg = computed.ambient->alg;
  const Residue p = alg.prime();
  TrustWindow w = computed.window.intersect(closed.window);
  std::map<Bideg, std::pair<const Cell*, const Cell*>> both;
  for (const auto& [b, c] : computed.cells)
    if (w.contains(b)) both[b].first = &c;
  for (const auto& [b, c] : closed.cells)
    if (w.contains(b)) both[b].second = &c;
  auto where = [](const Bideg& b) { return "s=" + std::to_string(b.s) + " t=" + std::to_string(b.t); };
  for (const auto& [b, pr] : both) {
    ++rep.checked;
    auto [a, c] = pr;
    std::size_t da = a ? a->dim() : 0, dc = c ? c->dim() : 0;
    std::string fail;
    if (da != dc) {
      fail = where(b) + " dim " + std::to_string(da) + " vs " + std::to_string(dc);
    } else if (da > 0) {
      Echelon bound(p), all(p);
      for (const auto& v : a->bound) {
        bound.insert(v);
        all.insert(v);
      }
      for (const auto& v : a->reps) all.insert(v);
      for (std::size_t i = 0; i < c->reps.size() && fail.empty(); ++i) {
        SparseVec v;
        for (const auto& [k, x] : c->reps[i]) {
          auto idx = a->index_of((*c->basis)[k]);
          if (!idx) {
            fail = where(b) + " closed-form class outside computed basis";
            break;
          }
          v.emplace_back(*idx, x);
        }
        std::sort(v.begin(), v.end());
        if (!fail.empty()) break;
        Element e = alg.zero();
        for (const auto& [k, x] : v) e.add_term((*a->basis)[k], x);
        if (!all.contains(v)) fail = where(b) + " class " + alg.format(e) + " is not a cycle of the computed page";
        else if (!bound.insert(v)) fail = where(b) + " class " + alg.format(e) + " is dependent modulo boundaries";
      }
    }
    if (!fail.empty()) {
      rep.pass = false;
      if (rep.failures.size() < 20) rep.failures.push_back(fail);
    }
  }
  return rep;
}

bool pages_identical(const Page& a, const Page& b) {
  if (a.r != b.r || a.window.lo != b.window.lo || a.window.hi != b.window.hi || a.window.t_hi != b.window.t_hi)
    return false;
  if (a.cells.size() != b.cells.size()) return false;
  for (auto ia = a.cells.begin(), ib = b.cells.begin(); ia != a.cells.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    if (*ia->second.basis != *ib->second.basis) return false;
    if (ia->second.reps != ib->second.reps || ia->second.bound != ib->second.bound) return false;
  }
  return true;
}

}  // namespace fpss
