#include "fpss/fp_linalg.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace fpss {

namespace {

bool is_prime_u32(Residue p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FpScalar::FpScalar(std::int64_t v, Residue p) : value(PrimeField(p).reduce(v)), modulus(p) {}

PrimeField::PrimeField(Residue p) : p_(p) {
  if (p >= (1u << 31) || !is_prime_u32(p)) throw std::invalid_argument("modulus must be a prime below 2^31");
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

SparseMatrix::SparseMatrix(std::size_t r, std::size_t c, Residue prime)
    : rows(r), cols(c), p(prime), data(r) {
  PrimeField check(prime);
  (void)check;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rws, Residue prime,
                                      std::size_t ncols) {
  PrimeField f(prime);
  if (ncols == 0 && !rws.empty()) ncols = rws.front().size();
  SparseMatrix m(rws.size(), ncols, prime);
  for (std::size_t i = 0; i < rws.size(); ++i) {
    if (rws[i].size() != ncols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < ncols; ++j) {
      Residue v = f.reduce(rws[i][j]);
      if (v) m.data[i].emplace_back(static_cast<std::uint32_t>(j), v);
    }
  }
  return m;
}

void SparseMatrix::set(std::size_t r, std::size_t c, Residue v) {
  if (r >= rows || c >= cols) throw std::out_of_range("matrix index");
  v %= p;
  auto& row = data[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v) it->second = v;
    else row.erase(it);
  } else if (v) {
    row.insert(it, {static_cast<std::uint32_t>(c), v});
  }
}

Residue SparseMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = data.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : 0;
}

std::vector<std::tuple<std::size_t, std::size_t, Residue>> SparseMatrix::entries() const {
  std::vector<std::tuple<std::size_t, std::size_t, Residue>> out;
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [c, v] : data[i]) out.emplace_back(i, c, v);
  return out;
}

SparseVec axpy(const PrimeField& f, const SparseVec& y, Residue a, const SparseVec& x) {
  if (a == 0) return y;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, f.mul(a, j->second));
      ++j;
    } else {
      Residue v = f.add(i->second, f.mul(a, j->second));
      if (v) out.emplace_back(i->first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale(const PrimeField& f, const SparseVec& x, Residue a) {
  if (a == 0) return {};
  SparseVec out(x);
  for (auto& e : out) e.second = f.mul(e.second, a);
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  SparseVec cur = v;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    auto it = rows_.find(cur[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    std::uint32_t col = cur[pos].first;
    cur = axpy(f_, cur, f_.neg(cur[pos].second), it->second);
    pos = std::lower_bound(cur.begin(), cur.end(), col + 1,
                           [](const auto& e, std::uint32_t c) { return e.first < c; }) -
          cur.begin();
  }
  return cur;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  // Columns before the first nonzero were already reduced, so the leading entry is a new pivot.
  Residue lead_inv = f_.inv(r.front().second);
  r = scale(f_, r, lead_inv);
  rows_.emplace(r.front().first, std::move(r));
  return true;
}

std::vector<SparseVec> Echelon::reduced_rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  // Back-substitute from the largest pivot down.
  std::map<std::uint32_t, SparseVec> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec cur = it->second;
    std::size_t pos = 1;
    while (pos < cur.size()) {
      auto d = done.find(cur[pos].first);
      if (d == done.end()) {
        ++pos;
        continue;
      }
      std::uint32_t col = cur[pos].first;
      cur = axpy(f_, cur, f_.neg(cur[pos].second), d->second);
      pos = std::lower_bound(cur.begin(), cur.end(), col + 1,
                             [](const auto& e, std::uint32_t c) { return e.first < c; }) -
            cur.begin();
    }
    done.emplace(it->first, std::move(cur));
  }
  for (auto& [c, row] : done) out.push_back(std::move(row));
  return out;
}

RrefResult rref(const SparseMatrix& m) {
  RrefResult res;
  res.rref.cols = m.cols;
  res.rref.p = m.p;
  if (m.rows == 0 || m.cols == 0) return res;
  Echelon e(m.p);
  for (const auto& row : m.data) e.insert(row);
  auto rows = e.reduced_rows();
  res.rank = rows.size();
  res.rref.rows = rows.size();
  for (auto& r : rows) {
    res.pivots.push_back(r.front().first);
    res.rref.data.push_back(std::move(r));
  }
  return res;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
  std::vector<SparseVec> out;
  if (m.cols == 0) return out;
  PrimeField f(m.p);
  RrefResult r = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : r.pivots) is_pivot[c] = 1;
  // For each free column, collect pivot-row entries in that column.
  std::vector<std::vector<std::pair<std::uint32_t, Residue>>> by_col(m.cols);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (const auto& [c, v] : r.rref.data[i])
      if (!is_pivot[c]) by_col[c].emplace_back(static_cast<std::uint32_t>(r.pivots[i]), f.neg(v));
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    SparseVec v = by_col[c];
    v.emplace_back(static_cast<std::uint32_t>(c), 1);
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows || a.p != b.p) throw std::invalid_argument("incompatible matrices");
  PrimeField f(a.p);
  SparseMatrix out(a.rows, b.cols, a.p);
  for (std::size_t i = 0; i < a.rows; ++i) {
    SparseVec acc;
    for (const auto& [k, v] : a.data[i]) acc = axpy(f, acc, v, b.data[k]);
    out.data[i] = std::move(acc);
  }
  return out;
}

std::vector<std::uint64_t> quotient_basis(
    const std::vector<std::uint64_t>& ambient,
    const std::vector<std::vector<std::pair<std::uint64_t, Residue>>>& subspace, Residue p) {
  std::unordered_map<std::uint64_t, std::uint32_t> pos;
  for (std::size_t i = 0; i < ambient.size(); ++i) pos.emplace(ambient[i], static_cast<std::uint32_t>(i));
  PrimeField f(p);
  Echelon e(p);
  for (const auto& vec : subspace) {
    SparseVec v;
    for (const auto& [id, c] : vec) {
      auto it = pos.find(id);
      if (it == pos.end()) throw std::invalid_argument("subspace vector outside ambient span");
      Residue cv = c % p;
      if (cv) v.emplace_back(it->second, cv);
    }
    std::sort(v.begin(), v.end());
    SparseVec merged;
    for (const auto& [c, val] : v) {
      if (!merged.empty() && merged.back().first == c) {
        merged.back().second = f.add(merged.back().second, val);
        if (!merged.back().second) merged.pop_back();
      } else {
        merged.emplace_back(c, val);
      }
    }
    e.insert(merged);
  }
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < ambient.size(); ++i)
    if (!e.rows().count(static_cast<std::uint32_t>(i))) out.push_back(ambient[i]);
  return out;
}

}  // namespace fpss
