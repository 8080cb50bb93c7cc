#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace fpss {

using Residue = std::uint32_t;

struct FpScalar {
  Residue value = 0;
  Residue modulus = 0;

  FpScalar() = default;
  FpScalar(std::int64_t v, Residue p);
  bool operator==(const FpScalar&) const = default;
};

// Arithmetic in Z/p with p prime, p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(Residue p);
  Residue prime() const { return p_; }
  Residue add(Residue a, Residue b) const { Residue s = a + b; return s >= p_ ? s - p_ : s; }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue inv(Residue a) const;
  Residue reduce(std::int64_t v) const;

 private:
  Residue p_;
};

// Sorted by column, no zero entries.
using SparseVec = std::vector<std::pair<std::uint32_t, Residue>>;

struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Residue p = 0;
  std::vector<SparseVec> data;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c, Residue prime);
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows, Residue prime,
                                 std::size_t cols = 0);
  void set(std::size_t r, std::size_t c, Residue v);
  Residue get(std::size_t r, std::size_t c) const;
  std::vector<std::tuple<std::size_t, std::size_t, Residue>> entries() const;
  bool operator==(const SparseMatrix&) const = default;
};

struct RrefResult {
  SparseMatrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const SparseMatrix& m);
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Vectors over ambient ids; returns the ids that are not pivots of the echelonized subspace.
std::vector<std::uint64_t> quotient_basis(
    const std::vector<std::uint64_t>& ambient,
    const std::vector<std::vector<std::pair<std::uint64_t, Residue>>>& subspace, Residue p);

SparseVec axpy(const PrimeField& f, const SparseVec& y, Residue a, const SparseVec& x);
SparseVec scale(const PrimeField& f, const SparseVec& x, Residue a);

// Incremental row echelon basis; every row is monic at its pivot (its smallest column).
class Echelon {
 public:
  explicit Echelon(Residue p) : f_(p) {}
  const PrimeField& field() const { return f_; }
  SparseVec reduce(const SparseVec& v) const;
  // Returns true when v was independent of the current rows.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::uint32_t, SparseVec>& rows() const { return rows_; }
  // Rows in reduced echelon form, ordered by pivot.
  std::vector<SparseVec> reduced_rows() const;

 private:
  PrimeField f_;
  std::map<std::uint32_t, SparseVec> rows_;
};

}  // namespace fpss
