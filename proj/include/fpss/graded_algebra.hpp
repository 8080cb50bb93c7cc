#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpss/fp_linalg.hpp"

namespace fpss {

enum class GenKind { Exterior, Polynomial, Laurent, Truncated, DividedPower };

struct Generator {
  std::string name;
  std::int64_t s = 0;
  std::int64_t t = 0;
  GenKind kind = GenKind::Polynomial;
  std::int64_t height = 0;  // Truncated only
  std::string display;      // text form; defaults to name

  std::int64_t total() const { return s + t; }
  static Generator exterior(std::string name, std::int64_t s, std::int64_t t);
  static Generator polynomial(std::string name, std::int64_t s, std::int64_t t);
  static Generator laurent(std::string name, std::int64_t s, std::int64_t t);
  static Generator truncated(std::string name, std::int64_t s, std::int64_t t, std::int64_t h);
  static Generator divided(std::string name, std::int64_t s, std::int64_t t);
  Generator& shown_as(std::string d) {
    display = std::move(d);
    return *this;
  }
};

// Exponent vector aligned with the algebra's generator list.
using Monomial = std::vector<std::int64_t>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Bideg {
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t total() const { return s + t; }
  bool operator==(const Bideg&) const = default;
  // Total degree first, then s.
  bool operator<(const Bideg& o) const {
    if (total() != o.total()) return total() < o.total();
    return s < o.s;
  }
};

class Element {
 public:
  Element() = default;
  Element(std::uint64_t algebra_id, Residue p) : id_(algebra_id), p_(p) {}

  const std::map<Monomial, Residue>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Residue coeff(const Monomial& m) const;
  void add_term(const Monomial& m, Residue c);
  std::uint64_t algebra_id() const { return id_; }
  Residue prime() const { return p_; }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator+(const Element& o) const { Element r(*this); r += o; return r; }
  Element operator-(const Element& o) const { Element r(*this); r -= o; return r; }
  Element operator-() const;
  Element scaled(Residue c) const;
  bool operator==(const Element& o) const { return terms_ == o.terms_; }

 private:
  void check_compatible(const Element& o);
  std::uint64_t id_ = 0;
  Residue p_ = 0;
  std::map<Monomial, Residue> terms_;
};

// Region of bidegrees: lo <= s+t <= hi, t_lo <= t <= t_hi.
struct Region {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::optional<std::int64_t> t_lo;
  std::optional<std::int64_t> t_hi;
};

using MonomialFilter = std::function<bool(const Monomial&)>;

class Algebra {
 public:
  Algebra() = default;
  Algebra(Residue p, std::vector<Generator> gens);

  Residue prime() const { return p_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Generator>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::uint64_t id() const { return id_; }
  bool operator==(const Algebra& o) const { return id_ == o.id_; }

  std::size_t index(const std::string& name) const;
  std::optional<std::size_t> find(const std::string& name) const;
  bool odd(std::size_t i) const { return odd_[i]; }
  // Largest allowed exponent plus one for bounded kinds, 0 for unbounded ones.
  std::int64_t bound(std::size_t i) const;

  Monomial unit() const { return Monomial(gens_.size(), 0); }
  Monomial monomial(const std::vector<std::pair<std::string, std::int64_t>>& factors) const;
  bool valid(const Monomial& m) const;
  Bideg bidegree(const Monomial& m) const;
  std::int64_t total(const Monomial& m) const { return bidegree(m).total(); }
  bool odd_total(const Monomial& m) const;

  Element zero() const { return Element(id_, p_); }
  Element one() const;
  Element term(const Monomial& m, Residue c = 1) const;
  Element gen(const std::string& name, std::int64_t exp = 1) const;

  std::string format(const Monomial& m) const;
  std::string format(const Element& e) const;

  // Generators of this algebra followed by those of other.
  Algebra tensor(const Algebra& other) const;

 private:
  Residue p_ = 0;
  PrimeField field_{2};
  std::vector<Generator> gens_;
  std::vector<char> odd_;
  std::map<std::string, std::size_t> by_name_;
  std::uint64_t id_ = 0;
};

// Product of two basis monomials: the resulting monomial and its coefficient (0 when it vanishes).
std::pair<Monomial, Residue> multiply_monomials(const Algebra& alg, const Monomial& a, const Monomial& b);
Element multiply(const Algebra& alg, const Element& a, const Element& b);

// Order used for reports: total degree, then exponent vector.
bool canonical_less(const Algebra& alg, const Monomial& a, const Monomial& b);

std::vector<Monomial> basis_in_bidegree(const Algebra& alg, std::int64_t s, std::int64_t t,
                                        const MonomialFilter& filter = {});
std::map<Bideg, std::vector<Monomial>> enumerate_region(const Algebra& alg, const Region& region,
                                                        const MonomialFilter& filter = {});

struct PoincareSeries {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<std::int64_t> dims;

  PoincareSeries() = default;
  PoincareSeries(std::int64_t l, std::int64_t h) : lo(l), hi(h), dims(h >= l ? h - l + 1 : 0, 0) {}
  std::int64_t at(std::int64_t d) const { return (d < lo || d > hi) ? 0 : dims[d - lo]; }
  std::int64_t& operator[](std::int64_t d) { return dims.at(d - lo); }
  bool operator==(const PoincareSeries&) const = default;
  // Cauchy product, valid on the window where both factors are known (dims vanish below lo).
  PoincareSeries operator*(const PoincareSeries& o) const;
  PoincareSeries restricted(std::int64_t l, std::int64_t h) const;
  std::string to_string() const;
};

PoincareSeries poincare_series(const Algebra& alg, std::int64_t lo, std::int64_t hi,
                               const MonomialFilter& filter = {});
PoincareSeries poincare_series(const std::vector<std::int64_t>& degrees, std::int64_t lo, std::int64_t hi);

}  // namespace fpss
