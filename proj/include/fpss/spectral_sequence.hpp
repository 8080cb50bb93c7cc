#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpss/fp_linalg.hpp"
#include "fpss/graded_algebra.hpp"

namespace fpss {

class SpectralSequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Total degrees lo..hi, and internal degree t <= t_hi when set. Ambients have t >= 0 throughout, except
// left half-plane ambients (every generator at s <= 0), where t >= s + t holds instead.
struct TrustWindow {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::optional<std::int64_t> t_hi;

  bool contains(const Bideg& b) const {
    return b.total() >= lo && b.total() <= hi && (!t_hi || b.t <= *t_hi);
  }
  bool empty() const { return hi < lo || (t_hi && *t_hi < 0); }
  TrustWindow intersect(const TrustWindow& o) const;
};

struct Ambient {
  Algebra alg;
  MonomialFilter filter;
  std::string name;
  bool left_half_plane = false;
};
using AmbientPtr = std::shared_ptr<const Ambient>;
AmbientPtr make_ambient(Algebra alg, MonomialFilter filter, std::string name);
// Generators may have negative internal degree (Laurent ones included) but must all have s <= 0.
AmbientPtr make_left_half_plane_ambient(Algebra alg, MonomialFilter filter, std::string name);

struct Cell {
  std::shared_ptr<const std::vector<Monomial>> basis;  // sorted ambient monomials
  std::vector<SparseVec> reps;                         // coset representatives, ambient coordinates
  std::vector<SparseVec> bound;                        // boundary subspace, reduced echelon rows

  std::size_t dim() const { return reps.size(); }
  std::optional<std::uint32_t> index_of(const Monomial& m) const;
};

enum class Provenance { Computed, ClosedForm };

using MonomialPredicate = std::function<bool(const Monomial&)>;

struct Page {
  AmbientPtr ambient;
  std::int64_t r = 2;
  TrustWindow window;
  Provenance provenance = Provenance::Computed;
  std::string name;
  std::map<Bideg, Cell> cells;

  std::size_t dim(const Bideg& b) const;
  std::size_t dim_total(std::int64_t n) const;
  std::vector<std::string> labels(const Bideg& b) const;
  Element rep_element(const Bideg& b, std::size_t i) const;
  std::size_t total_dim() const;
  // One line per nonzero bidegree, ordered by total degree then s.
  std::string dump() const;
};

Page seed_full(AmbientPtr ambient, const TrustWindow& window, std::int64_t r, std::string name = "E");
Page seed_closed(AmbientPtr ambient, const TrustWindow& window, std::int64_t r, const MonomialPredicate& member,
                 std::string name);
// Same cells restricted to a smaller window.
Page restrict_page(const Page& page, const TrustWindow& window);

struct DiffRule {
  enum class Kind { Zero, Derivation, Family };
  std::int64_t r = 2;
  std::string name;
  Kind kind = Kind::Zero;
  Residue scale = 1;
  std::vector<Element> values;                       // Derivation: d(generator i)
  std::function<Element(const Monomial&)> family;    // Family: image of a basis monomial

  Element image(const Algebra& alg, const Monomial& m) const;
};

DiffRule zero_rule(std::int64_t r);
DiffRule derivation_rule(std::int64_t r, std::string name, const Algebra& alg,
                         const std::map<std::string, Element>& values);
DiffRule family_rule(std::int64_t r, std::string name, std::function<Element(const Monomial&)> fn);
DiffRule rescaled(const DiffRule& rule, Residue c);

// d(L x^e R) = (-1)^{|L|} L d(x^e) R summed over factors, without any degree check.
Element leibniz_expand(const Algebra& alg, const std::vector<Element>& values, const Monomial& m);
// As leibniz_expand, checking that every image term sits in bidegree (s - r, t + r - 1).
Element apply_leibniz(const Algebra& alg, const std::vector<Element>& values, const Monomial& m, std::int64_t r);

TrustWindow shrink(const TrustWindow& w, std::int64_t r);
Page turn_page(const Page& page, const DiffRule& rule);
Page turn_page_serial(const Page& page, const DiffRule& rule);
// Relabel to a later page index across lengths with no differentials.
Page advance(const Page& page, std::int64_t r);

struct CheckReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::string summary() const;
};

CheckReport well_definedness_check(const Page& page, const DiffRule& rule);
CheckReport compare_pages(const Page& computed, const Page& closed);
bool pages_identical(const Page& a, const Page& b);

}  // namespace fpss
