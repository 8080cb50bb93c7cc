#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpss/graded_algebra.hpp"

namespace fpss {

// Conjugate generators xib<k> (degree 2(p^k - 1)) and taub<k> (degree 2p^k - 1) of the dual Steenrod
// algebra, all of total degree at most cap. Every generator sits in bidegree (0, degree).
Algebra dual_steenrod(Residue p, std::int64_t cap);

// Left tensor factor generators are renamed with this prefix inside the combined algebra.
inline constexpr const char* kLeftPrefix = "a.";

// Multiplicatively extended coaction x -> sum a' (x) x'' from a target algebra into
// A_* (x) target, realised as products in one algebra whose generators are those of A_* (prefixed)
// followed by those of the target, so that graded tensor signs come from the Koszul rule.
class CoactionTable {
 public:
  CoactionTable(Algebra astar, Algebra target, MonomialFilter target_filter = {});

  const Algebra& astar() const { return astar_; }
  const Algebra& target() const { return target_; }
  const Algebra& combined() const { return combined_; }

  Element left(const Element& a) const;
  Element right(const Element& x) const;
  Element left_gen(const std::string& name, std::int64_t exp = 1) const;
  Element right_gen(const std::string& name, std::int64_t exp = 1) const;

  void set(const std::string& gen, const Element& value);
  bool has(const std::string& gen) const;
  // Throws std::invalid_argument when a generator of x has no entry.
  Element coaction(const Element& x) const;
  Element coaction(const Monomial& m) const;
  const MonomialFilter& target_filter() const { return filter_; }
  // Applies the augmentation on the A_* side.
  Element counit_side(const Element& combined_elt) const;
  bool is_primitive(const Element& x) const;

 private:
  Algebra astar_;
  Algebra target_;
  Algebra combined_;
  MonomialFilter filter_;
  std::vector<std::optional<Element>> table_;
};

// psi(xib_k) = sum xib_i (x) xib_j^{p^i}; psi(taub_k) = 1 (x) taub_k + sum taub_i (x) xib_j^{p^i}.
CoactionTable steenrod_coproduct(Residue p, std::int64_t cap);
Element coproduct(const CoactionTable& psi, const Monomial& m);

// (psi (x) id) psi and (id (x) psi) psi agree on every A_* monomial up to the cap.
struct CoassociativityReport {
  bool pass = true;
  std::size_t checked = 0;
  std::string witness;
};
CoassociativityReport coassociativity_check(Residue p, std::int64_t cap);
// (augmentation (x) id) psi = id on every A_* monomial up to the cap.
CoassociativityReport counit_check(Residue p, std::int64_t cap);

enum class RingId { Zp, ZLocal, Ell, EllModP };
std::string ring_key(RingId r);
std::optional<RingId> parse_ring(const std::string& key);

// H_*(V(1)) (x) H_*(THH(B)) with its diagonal coaction, up to the degree cap.
// Target generators: tau0, tau1 of V(1), then the homology generators of THH(B).
CoactionTable v1_thh_coaction(RingId ring, Residue p, std::int64_t cap);

// The named classes of V(1)_* THH(B) as elements of H_*(V(1)) (x) H_*(THH(B)).
struct NamedClass {
  std::string name;
  Element value;  // in the target algebra of v1_thh_coaction
};
std::vector<NamedClass> named_classes(RingId ring, const CoactionTable& table);

struct PrimitivityReport {
  bool pass = true;
  std::vector<std::pair<std::string, bool>> results;
};
// Certifies epsilon0, epsilon1, lambda1, lambda2, mu0, mu1, mu2 and epsilonbar1 over their rings.
PrimitivityReport primitivity_suite(Residue p);

// Dimension of the comodule primitives of the target of the table in each total degree lo..hi.
PoincareSeries primitive_dimensions(const CoactionTable& table, std::int64_t lo, std::int64_t hi);

// The coefficient alpha in a lift y of taub0 (sigma taub0)^{p-1} to H_*(THH(l/p)), mapping to
// alpha taub1 + taub0 (sigma taub0)^{p-1} + beta xib1 taub0 in H_*(THH(Z/p)).
struct AlphaReport {
  Residue p = 0;
  // alpha for which some beta makes the suspension vanish modulo taub0 taub1 and xib1 sigma taub0.
  std::vector<Residue> suspension_admissible;
  // alpha for which the coaction of the lift matches the stated coaction of y.
  std::vector<Residue> coaction_consistent;
  // alpha for which 1 y + tau0 (sigma taub0)^{p-1} + c tau0 xib1 + d tau1 is primitive for some c, d,
  // when y is given the coaction of the alpha lift.
  std::vector<Residue> primitive_for_some_lift;
  // (c, d) making the same combination primitive under the stated coaction of y.
  std::vector<std::pair<Residue, Residue>> primitive_combinations;
  bool forced_minus_one() const;
};
AlphaReport alpha_forcing(Residue p);

}  // namespace fpss
