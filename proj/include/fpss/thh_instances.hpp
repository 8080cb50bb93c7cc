#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpss/graded_algebra.hpp"
#include "fpss/spectral_sequence.hpp"
#include "fpss/steenrod_comodule.hpp"

namespace fpss {

// Bokstedt spectral sequence E^2(B) = H_*(B) (x) E(sxib_k) (x) Gamma(staub_k), generators in
// bidegree (0, |x|) for H_*(B) and (1, |x|) for the suspensions.
AmbientPtr bokstedt_ambient(RingId ring, Residue p, std::int64_t cap);
// d^{p-1}(gamma_j staub_k) = sxib_{k+1} gamma_{j-p} staub_k, extended over the other factors.
DiffRule bokstedt_rule(const AmbientPtr& ambient);
// Membership in the closed form of E^infinity: divided powers below p, surviving sxib_k only.
MonomialPredicate bokstedt_einf_member(RingId ring, const AmbientPtr& ambient);

// Upper bound on the number of monomials a Bokstedt page may hold.
inline constexpr std::int64_t kBokstedtMonomialBudget = 4'000'000;

// Throws std::length_error beyond the monomial budget and std::invalid_argument for p < 3.
Page bokstedt_e2(RingId ring, Residue p, std::int64_t lo, std::int64_t hi);

struct BokstedtRun {
  Page e2;
  Page einf;
  Page closed;
  CheckReport report;
};
BokstedtRun bokstedt_run(RingId ring, Residue p, std::int64_t lo, std::int64_t hi);

// Normalized Hochschild complex C_n = A (x) Abar^{(x) n}, graded by n plus internal total degree.
class HochschildComplex {
 public:
  // Throws std::invalid_argument for generators of total degree < 1 or of Laurent kind.
  HochschildComplex(const Algebra& alg, std::int64_t max_total);

  const Algebra& algebra() const { return alg_; }
  std::int64_t max_total() const { return max_total_; }
  // Chains of length n and internal degree d, as tuples of monomial ids.
  const std::vector<std::vector<std::uint32_t>>& chains(std::int64_t n, std::int64_t d) const;
  // b: C_{n,d} -> C_{n-1,d}; row i is the image of chain i.
  SparseMatrix boundary(std::int64_t n, std::int64_t d) const;
  PoincareSeries homology() const;

 private:
  Algebra alg_;
  std::int64_t max_total_;
  std::vector<Monomial> mons_;
  std::vector<std::int64_t> deg_;
  std::map<Monomial, std::uint32_t> ids_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::vector<std::uint32_t>>> chains_;
};

PoincareSeries hh_bruteforce(const Algebra& alg, std::int64_t max_total);

// A graded vector space given as the filtered monomial basis of an algebra, generators at s = 0.
struct Presentation {
  std::string id;
  Algebra alg;
  MonomialFilter filter;

  PoincareSeries series(std::int64_t lo, std::int64_t hi) const;
  std::vector<Monomial> basis(std::int64_t degree) const;
};

// V(1)_* THH(B). Throws std::invalid_argument for p < 5.
Presentation v1_thh_presentation(RingId ring, Residue p);
// H_*(THH(B)) with every generator of degree at most cap.
Presentation thh_homology_presentation(RingId ring, Residue p, std::int64_t cap);
// H_*(V(1)) = E(tau0, tau1).
Presentation v1_homology_presentation(Residue p);

struct IdentityReport {
  bool pass = true;
  std::int64_t failing_degree = -1;
  std::int64_t lhs_value = 0;
  std::int64_t rhs_value = 0;
  PoincareSeries lhs;
  PoincareSeries rhs;
};
// PS(E(tau0,tau1)) PS(H_* THH(B)) = PS(A_*) PS(V(1)_* THH(B)) up to degree N.
IdentityReport poincare_identity_check(RingId ring, Residue p, std::int64_t N);

}  // namespace fpss
