#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpss/graded_algebra.hpp"
#include "fpss/tate_instances.hpp"

namespace fpss {

// Monomials of the S^1 Tate E^infinity term live in tate_ambient(p, 1), those of the mu2-inverted homotopy fixed
// point E^infinity term in hofix_ambient(p, 1); the u generator never occurs.

// G: t^{-i} t^{p^2 m} -> mu0^i mu2^{-m} for 0 < i < p, t^i -> mu2^{-i/p^2} when p^2 | i, keeping eb1, l2, t mu2.
Monomial g_image(Residue p, const Monomial& tate);
// E^infinity(R^h): invert t, so mu2^M (t mu2)^c -> t^{-M} (t mu2)^{c+M}; zero unless the result is a Tate class.
std::optional<Monomial> rh_image(Residue p, const Monomial& hofix);
// R_* on the Tate E^infinity basis, rh_image after g_image.
std::optional<Monomial> r_image(Residue p, const Monomial& tate);

// Level of a basis monomial: 0 for J = 0, 1 when p does not divide J, k when v_p(J) is 2k - 2 or 2k - 1, where J is
// the t exponent of the Tate monomial or of its preimage under G.
std::int64_t tate_level(Residue p, const Monomial& tate);
std::int64_t hofix_level(Residue p, const Monomial& hofix);

// Basis of each E^infinity term in total degree n, restricted to levels <= kmax (each degree is then finite).
std::vector<Monomial> s1_tate_basis(Residue p, std::int64_t n, std::int64_t kmax);
std::vector<Monomial> s1_hofix_basis(Residue p, std::int64_t n, std::int64_t kmax);

// Least level for which every degree in lo..hi sees the full B_k and C_k, plus one so that a tower step beyond it
// is visible.
std::int64_t default_level(Residue p, std::int64_t lo, std::int64_t hi);

struct RhReport {
  bool pass = true;
  std::int64_t kmax = 0;
  // Source monomials examined under clauses (a), (b), (c), (d).
  std::array<std::size_t, 4> checked{};
  // Target monomials confirmed to be hit under (b) and (c).
  std::size_t targets_hit = 0;
  std::string witness;
};
// Requires p >= 5 and lo > 2p - 2. kmax = 0 selects default_level.
RhReport rh_map_check(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t kmax = 0);

struct SummandDecomposition {
  Residue p = 0;
  std::int64_t lo = 0, hi = -1, kmax = 0;
  std::vector<Monomial> A, D;
  std::map<std::int64_t, std::vector<Monomial>> B, C;  // keyed by k >= 2
  std::size_t size() const;
};
// Throws std::logic_error naming the monomial when a basis element falls in no part or in two parts.
SummandDecomposition tf_decompose(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t kmax = 0);

struct FixedPointReport {
  bool pass = true;
  PoincareSeries ker, cok;
  // Least k from which every tower step B_{k+1} -> B_k and C_{k+1} -> C_k is bijective in the window.
  std::int64_t stable_level = 0;
  std::int64_t kmax = 0;
  std::string failure;
};
// ker(R - 1) = A + lim B_k + lim C_k and cok(R - 1) = A, with the limits read off after stabilization and every
// tower step checked to be surjective.
FixedPointReport r_fixed_points(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t kmax = 0);

struct PvGenerator {
  std::string label;
  std::int64_t degree = 0;
  std::int64_t height = 0;  // 0 for a free generator, else the number of v2 powers present
  int row = 0;
};

struct PvModule {
  std::string id;
  Residue p = 0;
  std::int64_t v2_degree = 0;
  std::vector<PvGenerator> generators;
  bool conditional = false;

  std::size_t rank() const;
  // Even-degree generators minus odd-degree generators.
  std::int64_t euler() const;
  PoincareSeries series(std::int64_t lo, std::int64_t hi) const;
  // Generators per residue class of degree mod v2_degree: the dimensions after inverting v2.
  std::vector<std::int64_t> localized() const;
};

PvModule tc_presentation(Residue p);
PvModule k_presentation(Residue p);
// Stated under the hypothesis that dlog v1 exists in degree 1; carries conditional = true.
PvModule k_lp_presentation(Residue p);
// V(1)_* TC(Z/p; p) = E(del, eb1), the model in degrees <= 2p - 2.
PoincareSeries low_degree_tc_series(Residue p, std::int64_t lo, std::int64_t hi);

struct SeriesReport {
  bool pass = true;
  std::optional<std::int64_t> failing_degree;
  std::int64_t expected = 0, actual = 0;
  std::string detail;
};
// dim TC_n from the presentation against dim ker_n + dim cok_{n+1}, or the low-degree model for n <= 2p - 2.
SeriesReport tc_exactness_check(Residue p, std::int64_t lo, std::int64_t hi);
SeriesReport tc_exactness_check(const PvModule& tc, std::int64_t lo, std::int64_t hi);
// dim TC_n = dim K_n + dim (Sigma^{-1} E(eb1))_n.
SeriesReport k_tc_check(Residue p, std::int64_t lo, std::int64_t hi);

struct KLpReport {
  bool pass = true;
  bool localized_equal = false;
  std::size_t rank = 0;
  std::int64_t euler = 0;
  PoincareSeries kzp;  // V(1)_* K(Z/p) = E(eb1), recorded as input
  std::string detail;
};
KLpReport k_lp_checks(Residue p);

nlohmann::ordered_json to_json(const PvModule& m);

}  // namespace fpss
