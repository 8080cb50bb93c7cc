#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpss/spectral_sequence.hpp"

namespace fpss {

// Generator positions in the C_{p^n} Tate ambient
// E(u_n) (x) P(t^{+-1}) (x) F_p{2p module generators} (x) E(lambda2) (x) P(t mu2).
namespace tate_gen {
inline constexpr std::size_t u = 0, t = 1, e0 = 2, m0 = 3, eb1 = 4, l2 = 5, w = 6;
}
// Generator positions in the mu2-inverted homotopy fixed point ambient
// E(u_n) (x) F_p{2p module generators} (x) E(lambda2) (x) P(t mu2) (x) P(mu2^{+-1}).
namespace hofix_gen {
inline constexpr std::size_t u = 0, e0 = 1, m0 = 2, eb1 = 3, l2 = 4, w = 5, M = 6;
}

AmbientPtr tate_ambient(Residue p, std::int64_t n);
AmbientPtr hofix_ambient(Residue p, std::int64_t n);

struct ClosedForm {
  std::int64_t r = 2;
  std::string label;
  MonomialPredicate member;
};

// A spectral sequence given by its E^2 seed, its nonzero differentials in order, and the closed form of
// the page before the first differential and after each one.
struct SSInstance {
  std::string id;
  Residue p = 0;
  std::int64_t n = 0;
  AmbientPtr ambient;
  std::vector<DiffRule> script;
  std::vector<ClosedForm> closed_forms;  // closed_forms[i + 1] is the page after script[i]
};

// Throw std::invalid_argument unless p >= 5 is prime and n >= 1.
SSInstance cpn_tate_instance(Residue p, std::int64_t n);
SSInstance cpn_hofix_instance(Residue p, std::int64_t n);
// The n = 1 Tate sequence with its differentials and closed forms written out directly.
SSInstance cp_tate_instance(Residue p);

// Internal degree bound under which every truncation of the final pages is visible.
std::int64_t tate_band(Residue p, std::int64_t n);
std::int64_t hofix_band(Residue p, std::int64_t n, std::int64_t hi);

enum class RunMode {
  // Each step starts from the closed form of the previous page.
  Verification,
  // One E^2 seed carried through every step.
  Propagation,
};

struct PageCheck {
  std::string label;
  std::int64_t r = 0;
  CheckReport report;
};

struct RunReport {
  std::string id;
  bool pass = true;
  std::vector<PageCheck> checks;
  std::vector<Page> pages;  // computed page after each step, restricted to the target window
  std::string error;
};

// Compares the page after each differential with its closed form on total degrees lo..hi, t <= band.
// With last_page set, stops after the last page E^r with r <= last_page.
RunReport run_instance(const SSInstance& inst, std::int64_t lo, std::int64_t hi, std::int64_t band, RunMode mode,
                       std::optional<std::int64_t> last_page = std::nullopt);

// Same nonzero bidegrees, basis monomials, boundary subspaces and cycle subspaces, ignoring generator names.
bool pages_agree(const Page& a, const Page& b);

// Pages of the C_{p^n} and C_{p^{n+1}} runs for every r <= 2 rho(2n) + 1, compared after u_n -> u_{n+1}.
// Both runs must use the same mode and window.
struct RelabelReport {
  bool pass = true;
  std::size_t compared = 0;
  std::string failure;
};
RelabelReport relabel_agreement(const RunReport& small, const RunReport& large, Residue p, std::int64_t n);

// Closed forms of the S^1 Tate and mu2-inverted homotopy fixed point E^infinity terms, on the ambients with n
// (the u generator never occurs).
MonomialPredicate s1_tate_member(Residue p);
MonomialPredicate s1_hofix_member(Residue p);

// Least n for which the C_{p^n} Tate E^infinity has no room for t^{+-p^{2n}} or the P_{rho(2n-2)+1}(t mu2)
// truncation inside total degrees lo..hi and t <= band.
std::int64_t window_sufficient_n(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t band);

struct LimitReport {
  bool pass = true;
  std::int64_t n = 0;
  std::size_t compared = 0;
  std::optional<Bideg> first_disagreement;
  std::string witness;
};
// Compares the u-free part of the C_{p^n} Tate E^infinity closed form with the S^1 closed form.
LimitReport s1_limit_check(Residue p, std::int64_t n, std::int64_t lo, std::int64_t hi, std::int64_t band);

// Homotopy fixed point analogue, with internal degrees bounded by band.
std::int64_t hofix_window_sufficient_n(Residue p, std::int64_t lo, std::int64_t hi, std::int64_t band);
LimitReport s1_hofix_limit_check(Residue p, std::int64_t n, std::int64_t lo, std::int64_t hi, std::int64_t band);

struct LemmaReport {
  bool pass = true;
  std::size_t parameters = 0;  // values of j or i examined
  std::size_t candidates = 0;  // monomials enumerated
  std::string witness;
};
// For every j in [lo, hi] with v_p(j) = 2n - 2, no class of the mu2-inverted C_{p^n} E^infinity in the total
// degree of (t mu2)^{rho(2n-1)} mu2^j has lower filtration.
LemmaReport filtration_gap_check(Residue p, std::int64_t n, std::int64_t lo, std::int64_t hi);
// For every i in [lo, hi] with v_p(i) = 2n, the only odd monomial of E(u, eb1, l2) (x) P(t^{+-p^{2n}}, t mu2)
// one degree above z = (t mu2)^{rho(2n-1)} t^i that can hit z by a d^r, r >= 2 rho(2n) + 2, is
// t^{p^{2n+1} - p^{2n+2} + i} eb1.
LemmaReport unique_source_check(Residue p, std::int64_t n, std::int64_t lo, std::int64_t hi);

}  // namespace fpss
