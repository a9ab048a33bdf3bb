#pragma once

// Arithmetic progressions in piecewise syndetic sets.
//
// AP_k(A) = {x ∈ A | ∃y: x + iy ∈ A for i = 1..k}.
//
// claim_find_ap runs the induction of the progression claim: for B with
// B - ℓ in an ultrafilter U extending a maximal TIF, B_U = {n | B - n ∈ U}
// contains k+1 terms of a progression. Progressions here always carry terms
// i = 0..k (Progression::length = k); AP_k's "i = 1..k" view is the same
// progression with its first term dropped.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pws/algebra.hpp"
#include "pws/combinatorics.hpp"
#include "pws/epset.hpp"
#include "pws/filters.hpp"
#include "pws/progression.hpp"
#include "pws/windowset.hpp"

namespace pws {

EpSet ap_k(const EpSet& a, Nat k);

/// Least gap y with x + iy ∈ A for i = 1..k, or nullopt when x ∉ AP_k(A).
std::optional<Nat> ap_witness_gap(const EpSet& a, Nat k, Nat x);

/// Brute force on 1..horizon: x ∈ A and some y has x + iy ∈ A ∩ [1, horizon]
/// for i = 1..k.
WindowSet oracle_ap_k(const EpSet& a, Nat k, std::size_t horizon);

struct ClaimRound;

/// One application of the induction hypothesis: `terms` consecutive terms
/// q + iy (i = 1..terms) in set_U with q >= floor + margin * y.
struct ClaimTrace {
  EpSet set;               // B at this level
  Nat terms = 0;
  Nat floor = 0;
  Nat margin = 0;
  EpSet b_u;               // B_U
  std::vector<Nat> cover;  // F: ∪ (B_U - floor - x) = ℕ over x ∈ F, 0 ∈ F
  std::vector<ClaimRound> rounds;
  std::optional<std::pair<std::size_t, std::size_t>> repeat;  // (m, n), x_m = x_n
  Nat shift = 0;           // q
  Nat gap = 0;             // y
};

struct ClaimRound {
  Nat shift = 0;  // q_j from the hypothesis on the previous set
  Nat gap = 0;    // y_j
  Nat pick = 0;   // x_j ∈ F, least with q_j + x_j ∈ B_U
  std::optional<EpSet> next;  // B_j; absent on the repeat round
  std::vector<ClaimTrace> inner;  // the hypothesis call (one entry)
};

struct ClaimResult {
  /// Terms t (i = 0..k) relative to ℓ: B - ℓ - t ∈ U for each.
  Progression progression;
  ClaimTrace trace;
  std::size_t hypothesis_calls = 0;
};

/// Requires U to be an ultrafilter with B - ℓ ∈ U. k = 0 gives one term.
ClaimResult claim_find_ap(const StagedFilter& u, const EpSet& b, Nat ell, Nat k);

/// Total rounds in a trace, all levels.
std::size_t count_rounds(const ClaimTrace& trace);

struct TheoremOptions {
  Nat stages = 200;
  /// Window for the AP_k oracle; 0 selects a + 8(k+2)p.
  std::size_t oracle_horizon = 0;
};

struct TheoremEvidence {
  EpSet set;
  Nat k = 0;
  std::vector<Nat> witness;   // n_1 < ... < n_m with T = ∪ (A - n_i) thick
  EpSet thick_union;          // T
  std::shared_ptr<const SetAlgebra> algebra;
  std::shared_ptr<const StagedFilter> tif;          // M
  std::shared_ptr<const StagedFilter> ultrafilter;  // U, extends M
  bool t_in_m = false;
  bool t_in_u = false;
  Nat chosen_shift = 0;       // n_j with A - n_j ∈ U
  ClaimResult claim;
  bool terms_verified = false;
  EpSet meet;                 // ∩_{i=0..k} (A - n_j - t_0 - iy)
  bool meet_in_u = false;
  bool meet_contained = false;  // meet ⊆ AP_k(A) - n_j - t_0
  EpSet apk;
  bool apk_pws = false;
  std::size_t oracle_horizon = 0;
  bool oracle_agrees = false;   // on 1..a+3p
  bool oracle_pws = false;      // every length-p block of the tail window meets the oracle set

  bool verdict() const noexcept {
    return t_in_m && t_in_u && terms_verified && meet_in_u && meet_contained && apk_pws &&
           oracle_agrees && oracle_pws;
  }
};

/// Runs the proof that AP_k(A) is piecewise syndetic for piecewise syndetic A.
TheoremEvidence theorem_main(const EpSet& a, Nat k, const TheoremOptions& options = {});

struct ColoringEvidence {
  RamseyPiece ramsey;
  TheoremEvidence theorem;
};

/// pieces must partition ℕ.
ColoringEvidence corollary_coloring(std::span<const EpSet> pieces, Nat k,
                                    const TheoremOptions& options = {});

/// coloring[i] is the color of i+1. Looks for `terms` equally spaced
/// positions with one color.
bool has_monochromatic_ap(std::span<const int> coloring, std::size_t terms);

/// Some coloring of [1, n] with `colors` colors and no monochromatic
/// `terms`-term progression (exhaustive; small n only).
std::optional<std::vector<int>> ap_free_coloring(std::size_t n, int colors, std::size_t terms);

/// Least n such that every coloring of [1, n] has a monochromatic
/// `terms`-term progression; searched up to `limit`.
std::optional<std::size_t> van_der_waerden_number(int colors, std::size_t terms,
                                                  std::size_t limit);

}  // namespace pws
