#pragma once

// The finite quotient ℕ / Pℕ: the algebra of unions of residue classes mod P.
// A set is a P-bit mask, bit r standing for the class {n | n ≡ r mod P}.
// Its ultrafilters are the P atoms; atom r is the family of masks with bit r.
// Every filter is principal (generated by one nonempty mask), the space is
// discrete, and shifting a set by one rotates its mask.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pws/epset.hpp"

namespace pws {

using ResidueMask = std::uint32_t;

constexpr std::size_t kQuotientBound = 8;

/// The union of the residue classes in `mask` as an EpSet.
EpSet residue_union(std::size_t modulus, ResidueMask mask);
/// Inverse of residue_union; throws PreconditionError if s is not such a union.
ResidueMask residue_mask(std::size_t modulus, const EpSet& s);

struct QuotientUltrafilter {
  std::size_t modulus = 1;
  std::size_t residue = 0;
  bool contains(ResidueMask a) const noexcept { return (a >> residue) & 1U; }
  friend bool operator==(const QuotientUltrafilter&, const QuotientUltrafilter&) = default;
};

/// W with A ∈ W ⇔ {n | A - n ∈ V} ∈ U for all 2^P sets A, found
/// exhaustively with EpSet shifts. Throws Error if it is not r + s mod P.
QuotientUltrafilter pseudosum(const QuotientUltrafilter& u, const QuotientUltrafilter& v);

/// Proper filter {A | A ⊇ generator}.
struct QuotientFilter {
  std::size_t modulus = 1;
  ResidueMask generator = 1;
  bool contains(ResidueMask a) const noexcept { return (a & generator) == generator; }
  friend bool operator==(const QuotientFilter&, const QuotientFilter&) = default;
};

/// All proper filters on the algebra mod P, by generator mask. Throws
/// PreconditionError for P = 0 or P > bound.
std::vector<QuotientFilter> enumerate_filters(std::size_t modulus, std::size_t bound = kQuotientBound);

/// Number of proper filters found by testing every family of masks for
/// upward and intersection closure (P <= 4).
std::size_t count_filters_brute_force(std::size_t modulus);

/// A ∈ F implies A - 1 ∈ F.
bool is_tif(const QuotientFilter& f);

/// Nonempty atom sets X (as masks) with U ⊕ V ∈ X for every atom U and V ∈ X.
std::vector<ResidueMask> enumerate_left_ideals(std::size_t modulus,
                                               std::size_t bound = kQuotientBound);

struct CorrespondenceReport {
  std::size_t modulus = 0;
  std::vector<std::vector<std::size_t>> sum_table;  // sum_table[r][s] = residue of r ⊕ s
  bool sum_is_addition = false;
  bool associative = false;
  std::size_t filters = 0;
  std::size_t tifs = 0;
  std::size_t left_ideals = 0;
  std::size_t minimal_left_ideals = 0;
  bool tif_gives_left_ideal = false;       // ℭ(F) is a left ideal for each TIF F
  bool left_ideal_gives_tif = false;       // 𝔉(X) is a TIF for each left ideal X
  bool closure_round_trip = false;         // ℭ(𝔉(X)) = X; closure is the identity here
  bool filter_round_trip = false;          // 𝔉(ℭ(F)) = F for every filter
  bool maximal_iff_minimal = false;        // maximal TIF ⇔ minimal left ideal
  bool k_is_everything = false;            // K = all atoms
  bool atom_extends_iff_in_k = false;      // atom extends a maximal TIF ⇔ atom ∈ K
  std::vector<std::size_t> k_atoms;

  bool passed() const noexcept {
    return sum_is_addition && associative && tif_gives_left_ideal && left_ideal_gives_tif &&
           closure_round_trip && filter_round_trip && maximal_iff_minimal && k_is_everything &&
           atom_extends_iff_in_k;
  }
};

CorrespondenceReport check_correspondence(std::size_t modulus, std::size_t bound = kQuotientBound);

}  // namespace pws
