#pragma once

// Thick, syndetic and piecewise syndetic sets, decided exactly on EpSets.
//
// On eventually periodic sets the three notions collapse:
//
//  * thick <=> cofinite. If the period word has a 0, every run of members
//    past the preperiod is shorter than p, so runs are bounded by a + p.
//    A cofinite set contains [a+1, ∞).
//  * syndetic <=> piecewise syndetic <=> infinite. An infinite EpSet has a 1
//    in its period word, so every interval of length a + p meets it, and the
//    shifts 0..p-1 of it cover [a+1, ∞). A finite set has an unbounded final
//    gap, and any finite union of its shifts is finite, hence not thick.
//
// Witness-producing operations return the minimal-cardinality witness that
// is lexicographically least among those of that size.

#include <cstddef>
#include <span>
#include <vector>

#include "pws/epset.hpp"
#include "pws/windowset.hpp"

namespace pws {

bool is_thick(const EpSet& s) noexcept;
bool is_syndetic(const EpSet& s) noexcept;
bool is_piecewise_syndetic(const EpSet& s) noexcept;

/// Least g such that every length-g interval of ℕ meets s. Throws
/// PreconditionError unless s is syndetic.
Nat gap_bound(const EpSet& s);

/// Shifts n_1 < ... < n_k with ∪ (s - n_i) cofinite. Throws unless s is
/// piecewise syndetic.
std::vector<Nat> pws_witness(const EpSet& s);

/// Shifts n_1 < ... < n_k with ∪ (s - n_i) = ℕ. Throws unless s is syndetic.
std::vector<Nat> syndetic_cover(const EpSet& s);

/// ∪ (s - n) over the given shifts.
EpSet union_of_shifts(const EpSet& s, std::span<const Nat> shifts);
/// ∩ (s - n) over the given shifts (ℕ for an empty list).
EpSet intersection_of_shifts(const EpSet& s, std::span<const Nat> shifts);

struct Interval {
  Nat start = 1;
  Nat length = 0;

  Nat last() const noexcept { return start + length - 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Every length-k subinterval of `interval` meets `piece` (literal scan).
/// Throws HorizonError if the interval leaves the window.
bool is_k_good(const WindowSet& piece, Interval interval, Nat k);

struct GoodIntervalReport {
  Nat k = 1;                       // the goodness parameter h
  std::vector<Interval> intervals; // k-good for the piece, strictly growing lengths
  std::size_t piece = 0;
};

struct RamseyPiece {
  std::size_t index = 0;
  GoodIntervalReport report;
};

/// Throws PreconditionError unless the pieces are pairwise disjoint with union `whole`.
void check_partition(const EpSet& whole, std::span<const EpSet> pieces);

/// Least index of a piecewise syndetic piece of a partition of a piecewise
/// syndetic set, with a family of h-good intervals for it generated up to
/// `horizon` (0 selects the default 16 * (a + p) of the piece).
RamseyPiece ramsey_piece(const EpSet& whole, std::span<const EpSet> pieces,
                         std::size_t horizon = 0);

}  // namespace pws
