#pragma once

// Finite windows {1..H} of a subset of ℕ: the brute-force substrate every
// decision procedure is checked against. Verdicts computed here are only
// "true up to the horizon".

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pws/epset.hpp"
#include "pws/progression.hpp"

namespace pws {

/// Largest horizon materialize() will build (default 2^24).
std::size_t horizon_cap() noexcept;
void set_horizon_cap(std::size_t cap);

class WindowSet {
 public:
  explicit WindowSet(BitWord bits);
  /// From a bit string, position 1 first ("101010" = odd numbers up to 6).
  static WindowSet from_string(std::string_view bits);

  std::size_t horizon() const noexcept { return bits_.size(); }
  const BitWord& bits() const noexcept { return bits_; }

  /// Throws HorizonError for n = 0 or n > horizon.
  bool contains(Nat n) const;

  friend bool operator==(const WindowSet&, const WindowSet&) = default;

 private:
  BitWord bits_;
};

std::string to_string(const WindowSet& w);

WindowSet materialize(const EpSet& s, std::size_t horizon);

/// Window of W - n: positions 1..H-n.
WindowSet shift_left(const WindowSet& w, std::size_t n);
/// Union of two windows truncated to the shorter horizon.
WindowSet unite(const WindowSet& a, const WindowSet& b);

/// Some run of `length` consecutive members lies inside 1..H.
bool oracle_thick(const WindowSet& w, std::size_t length);

/// Least g such that every length-g subinterval of [1, H] meets W; nullopt when W is empty.
std::optional<Nat> oracle_gap_bound(const WindowSet& w);

/// Lexicographically least (x, y) with x, x+y, ..., x+k*y all in W.
std::optional<Progression> oracle_find_ap(const WindowSet& w, Nat k);

}  // namespace pws
