#pragma once

// Eventually periodic subsets of ℕ = {1, 2, 3, ...}.
//
// A set S is stored as a preperiod word w of length a and a period word v of
// length p >= 1:
//
//   n <= a  :  n ∈ S  <=>  w[n-1]
//   n >  a  :  n ∈ S  <=>  v[(n-a-1) mod p]
//
// Every EpSet is kept in canonical form (v primitive, a minimal), so two
// EpSets denote the same subset of ℕ iff they compare equal.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pws/error.hpp"

namespace pws {

using BitWord = std::vector<bool>;

/// Largest common period any binary operation may build (default 2^16).
std::size_t lcm_cap() noexcept;
void set_lcm_cap(std::size_t cap);

class EpSet {
 public:
  /// The empty set ⟨a=0, p=1, v=0⟩.
  EpSet();

  /// Canonicalizes. Throws PreconditionError if the period word is empty.
  EpSet(BitWord preperiod, BitWord period);

  static EpSet empty();
  static EpSet naturals();
  /// {n ∈ ℕ | n ≡ r (mod m)}, m >= 1.
  static EpSet residue(Nat r, Nat m);
  /// Finite set; zeros are ignored since they are not in ℕ.
  static EpSet finite(std::span<const Nat> elements);
  static EpSet finite(std::initializer_list<Nat> elements);
  /// {lo, ..., hi}; empty when lo > hi.
  static EpSet interval(Nat lo, Nat hi);
  /// Purely periodic set from a bit string such as "10" (odd numbers).
  static EpSet periodic(std::string_view period_bits);

  std::size_t preperiod_len() const noexcept { return pre_.size(); }
  std::size_t period_len() const noexcept { return per_.size(); }
  const BitWord& preperiod() const noexcept { return pre_; }
  const BitWord& period() const noexcept { return per_; }

  /// n ∈ S. Always false for n = 0.
  bool contains(Nat n) const noexcept;

  /// Bits for positions 1..horizon.
  BitWord prefix(std::size_t horizon) const;

  friend bool operator==(const EpSet&, const EpSet&) = default;

 private:
  void canonicalize();

  BitWord pre_;
  BitWord per_;
};

/// Leftward shift S - n = {m ∈ ℕ | m + n ∈ S}.
EpSet shift_left(const EpSet& s, Nat n);

EpSet complement(const EpSet& s);
EpSet unite(const EpSet& a, const EpSet& b);
EpSet intersect(const EpSet& a, const EpSet& b);
/// a ∖ b
EpSet difference(const EpSet& a, const EpSet& b);

bool is_empty(const EpSet& s) noexcept;
bool is_finite(const EpSet& s) noexcept;
bool is_cofinite(const EpSet& s) noexcept;
bool is_subset(const EpSet& a, const EpSet& b);

/// The purely periodic set whose period word is the AND of every rotation
/// of s's period word: ℕ when s is cofinite, ∅ otherwise.
EpSet rotation_and(const EpSet& s);

std::optional<Nat> min_element(const EpSet& s) noexcept;
/// Largest element of a finite, nonempty set.
std::optional<Nat> max_element(const EpSet& s) noexcept;
/// Elements of a finite set in increasing order. Throws PreconditionError otherwise.
std::vector<Nat> elements(const EpSet& s);

/// Re-expresses s with preperiod length `pre` >= a and period `per` (a multiple
/// of p). The returned words are not canonical.
std::pair<BitWord, BitWord> expand(const EpSet& s, std::size_t pre, std::size_t per);

/// `ep(a=<int>;w=<bits>;per=<bits>)`
std::string to_string(const EpSet& s);
/// Parses the exact textual form emitted by to_string (w may be empty).
EpSet parse_ep(std::string_view text);
std::ostream& operator<<(std::ostream& os, const EpSet& s);

std::string bits_to_string(const BitWord& bits);

}  // namespace pws
