#pragma once

// The countable algebra generated by the shift families {R - n | n ∈ ℕ0} of
// finitely many roots R_1, ..., R_r, enumerated as
//
//   element(n) = ∪_{c ∈ F_n} clause(c),   F_n = positions of 1-bits of n
//   clause(c)  = ∩_{i ∈ G} generator(i)^{±}
//
// where c - 1 = pair(x, y) under the Cantor pairing, G = F_{x+1} and the
// signs are the low |G| bits of y (bit set = complemented literal, bit b
// belongs to the b-th smallest index of G).
//
// Generators run over (root j, shift n) in diagonal order: diagonal
// s = 0, 1, 2, ... lists (1, s), (2, s-1), ..., keeping only j <= r. With one
// root, generator(i) = R - (i-1).
//
// Cantor pairing: pair(x, y) = (x+y)(x+y+1)/2 + y. Inverse: with
// w = floor((sqrt(8z+1) - 1)/2) and t = w(w+1)/2, y = z - t and x = w - y.
//
// The enumeration is surjective with repetitions. Because every root is
// eventually periodic, the algebra itself is finite: its atoms are the
// classes of positions m that no shift of any root separates.

#include <cstddef>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pws/epset.hpp"

namespace pws {

Nat cantor_pair(Nat x, Nat y);
std::pair<Nat, Nat> cantor_unpair(Nat z);

/// F_n = {k | bit k-1 of n is set}, increasing.
std::vector<Nat> finite_set_of_index(Nat n);

struct Clause {
  std::vector<Nat> generators;  // increasing generator indices
  std::vector<bool> negated;    // parallel to generators
};

Clause decode_clause(Nat c);

struct GeneratorIndex {
  std::size_t root = 1;  // 1-based
  Nat shift = 0;
  friend bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;
};

GeneratorIndex decode_generator(Nat i, std::size_t roots);
Nat encode_generator(GeneratorIndex g, std::size_t roots);

class SetAlgebra {
 public:
  /// Throws PreconditionError when `roots` is empty.
  explicit SetAlgebra(std::vector<EpSet> roots);

  SetAlgebra(const SetAlgebra&) = delete;
  SetAlgebra& operator=(const SetAlgebra&) = delete;

  const std::vector<EpSet>& roots() const noexcept { return roots_; }

  EpSet generator(Nat i) const;
  EpSet clause(Nat c) const;
  /// Memoized; safe to call concurrently.
  EpSet element(Nat n) const;
  /// Least n <= bound with element(n) == s.
  std::optional<Nat> index_of(const EpSet& s, Nat bound) const;

  /// Atoms ordered by least element.
  const std::vector<EpSet>& atoms() const noexcept { return atoms_; }
  /// s is a union of atoms.
  bool contains(const EpSet& s) const;

 private:
  std::vector<EpSet> roots_;
  std::vector<EpSet> atoms_;
  std::size_t atom_pre_ = 0;
  std::size_t atom_per_ = 1;
  std::vector<std::size_t> atom_of_position_;  // positions 1..pre+per

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Nat, EpSet> cache_;
};

}  // namespace pws
