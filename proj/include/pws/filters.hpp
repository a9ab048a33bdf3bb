#pragma once

// Ultrafilters and maximal translation invariant filters, built stage by
// stage over an enumeration of a countable algebra of sets.
//
// A family is given by shift roots (standing for every shift R - k, k >= 0)
// and single sets. It has the finite intersection property iff
//
//   every root is cofinite, and (∩ singles) ∩ (c*, ∞) ≠ ∅,
//
// where c* is the largest number missing from some root (0 when all roots are
// ℕ). Finitely many shifts of cofinite roots intersect in a cofinite set and
// every m <= c* is removed by one shift, so that intersection is exactly the
// "core" of the family: every finite subfamily contains it, and a superset
// of some finite subfamily's intersection contains it too.
//
// Stages 1..N test element(n) of the algebra literally. The algebra of an
// eventually periodic root family is finite, so each construction then runs
// a closing sequence (atoms for an ultrafilter, complements of atoms for a
// maximal TIF). Prefix plus closing sequence plus the remaining sets is an
// enumeration of the algebra, and after the closing sequence every decision
// is forced: the ultrafilter is the set of algebra members containing one
// atom, the maximal TIF the cofinite algebra members.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pws/algebra.hpp"
#include "pws/epset.hpp"
#include "pws/windowset.hpp"

namespace pws {

struct FipFamily {
  std::vector<EpSet> shift_roots;
  std::vector<EpSet> singles;
};

/// One concrete set of a finite subfamily.
struct FamilyMember {
  enum class Source { root, single };
  Source source = Source::single;
  std::size_t index = 0;  // into shift_roots or singles
  Nat shift = 0;
  EpSet set;
};

struct FipCertificate {
  bool has_fip = false;
  /// Nonempty when has_fip: contained in every finite intersection.
  EpSet core;
  /// When !has_fip: a finite subfamily with empty intersection.
  std::vector<FamilyMember> counterexample;
};

FipCertificate fip(const FipFamily& family);

/// ∩ of the counterexample's sets is empty (ℕ intersection of nothing is not).
bool counterexample_is_empty(const FipCertificate& cert);

std::string describe(const FipCertificate& cert);

enum class FilterKind { ultrafilter, maximal_tif };

struct StageRecord {
  Nat stage = 0;
  EpSet set;
  bool accepted = false;
  bool closing = false;  // part of the closing sequence, not element(stage)
  FipCertificate certificate;
};

class StagedFilter {
 public:
  StagedFilter(FilterKind kind, std::shared_ptr<const SetAlgebra> algebra, FipFamily base);

  FilterKind kind() const noexcept { return kind_; }
  const SetAlgebra& algebra() const noexcept { return *algebra_; }
  std::shared_ptr<const SetAlgebra> algebra_ptr() const noexcept { return algebra_; }
  const FipFamily& base() const noexcept { return base_; }
  /// G_0 together with every accepted set (as singles or shift roots).
  const FipFamily& family() const noexcept { return family_; }
  const std::vector<StageRecord>& stages() const noexcept { return stages_; }
  std::size_t literal_stages() const noexcept { return literal_; }
  /// Intersection of every finite subfamily of family().
  const EpSet& core() const noexcept { return core_; }

  /// S belongs to the filter. Throws NotInAlgebraError unless S is in the algebra.
  bool member(const EpSet& s) const;

  // Construction steps, used by build_ultrafilter / build_maximal_tif.
  void run_literal_stages(Nat count);
  void run_closing_sequence();

 private:
  void offer(const EpSet& set, Nat stage, bool closing);

  FilterKind kind_;
  std::shared_ptr<const SetAlgebra> algebra_;
  FipFamily base_;
  FipFamily family_;
  std::vector<StageRecord> stages_;
  std::size_t literal_ = 0;
  EpSet core_;
};

/// Stage n accepts B_n iff family ∪ {B_n} has the FIP. Requires fip(base).
StagedFilter build_ultrafilter(std::shared_ptr<const SetAlgebra> algebra, FipFamily base,
                               Nat stages);

/// Stage n accepts B_n as a shift root iff family ∪ {B_n - k | k} has the
/// FIP. Requires fip(base), nonempty roots and no singles.
StagedFilter build_maximal_tif(std::shared_ptr<const SetAlgebra> algebra, FipFamily base,
                               Nat stages);

/// Window of B_U = {n | B - n ∈ U} on 1..horizon.
WindowSet b_sub_u(const StagedFilter& u, const EpSet& b, std::size_t horizon);

struct BSubU {
  EpSet set;               // B_U as a subset of ℕ
  bool zero = false;       // B - 0 = B ∈ U
  std::size_t horizon = 0; // membership evaluated on 1..horizon
  std::size_t verified_preperiod = 0;
  std::size_t verified_period = 0;
};

/// B_U as an EpSet, by periodicity detection with verified agreement on a
/// window of length at least b + 3q. Throws ResourceError when detection fails.
BSubU b_sub_u_ep(const StagedFilter& u, const EpSet& b);

struct SyndeticCheck {
  EpSet set;
  bool in_u = false;
  bool piecewise_syndetic = false;
  bool b_u_syndetic = false;
  Nat b_u_gap = 0;
  std::vector<Nat> cover;  // shifts n_i with ∪ (B - n_i) ∈ M
  bool cover_in_m = false;

  bool passed() const noexcept {
    return !in_u || (piecewise_syndetic && b_u_syndetic && cover_in_m);
  }
};

struct SyndeticReport {
  std::vector<SyndeticCheck> checks;
  std::size_t skipped = 0;  // sample members not in U
  bool passed() const noexcept;
};

/// For each sample member of U: B is piecewise syndetic, B_U is syndetic with
/// an explicit gap bound, and the shifts n_i extracted from the failure of
/// the FIP for M ∪ {B^c - n} give ∪ (B - n_i) ∈ M.
SyndeticReport verify_prop_syndetic(const StagedFilter& u, const StagedFilter& m,
                                    std::span<const EpSet> sample);

}  // namespace pws
