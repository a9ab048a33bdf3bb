#include "pws/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace pws {

namespace {

// Fixed-size bit rows for the cover searches.
struct Row {
  std::vector<std::uint64_t> words;

  explicit Row(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  Row& operator|=(const Row& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
    return *this;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
};

constexpr std::size_t kCoverNodeBudget = 50'000'000;

// Minimal-cardinality, lexicographically least set of candidate indices whose
// rows cover all `universe` bits. The full candidate list must cover.
class CoverSearch {
 public:
  CoverSearch(std::vector<Row> rows, std::size_t universe)
      : rows_(std::move(rows)), universe_(universe), suffix_(rows_.size() + 1, Row(universe)) {
    for (std::size_t i = rows_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i] |= rows_[i];
    }
    for (const auto& r : rows_) widest_ = std::max(widest_, r.count());
  }

  std::vector<Nat> run() {
    for (std::size_t k = 1; k <= rows_.size(); ++k) {
      chosen_.clear();
      if (dfs(0, k, Row(universe_))) return chosen_;
    }
    throw PreconditionError("no cover exists among the candidate shifts");
  }

 private:
  bool dfs(std::size_t from, std::size_t remaining, const Row& covered) {
    if (++nodes_ > kCoverNodeBudget) throw ResourceError("cover search exceeded its node budget");
    const std::size_t have = covered.count();
    if (have == universe_) return true;
    if (remaining == 0) return false;
    if (universe_ - have > remaining * widest_) return false;
    Row reach = covered;
    reach |= suffix_[from];
    if (reach.count() != universe_) return false;
    for (std::size_t i = from; i < rows_.size(); ++i) {
      Row next = covered;
      next |= rows_[i];
      chosen_.push_back(i);
      if (dfs(i + 1, remaining - 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Row> rows_;
  std::size_t universe_;
  std::vector<Row> suffix_;
  std::size_t widest_ = 0;
  std::vector<Nat> chosen_;
  std::size_t nodes_ = 0;
};

}  // namespace

bool is_thick(const EpSet& s) noexcept { return is_cofinite(s); }

bool is_syndetic(const EpSet& s) noexcept { return !is_finite(s); }

bool is_piecewise_syndetic(const EpSet& s) noexcept { return !is_finite(s); }

Nat gap_bound(const EpSet& s) {
  if (!is_syndetic(s)) throw PreconditionError("gap_bound: set is not syndetic");
  // Every run of non-members either starts in 1..a+p or repeats one that
  // does, and none is longer than a + p - 1, so scanning 1..a+2p sees them all.
  const Nat span = s.preperiod_len() + 2 * s.period_len();
  Nat run = 0, longest = 0;
  for (Nat n = 1; n <= span; ++n) {
    if (s.contains(n)) {
      run = 0;
    } else {
      longest = std::max(longest, ++run);
    }
  }
  return longest + 1;
}

std::vector<Nat> pws_witness(const EpSet& s) {
  if (!is_piecewise_syndetic(s)) throw PreconditionError("pws_witness: set is finite");
  // Only the tails matter, and the tail of s - n depends on n mod p.
  const std::size_t a = s.preperiod_len();
  const std::size_t p = s.period_len();
  std::vector<Row> rows;
  for (std::size_t n = 0; n < p; ++n) {
    Row r(p);
    for (std::size_t j = 0; j < p; ++j) {
      if (s.contains(a + 1 + j + n)) r.set(j);
    }
    rows.push_back(std::move(r));
  }
  return CoverSearch(std::move(rows), p).run();
}

std::vector<Nat> syndetic_cover(const EpSet& s) {
  if (!is_syndetic(s)) throw PreconditionError("syndetic_cover: set is not syndetic");
  // Shifts n >= a give purely periodic sets that repeat with period p, so
  // candidates 0..a+p-1 reach every distinct shift. All of them share
  // preperiod <= a and period p, so covering positions 1..a+p covers ℕ.
  const std::size_t a = s.preperiod_len();
  const std::size_t p = s.period_len();
  const std::size_t universe = a + p;
  std::vector<Row> rows;
  for (std::size_t n = 0; n < a + p; ++n) {
    Row r(universe);
    for (std::size_t m = 1; m <= universe; ++m) {
      if (s.contains(m + n)) r.set(m - 1);
    }
    rows.push_back(std::move(r));
  }
  return CoverSearch(std::move(rows), universe).run();
}

EpSet union_of_shifts(const EpSet& s, std::span<const Nat> shifts) {
  EpSet acc = EpSet::empty();
  for (Nat n : shifts) acc = unite(acc, shift_left(s, n));
  return acc;
}

EpSet intersection_of_shifts(const EpSet& s, std::span<const Nat> shifts) {
  EpSet acc = EpSet::naturals();
  for (Nat n : shifts) acc = intersect(acc, shift_left(s, n));
  return acc;
}

bool is_k_good(const WindowSet& piece, Interval interval, Nat k) {
  if (k == 0) throw PreconditionError("k must be positive");
  if (interval.length == 0) return true;
  if (interval.start == 0 || interval.last() > piece.horizon()) {
    throw HorizonError("interval leaves the window");
  }
  if (interval.length < k) return true;
  // Sliding count of members in the current length-k subinterval.
  Nat inside = 0;
  for (Nat n = interval.start; n <= interval.last(); ++n) {
    inside += piece.contains(n) ? 1 : 0;
    if (n >= interval.start + k) inside -= piece.contains(n - k) ? 1 : 0;
    if (n + 1 >= interval.start + k && inside == 0) return false;
  }
  return true;
}

void check_partition(const EpSet& whole, std::span<const EpSet> pieces) {
  if (pieces.empty()) throw PreconditionError("partition has no pieces");
  EpSet acc = EpSet::empty();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!is_empty(intersect(acc, pieces[i]))) {
      throw PreconditionError("piece " + std::to_string(i + 1) + " overlaps an earlier piece");
    }
    acc = unite(acc, pieces[i]);
  }
  if (!(acc == whole)) throw PreconditionError("pieces do not cover the partitioned set");
}

RamseyPiece ramsey_piece(const EpSet& whole, std::span<const EpSet> pieces, std::size_t horizon) {
  if (!is_piecewise_syndetic(whole)) {
    throw PreconditionError("ramsey_piece: partitioned set is not piecewise syndetic");
  }
  check_partition(whole, pieces);
  std::size_t index = pieces.size();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (is_piecewise_syndetic(pieces[i])) {
      index = i;
      break;
    }
  }
  if (index == pieces.size()) {
    // Unreachable for a valid partition of an infinite set.
    throw Error("ramsey_piece: no piece is piecewise syndetic");
  }

  const EpSet& piece = pieces[index];
  const std::size_t a = piece.preperiod_len();
  const std::size_t p = piece.period_len();
  if (horizon == 0) horizon = 16 * (a + p);

  RamseyPiece out;
  out.index = index;
  out.report.piece = index;
  // Past the preperiod the piece has gaps shorter than its tail gap bound h,
  // so every interval there is h-good.
  out.report.k = gap_bound(shift_left(piece, a));
  const WindowSet window = materialize(piece, horizon);
  for (Nat len = out.report.k; a + len <= horizon; len *= 2) {
    Interval iv{a + 1, len};
    if (!is_k_good(window, iv, out.report.k)) {
      throw Error("ramsey_piece: generated interval failed its goodness scan");
    }
    out.report.intervals.push_back(iv);
  }
  return out;
}

}  // namespace pws
