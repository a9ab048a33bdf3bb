#pragma once

// Brute-force FIP oracle shared by the unit and acceptance suites. Works on
// raw bit windows, never on EpSet operations.

#include <algorithm>
#include <numeric>
#include <set>

#include "gen.hpp"
#include "pws/filters.hpp"

namespace pws::testing {

struct FipOracle {
  bool whole_pool_nonempty = false;   // ∩ of every member with shifts <= bound
  bool small_empty_found = false;     // some subfamily of <= 4 members is empty
  std::size_t pool = 0;               // distinct member windows
};

inline FipOracle fip_oracle(const FipFamily& f, std::size_t max_members = 4) {
  std::size_t a = 0, l = 1;
  for (const auto* list : {&f.shift_roots, &f.singles}) {
    for (const auto& s : *list) {
      a = std::max(a, s.preperiod_len());
      l = std::lcm(l, s.period_len());
    }
  }
  // Every member is eventually periodic with preperiod <= a and period | l,
  // so an intersection is empty iff it is empty on 1..a+l.
  const std::size_t bound = 3 * (a + l);
  const std::size_t h = a + l;
  std::set<BitWord> distinct;
  for (const auto& r : f.shift_roots) {
    const BitWord full = window_bits(r, h + bound);
    for (std::size_t k = 0; k <= bound; ++k) {
      distinct.insert(BitWord(full.begin() + static_cast<std::ptrdiff_t>(k),
                              full.begin() + static_cast<std::ptrdiff_t>(k + h)));
    }
  }
  for (const auto& s : f.singles) distinct.insert(window_bits(s, h));
  const std::vector<BitWord> pool(distinct.begin(), distinct.end());

  auto meet = [&](const BitWord& x, const BitWord& y) {
    BitWord out(h);
    for (std::size_t i = 0; i < h; ++i) out[i] = x[i] && y[i];
    return out;
  };
  auto empty = [](const BitWord& x) { return std::none_of(x.begin(), x.end(), [](bool b) { return b; }); };

  FipOracle out;
  out.pool = pool.size();
  BitWord all(h, true);
  for (const auto& w : pool) all = meet(all, w);
  out.whole_pool_nonempty = !empty(all);

  // Depth-first over subfamilies of at most max_members members.
  auto search = [&](auto&& self, std::size_t from, std::size_t left, const BitWord& acc) -> bool {
    if (empty(acc)) return true;
    if (left == 0) return false;
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (self(self, i + 1, left - 1, meet(acc, pool[i]))) return true;
    }
    return false;
  };
  out.small_empty_found = search(search, 0, max_members, BitWord(h, true));
  return out;
}

/// Families with <= 2 roots (biased toward cofinite) and <= 2 singles.
inline FipFamily random_family(Rng& rng, std::size_t max_pre = 5, std::size_t max_per = 4) {
  std::uniform_int_distribution<int> count(0, 2);
  std::bernoulli_distribution cofinite(0.7);
  std::uniform_int_distribution<std::size_t> pre(0, max_pre);
  FipFamily f;
  const int roots = count(rng), singles = count(rng);
  for (int i = 0; i < roots; ++i) {
    if (cofinite(rng)) {
      f.shift_roots.push_back(EpSet(random_word(rng, pre(rng), 0.75), BitWord{true}));
    } else {
      f.shift_roots.push_back(random_epset(rng, max_pre, max_per, 0.7));
    }
  }
  for (int i = 0; i < singles; ++i) f.singles.push_back(random_epset(rng, max_pre, max_per, 0.6));
  return f;
}

}  // namespace pws::testing
