#include "pws/vdw.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace pws {

EpSet ap_k(const EpSet& a, Nat k) {
  if (k == 0) throw PreconditionError("ap_k: k must be positive");
  // Every tail member works with y = p (same residue, still in the tail).
  // A preperiod member x needs y < a + p: for y >= a the terms x + iy, i >= 1,
  // sit in the tail and only y mod p matters.
  BitWord pre(a.preperiod_len());
  for (std::size_t x = 1; x <= pre.size(); ++x) pre[x - 1] = ap_witness_gap(a, k, x).has_value();
  return EpSet(std::move(pre), a.period());
}

std::optional<Nat> ap_witness_gap(const EpSet& a, Nat k, Nat x) {
  if (k == 0) throw PreconditionError("ap_witness_gap: k must be positive");
  if (!a.contains(x)) return std::nullopt;
  const Nat bound = a.preperiod_len() + a.period_len();
  for (Nat y = 1; y <= bound; ++y) {
    bool ok = true;
    for (Nat i = 1; i <= k && ok; ++i) ok = a.contains(x + i * y);
    if (ok) return y;
  }
  return std::nullopt;
}

WindowSet oracle_ap_k(const EpSet& a, Nat k, std::size_t horizon) {
  const WindowSet w = materialize(a, horizon);
  BitWord out(horizon, false);
  for (Nat x = 1; x <= horizon; ++x) {
    if (!w.contains(x)) continue;
    for (Nat y = 1; k == 0 || x + k * y <= horizon; ++y) {
      bool ok = true;
      for (Nat i = 1; i <= k && ok; ++i) ok = w.contains(x + i * y);
      if (ok) {
        out[x - 1] = true;
        break;
      }
      if (k == 0) break;
    }
  }
  return WindowSet(std::move(out));
}

namespace {

constexpr std::size_t kHypothesisBudget = 1'000'000;

EpSet beyond(Nat c) { return complement(EpSet::interval(1, c)); }

class ClaimSolver {
 public:
  explicit ClaimSolver(const StagedFilter& u) : u_(u) {}

  std::size_t calls() const noexcept { return calls_; }

  // `terms` terms q + iy (i = 1..terms) of B_U with q >= floor + margin * y.
  ClaimTrace hypothesis(const EpSet& b, Nat terms, Nat floor, Nat margin) {
    if (++calls_ > kHypothesisBudget) throw ResourceError("claim: hypothesis call budget exhausted");
    ClaimTrace tr;
    tr.set = b;
    tr.terms = terms;
    tr.floor = floor;
    tr.margin = margin;
    tr.b_u = b_u(b);

    if (terms == 1) {
      const auto t = min_element(intersect(tr.b_u, beyond(floor + margin)));
      if (!t) throw Error("claim: B_U is finite, U does not extend a maximal TIF");
      tr.shift = *t - 1;
      tr.gap = 1;
      return tr;
    }

    const EpSet moved = shift_left(tr.b_u, floor);
    if (!is_syndetic(moved)) throw Error("claim: B_U is not syndetic");
    tr.cover = syndetic_cover(moved);
    if (std::find(tr.cover.begin(), tr.cover.end(), 0) == tr.cover.end()) {
      tr.cover.insert(tr.cover.begin(), 0);
    }

    std::vector<Nat> picks{0};    // x_0, x_1, ...
    std::vector<Nat> shifts{floor};  // q_0, q_1, ...
    std::vector<Nat> gaps;        // y_1, y_2, ...
    EpSet current = b;
    for (std::size_t j = 1; j <= tr.cover.size(); ++j) {
      ClaimRound round;
      ClaimTrace sub = hypothesis(current, terms - 1, shifts.back(), margin + 1);
      round.shift = sub.shift;
      round.gap = sub.gap;
      round.inner.push_back(std::move(sub));

      // ∪_{x ∈ F} (B_U - floor - x) = ℕ and q_j > floor, so some x fits.
      auto it = std::find_if(tr.cover.begin(), tr.cover.end(),
                             [&](Nat x) { return tr.b_u.contains(round.shift + x); });
      if (it == tr.cover.end()) throw Error("claim: F does not cover q_j");
      round.pick = *it;
      gaps.push_back(round.gap);

      const auto prev = std::find(picks.begin(), picks.end(), round.pick);
      if (prev != picks.end()) {
        const std::size_t m = static_cast<std::size_t>(prev - picks.begin());
        Nat span = 0;  // y_{m+1} + ... + y_j
        for (std::size_t r = m; r < j; ++r) span += gaps[r];
        const Nat first = round.shift + round.pick;
        if (first < span + floor + margin * span) {
          throw Error("claim: repeat progression starts below its floor");
        }
        tr.repeat = std::pair{m, j};
        tr.shift = first - span;
        tr.gap = span;
        tr.rounds.push_back(std::move(round));
        return tr;
      }
      picks.push_back(round.pick);
      shifts.push_back(round.shift);

      // B_j = (B - x_j) ∩ ∩_{r<j} ∩_{i=1}^{terms-1} (B - x_r - i(y_{r+1} + ... + y_j))
      EpSet next = shift_left(b, round.pick);
      Nat span = 0;
      for (std::size_t r = j; r-- > 0;) {
        span += gaps[r];
        for (Nat i = 1; i < terms; ++i) next = intersect(next, shift_left(b, picks[r] + i * span));
      }
      round.next = next;
      current = std::move(next);
      tr.rounds.push_back(std::move(round));
    }
    throw Error("claim: no repeat among the picks within |F| rounds");
  }

 private:
  const EpSet& b_u(const EpSet& b) {
    auto key = std::pair{b.preperiod(), b.period()};
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(std::move(key), b_sub_u_ep(u_, b).set).first;
    return it->second;
  }

  const StagedFilter& u_;
  std::size_t calls_ = 0;
  std::map<std::pair<BitWord, BitWord>, EpSet> memo_;
};

}  // namespace

ClaimResult claim_find_ap(const StagedFilter& u, const EpSet& b, Nat ell, Nat k) {
  if (u.kind() != FilterKind::ultrafilter) throw PreconditionError("claim needs an ultrafilter");
  if (!u.member(shift_left(b, ell))) throw PreconditionError("claim: B - ell is not in U");

  ClaimSolver solver(u);
  ClaimResult out;
  out.trace = solver.hypothesis(b, k + 1, ell, 0);
  out.hypothesis_calls = solver.calls();
  out.progression = Progression{out.trace.shift + out.trace.gap - ell, out.trace.gap, k};
  for (Nat t : out.progression.terms()) {
    if (!u.member(shift_left(b, ell + t))) throw Error("claim: term " + std::to_string(t) + " fails");
  }
  return out;
}

std::size_t count_rounds(const ClaimTrace& trace) {
  std::size_t n = trace.rounds.size();
  for (const auto& r : trace.rounds) {
    for (const auto& in : r.inner) n += count_rounds(in);
  }
  return n;
}

TheoremEvidence theorem_main(const EpSet& a, Nat k, const TheoremOptions& options) {
  if (k == 0) throw PreconditionError("theorem_main: k must be positive");
  if (!is_piecewise_syndetic(a)) throw PreconditionError("theorem_main: set is not piecewise syndetic");

  TheoremEvidence ev;
  ev.set = a;
  ev.k = k;
  ev.witness = pws_witness(a);
  ev.thick_union = union_of_shifts(a, ev.witness);

  ev.algebra = std::make_shared<const SetAlgebra>(std::vector<EpSet>{a});
  auto m = std::make_shared<StagedFilter>(
      build_maximal_tif(ev.algebra, FipFamily{{ev.thick_union}, {}}, options.stages));
  auto u = std::make_shared<StagedFilter>(
      build_ultrafilter(ev.algebra, FipFamily{m->family().shift_roots, {}}, options.stages));
  ev.tif = m;
  ev.ultrafilter = u;
  ev.t_in_m = m->member(ev.thick_union);
  ev.t_in_u = u->member(ev.thick_union);

  // T ∈ U and U is an ultrafilter, so one of the pieces A - n_i is in U.
  const auto chosen = std::find_if(ev.witness.begin(), ev.witness.end(),
                                   [&](Nat n) { return u->member(shift_left(a, n)); });
  if (chosen == ev.witness.end()) throw Error("theorem_main: no shift of A from T lies in U");
  ev.chosen_shift = *chosen;

  ev.claim = claim_find_ap(*u, a, ev.chosen_shift, k);
  const Progression& pr = ev.claim.progression;
  const std::vector<Nat> terms = pr.terms();
  ev.terms_verified = std::all_of(terms.begin(), terms.end(), [&](Nat t) {
    return u->member(shift_left(a, ev.chosen_shift + t));
  });

  const Nat base = ev.chosen_shift + pr.start;
  ev.meet = EpSet::naturals();
  for (Nat i = 0; i <= k; ++i) ev.meet = intersect(ev.meet, shift_left(a, base + i * pr.gap));
  ev.meet_in_u = u->member(ev.meet);
  ev.apk = ap_k(a, k);
  ev.meet_contained = is_subset(ev.meet, shift_left(ev.apk, base));
  ev.apk_pws = is_piecewise_syndetic(ev.apk);

  const std::size_t pre = a.preperiod_len();
  const std::size_t per = a.period_len();
  const std::size_t check = pre + 3 * per;
  ev.oracle_horizon = options.oracle_horizon != 0
                          ? options.oracle_horizon
                          : std::max(pre + 8 * (k + 2) * per, check + k * (pre + per));
  if (ev.oracle_horizon >= check) {
    const WindowSet oracle = oracle_ap_k(a, k, ev.oracle_horizon);
    ev.oracle_agrees = true;
    for (Nat n = 1; n <= check; ++n) ev.oracle_agrees &= oracle.contains(n) == ev.apk.contains(n);
    // Tail blocks of length p past the preperiod each meet the window set.
    ev.oracle_pws = true;
    for (Nat start = pre + 1; start + per - 1 <= check; start += per) {
      bool hit = false;
      for (Nat n = start; n < start + per; ++n) hit |= oracle.contains(n);
      ev.oracle_pws &= hit;
    }
  }
  return ev;
}

ColoringEvidence corollary_coloring(std::span<const EpSet> pieces, Nat k,
                                    const TheoremOptions& options) {
  const EpSet all = EpSet::naturals();
  check_partition(all, pieces);
  ColoringEvidence out;
  out.ramsey = ramsey_piece(all, pieces);
  out.theorem = theorem_main(pieces[out.ramsey.index], k, options);
  return out;
}

bool has_monochromatic_ap(std::span<const int> coloring, std::size_t terms) {
  const std::size_t n = coloring.size();
  if (terms == 0) return true;
  if (terms == 1) return n > 0;
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t gap = 1; start + (terms - 1) * gap < n; ++gap) {
      bool same = true;
      for (std::size_t i = 1; i < terms && same; ++i) same = coloring[start + i * gap] == coloring[start];
      if (same) return true;
    }
  }
  return false;
}

std::optional<std::vector<int>> ap_free_coloring(std::size_t n, int colors, std::size_t terms) {
  if (colors < 1) throw PreconditionError("need at least one color");
  if (static_cast<double>(n) * std::log2(static_cast<double>(colors)) > 26.0) {
    throw ResourceError("too many colorings to enumerate");
  }
  std::vector<int> c(n, 0);
  while (true) {
    if (!has_monochromatic_ap(c, terms)) return c;
    std::size_t i = 0;
    while (i < n && ++c[i] == colors) c[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

std::optional<std::size_t> van_der_waerden_number(int colors, std::size_t terms,
                                                  std::size_t limit) {
  for (std::size_t n = 1; n <= limit; ++n) {
    if (!ap_free_coloring(n, colors, terms)) return n;
  }
  return std::nullopt;
}

}  // namespace pws
