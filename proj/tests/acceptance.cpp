// Acceptance suite: one PASS/FAIL line per criterion, with its runtime
// limit enforced. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "gen.hpp"
#include "oracles.hpp"
#include "pws/combinatorics.hpp"
#include "pws/filters.hpp"
#include "pws/quotient.hpp"
#include "pws/vdw.hpp"

using namespace pws;
using pws::testing::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > limit_s) {
    out.ok = false;
    out.detail = "runtime limit exceeded";
  }
  if (!out.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3fs/%gs", secs, limit_s);
  std::cout << (out.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << timing << ")";
  if (!out.detail.empty()) std::cout << ": " << out.detail;
  std::cout << std::endl;
}

std::vector<EpSet> corpus() {
  Rng rng(0xC0FFEE);
  std::vector<EpSet> out;
  for (int i = 0; i < 200; ++i) {
    const double density = i % 4 == 0 ? 0.9 : (i % 4 == 1 ? 0.2 : 0.5);
    out.push_back(pws::testing::random_epset(rng, 8, 12, density));
  }
  return out;
}

BitWord bits_of(const EpSet& s, std::size_t h) { return materialize(s, h).bits(); }

Outcome set_algebra_oracle() {
  Outcome o;
  const auto sets = corpus();
  std::size_t checks = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const EpSet& x = sets[i];
    const EpSet& y = sets[(i + 1) % sets.size()];
    const std::size_t h = std::max(x.preperiod_len(), y.preperiod_len()) +
                          3 * std::lcm(x.period_len(), y.period_len());
    const Nat n = i % 17;
    const BitWord wx = bits_of(x, h + n), wy = bits_of(y, h);
    const BitWord u = bits_of(unite(x, y), h), in = bits_of(intersect(x, y), h);
    const BitWord c = bits_of(complement(x), h), d = bits_of(difference(x, y), h);
    const BitWord s = bits_of(shift_left(x, n), h);
    for (std::size_t k = 0; k < h; ++k) {
      o.require(u[k] == (wx[k] || wy[k]), "union mismatch at corpus " + std::to_string(i));
      o.require(in[k] == (wx[k] && wy[k]), "intersection mismatch at corpus " + std::to_string(i));
      o.require(c[k] == !wx[k], "complement mismatch at corpus " + std::to_string(i));
      o.require(d[k] == (wx[k] && !wy[k]), "difference mismatch at corpus " + std::to_string(i));
      o.require(s[k] == wx[k + n], "shift mismatch at corpus " + std::to_string(i));
      checks += 5;
    }
  }
  o.detail = o.ok ? std::to_string(checks) + " pointwise checks" : o.detail;
  return o;
}

Outcome predicate_oracle() {
  Outcome o;
  const auto sets = corpus();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const EpSet& s = sets[i];
    const std::size_t a = s.preperiod_len(), p = s.period_len();
    const WindowSet tail = materialize(shift_left(s, a), 4 * p);
    const std::string at = " at corpus " + std::to_string(i);
    o.require(is_thick(s) == oracle_thick(tail, std::min(p + 1, 4 * p)), "thick" + at);
    const auto tail_gap = oracle_gap_bound(tail);
    o.require(is_syndetic(s) == (tail_gap && *tail_gap <= p), "syndetic" + at);
    if (is_syndetic(s)) {
      o.require(oracle_gap_bound(materialize(s, a + 4 * p)) == gap_bound(s), "gap_bound" + at);
    }
    WindowSet u = tail;
    for (std::size_t n = 1; n < p; ++n) u = unite(u, shift_left(tail, n));
    o.require(is_piecewise_syndetic(s) == oracle_thick(u, std::min(p + 1, u.horizon())), "pws" + at);
  }
  if (o.ok) o.detail = "200 sets";
  return o;
}

Outcome fip_kernel() {
  Outcome o;
  Rng rng(77);
  std::size_t rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const FipFamily f = pws::testing::random_family(rng);
    const FipCertificate c = fip(f);
    const auto oracle = pws::testing::fip_oracle(f);
    const std::string at = " at family " + std::to_string(trial);
    o.require(c.has_fip == oracle.whole_pool_nonempty, "verdict" + at);
    if (c.has_fip) {
      o.require(!oracle.small_empty_found, "small empty subfamily missed" + at);
    } else {
      ++rejected;
      o.require(counterexample_is_empty(c), "certificate does not re-verify" + at);
      if (c.counterexample.size() <= 4) o.require(oracle.small_empty_found, "subfamily search disagrees" + at);
    }
  }
  if (o.ok) o.detail = "300 families, " + std::to_string(rejected) + " certified rejections";
  return o;
}

EpSet noisy_res03() { return EpSet(BitWord{true, false, true, true}, EpSet::residue(0, 3).period()); }

struct Built {
  std::shared_ptr<const SetAlgebra> alg;
  std::unique_ptr<StagedFilter> m, u;
};

Built build_filters() {
  Built b;
  const EpSet a = noisy_res03();
  b.alg = std::make_shared<const SetAlgebra>(std::vector<EpSet>{a});
  const EpSet t = union_of_shifts(a, pws_witness(a));
  b.m = std::make_unique<StagedFilter>(build_maximal_tif(b.alg, {{t}, {}}, 200));
  b.u = std::make_unique<StagedFilter>(build_ultrafilter(b.alg, {b.m->family().shift_roots, {}}, 200));
  return b;
}

Outcome ultrafilter_props() {
  Outcome o;
  const Built b = build_filters();
  const StagedFilter& u = *b.u;
  for (Nat n = 1; n <= 200; ++n) {
    const EpSet s = b.alg->element(n);
    o.require(u.member(s) != u.member(complement(s)), "dichotomy fails at n=" + std::to_string(n));
  }
  Rng rng(404);
  std::uniform_int_distribution<Nat> pick(1, 200);
  std::uniform_int_distribution<int> pieces(2, 3);
  std::size_t unions = 0, tries = 0;
  while (unions < 50 && tries < 100000) {
    ++tries;
    std::vector<EpSet> parts;
    const int r = pieces(rng);
    for (int i = 0; i < r; ++i) parts.push_back(b.alg->element(pick(rng)));
    EpSet all = EpSet::empty();
    for (const auto& s : parts) all = unite(all, s);
    if (!u.member(all)) continue;
    ++unions;
    bool some = false;
    for (const auto& s : parts) some |= u.member(s);
    o.require(some, "Ramsey property fails on a sampled union");
  }
  o.require(unions == 50, "could not sample 50 unions in U");
  if (o.ok) o.detail = "200 stages, 50 unions";
  return o;
}

Outcome tif_props() {
  Outcome o;
  const Built b = build_filters();
  const StagedFilter& m = *b.m;
  std::vector<EpSet> accepted;
  std::size_t rejections = 0;
  for (const auto& s : m.stages()) {
    if (s.accepted) {
      accepted.push_back(s.set);
    } else {
      ++rejections;
      o.require(counterexample_is_empty(s.certificate),
                "rejection at stage " + std::to_string(s.stage) + " lacks a valid certificate");
    }
  }
  o.require(m.member(EpSet::naturals()) && !m.member(EpSet::empty()), "N in M, empty not in M");
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    const EpSet& s = accepted[i];
    o.require(m.member(s), "accepted set not a member");
    for (Nat k = 1; k <= 8; ++k) o.require(m.member(shift_left(s, k)), "not shift invariant");
    o.require(m.member(unite(s, b.alg->element(i + 1))), "not upward closed");
    const EpSet& t = accepted[(i * 7 + 3) % accepted.size()];
    o.require(m.member(intersect(s, t)), "not closed under intersection");
  }
  if (o.ok) {
    o.detail = std::to_string(accepted.size()) + " accepted, " + std::to_string(rejections) +
               " certified rejections";
  }
  return o;
}

Outcome syndetic_props() {
  Outcome o;
  const Built b = build_filters();
  std::vector<EpSet> sample;
  for (Nat n = 1; n <= 200; ++n) {
    const EpSet s = b.alg->element(n);
    if (b.u->member(s)) sample.push_back(s);
  }
  o.require(sample.size() >= 20, "fewer than 20 sampled members of U");
  const SyndeticReport r = verify_prop_syndetic(*b.u, *b.m, sample);
  std::size_t checked = 0;
  for (const auto& c : r.checks) {
    if (!c.in_u) continue;
    ++checked;
    o.require(c.piecewise_syndetic, "member of U not piecewise syndetic");
    o.require(c.b_u_syndetic && c.b_u_gap >= 1, "B_U not syndetic");
    o.require(c.cover_in_m && b.m->member(union_of_shifts(c.set, c.cover)), "cover not in M");
  }
  o.require(r.passed(), "report failed");
  if (o.ok) o.detail = std::to_string(checked) + " members of U checked";
  return o;
}

Outcome theorem_pipeline() {
  Outcome o;
  const std::vector<std::pair<std::string, EpSet>> catalog{
      {"res(0,3)", EpSet::residue(0, 3)},
      {"res(1,4)", EpSet::residue(1, 4)},
      {"res(0,3)+noise", noisy_res03()},
      {"res(1,6)|res(4,6)", unite(EpSet::residue(1, 6), EpSet::residue(4, 6))}};
  std::size_t runs = 0;
  for (const auto& [name, a] : catalog) {
    for (Nat k = 2; k <= 5; ++k) {
      const TheoremEvidence ev = theorem_main(a, k);
      const std::string at = " for " + name + " k=" + std::to_string(k);
      const Progression& p = ev.claim.progression;
      o.require(p.length == k, "progression length" + at);
      for (Nat t : p.terms()) {
        o.require(ev.ultrafilter->member(shift_left(a, ev.chosen_shift + t)), "term membership" + at);
      }
      o.require(ev.oracle_horizon >= 8 * (k + 2) * a.period_len(), "oracle horizon" + at);
      o.require(ev.apk_pws && ev.oracle_agrees && ev.oracle_pws, "AP_k verification" + at);
      o.require(ev.verdict(), "pipeline verdict" + at);
      ++runs;
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " pipelines";
  return o;
}

Outcome corollary() {
  Outcome o;
  Rng rng(2718);
  std::uniform_int_distribution<std::size_t> pre(0, 4), per(1, 6), colors(2, 4), kk(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t r = colors(rng), a = pre(rng), p = per(rng);
    std::uniform_int_distribution<std::size_t> color(0, r - 1);
    std::vector<BitWord> w(r, BitWord(a, false)), v(r, BitWord(p, false));
    for (std::size_t i = 0; i < a; ++i) w[color(rng)][i] = true;
    for (std::size_t j = 0; j < p; ++j) v[color(rng)][j] = true;
    std::vector<EpSet> pieces;
    for (std::size_t c = 0; c < r; ++c) pieces.emplace_back(w[c], v[c]);
    const Nat k = kk(rng);
    const ColoringEvidence ev = corollary_coloring(pieces, k);
    const EpSet& piece = pieces[ev.ramsey.index];
    o.require(is_piecewise_syndetic(ap_k(piece, k)), "AP_k of the chosen piece not pws");
    o.require(ev.theorem.verdict(), "pipeline verdict on coloring " + std::to_string(trial));
  }
  if (o.ok) o.detail = "10 colorings";
  return o;
}

Outcome vdw_constant() {
  Outcome o;
  std::size_t colorings = 0;
  for (unsigned mask = 0; mask < (1U << 9); ++mask) {
    std::vector<int> c(9);
    for (int i = 0; i < 9; ++i) c[i] = (mask >> i) & 1U;
    o.require(has_monochromatic_ap(c, 3), "AP-free coloring of [1,9]");
    ++colorings;
  }
  const auto free8 = ap_free_coloring(8, 2, 3);
  o.require(free8.has_value() && !has_monochromatic_ap(*free8, 3), "no AP-free coloring of [1,8]");
  if (o.ok) {
    std::ostringstream os;
    os << colorings << " colorings of [1,9]; [1,8] coloring ";
    for (int x : *free8) os << x;
    o.detail = os.str();
  }
  return o;
}

Outcome quotient_model() {
  Outcome o;
  for (std::size_t p = 1; p <= 8; ++p) {
    const CorrespondenceReport r = check_correspondence(p);
    o.require(r.passed(), "correspondence fails at P=" + std::to_string(p));
    o.require(r.sum_is_addition && r.maximal_iff_minimal, "pseudosum/maximality at P=" + std::to_string(p));
  }
  if (o.ok) o.detail = "P = 1..8";
  return o;
}

}  // namespace

int main() {
  criterion(1, "set algebra agrees with window oracles", 5, set_algebra_oracle);
  criterion(2, "predicates agree with window oracles", 5, predicate_oracle);
  criterion(3, "fip kernel agrees with subfamily search", 30, fip_kernel);
  criterion(4, "ultrafilter dichotomy and Ramsey property", 60, ultrafilter_props);
  criterion(5, "maximal TIF axioms and rejection certificates", 60, tif_props);
  criterion(6, "members of U are pws, B_U syndetic, covers in M", 60, syndetic_props);
  criterion(7, "theorem pipeline on the catalog, k = 2..5", 180, theorem_pipeline);
  criterion(8, "corollary on random colorings", 120, corollary);
  criterion(9, "van der Waerden W(3,2) = 9", 1, vdw_constant);
  criterion(10, "finite quotient correspondence, P <= 8", 30, quotient_model);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
