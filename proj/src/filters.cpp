#include "pws/filters.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pws/combinatorics.hpp"

namespace pws {

namespace {

// {c+1, c+2, ...}
EpSet beyond(Nat c) { return complement(EpSet::interval(1, c)); }

FamilyMember root_member(const FipFamily& f, std::size_t j, Nat k) {
  return {FamilyMember::Source::root, j, k, shift_left(f.shift_roots[j], k)};
}

}  // namespace

FipCertificate fip(const FipFamily& f) {
  FipCertificate cert;

  // A root that is not cofinite has shifts intersecting to ∅: the shifts that
  // cover ℕ with its complement.
  for (std::size_t j = 0; j < f.shift_roots.size(); ++j) {
    const EpSet& r = f.shift_roots[j];
    if (is_cofinite(r)) continue;
    for (Nat k : syndetic_cover(complement(r))) cert.counterexample.push_back(root_member(f, j, k));
    return cert;
  }

  Nat c_star = 0;
  for (const auto& r : f.shift_roots) c_star = std::max(c_star, max_element(complement(r)).value_or(0));
  EpSet meet = EpSet::naturals();
  for (const auto& s : f.singles) meet = intersect(meet, s);

  EpSet core = intersect(meet, beyond(c_star));
  if (!is_empty(core)) {
    cert.has_fip = true;
    cert.core = std::move(core);
    return cert;
  }

  // The singles meet in a finite set below c*; remove each survivor x with a
  // shift R - (d - x) where d is the least missing number of R with d >= x.
  for (std::size_t i = 0; i < f.singles.size(); ++i) {
    cert.counterexample.push_back({FamilyMember::Source::single, i, 0, f.singles[i]});
  }
  std::set<std::pair<std::size_t, Nat>> used;
  for (Nat x : elements(meet)) {
    std::optional<std::pair<std::size_t, Nat>> best;
    for (std::size_t j = 0; j < f.shift_roots.size(); ++j) {
      for (Nat d : elements(complement(f.shift_roots[j]))) {
        if (d < x) continue;
        if (!best || d - x < best->second) best = std::pair{j, d - x};
        break;
      }
    }
    if (!best) throw Error("fip: no root shift removes " + std::to_string(x));
    if (used.insert(*best).second) cert.counterexample.push_back(root_member(f, best->first, best->second));
  }
  return cert;
}

bool counterexample_is_empty(const FipCertificate& cert) {
  if (cert.counterexample.empty()) return false;
  EpSet acc = EpSet::naturals();
  for (const auto& m : cert.counterexample) acc = intersect(acc, m.set);
  return is_empty(acc);
}

std::string describe(const FipCertificate& cert) {
  if (cert.has_fip) return "core:" + to_string(cert.core);
  std::ostringstream os;
  os << "empty:{";
  for (std::size_t i = 0; i < cert.counterexample.size(); ++i) {
    const auto& m = cert.counterexample[i];
    if (i) os << ',';
    os << (m.source == FamilyMember::Source::root ? 'R' : 'S') << m.index + 1 << '-' << m.shift;
  }
  os << '}';
  return os.str();
}

StagedFilter::StagedFilter(FilterKind kind, std::shared_ptr<const SetAlgebra> algebra,
                           FipFamily base)
    : kind_(kind), algebra_(std::move(algebra)), base_(std::move(base)) {
  if (!algebra_) throw PreconditionError("staged filter needs an algebra");
  if (kind_ == FilterKind::maximal_tif &&
      (base_.shift_roots.empty() || !base_.singles.empty())) {
    throw PreconditionError("maximal TIF base must be shift roots only, and at least one");
  }
  const FipCertificate cert = fip(base_);
  if (!cert.has_fip) throw PreconditionError("base family lacks the finite intersection property");
  family_ = base_;
  core_ = cert.core;
}

void StagedFilter::offer(const EpSet& set, Nat stage, bool closing) {
  FipFamily candidate = family_;
  if (kind_ == FilterKind::ultrafilter) {
    candidate.singles.push_back(set);
  } else {
    candidate.shift_roots.push_back(set);
  }
  StageRecord rec{stage, set, false, closing, fip(candidate)};
  if (rec.certificate.has_fip) {
    rec.accepted = true;
    family_ = std::move(candidate);
    core_ = rec.certificate.core;
  }
  stages_.push_back(std::move(rec));
}

void StagedFilter::run_literal_stages(Nat count) {
  if (literal_ != stages_.size()) throw PreconditionError("literal stages must precede closing");
  for (Nat i = 0; i < count; ++i) {
    const Nat n = literal_ + 1;
    offer(algebra_->element(n), n, false);
    ++literal_;
  }
}

void StagedFilter::run_closing_sequence() {
  for (const auto& atom : algebra_->atoms()) {
    const Nat n = stages_.size() + 1;
    offer(kind_ == FilterKind::ultrafilter ? atom : complement(atom), n, true);
  }
}

bool StagedFilter::member(const EpSet& s) const {
  if (!algebra_->contains(s)) {
    throw NotInAlgebraError(to_string(s) + " is not in the algebra");
  }
  return is_subset(core_, s);
}

StagedFilter build_ultrafilter(std::shared_ptr<const SetAlgebra> algebra, FipFamily base,
                               Nat stages) {
  StagedFilter f(FilterKind::ultrafilter, std::move(algebra), std::move(base));
  f.run_literal_stages(stages);
  f.run_closing_sequence();
  return f;
}

StagedFilter build_maximal_tif(std::shared_ptr<const SetAlgebra> algebra, FipFamily base,
                               Nat stages) {
  StagedFilter f(FilterKind::maximal_tif, std::move(algebra), std::move(base));
  f.run_literal_stages(stages);
  f.run_closing_sequence();
  return f;
}

WindowSet b_sub_u(const StagedFilter& u, const EpSet& b, std::size_t horizon) {
  if (horizon == 0) throw PreconditionError("horizon must be positive");
  BitWord bits(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) bits[n - 1] = u.member(shift_left(b, n));
  return WindowSet(std::move(bits));
}

BSubU b_sub_u_ep(const StagedFilter& u, const EpSet& b) {
  const std::size_t a = b.preperiod_len();
  const std::size_t p = b.period_len();
  const std::size_t horizon = 2 * a + 4 * p + 8;
  const WindowSet w = b_sub_u(u, b, horizon);
  const BitWord& f = w.bits();  // f[n-1] = [n ∈ B_U]

  for (std::size_t q = 1; 4 * q <= horizon; ++q) {
    // Least b with f(n) = f(n+q) for every n in (b, horizon-q].
    std::size_t pre = 0;
    for (std::size_t n = horizon - q; n >= 1; --n) {
      if (f[n - 1] != f[n + q - 1]) {
        pre = n;
        break;
      }
    }
    if (pre + 3 * q > horizon) continue;
    // Beyond a, n -> [B - n ∈ U] has period p, so agreement over a full
    // period past max(pre, a) extends to all n.
    if (horizon - q < std::max(pre, a) + p) continue;
    BitWord w_bits(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(pre));
    BitWord v_bits(f.begin() + static_cast<std::ptrdiff_t>(pre),
                   f.begin() + static_cast<std::ptrdiff_t>(pre + q));
    return BSubU{EpSet(std::move(w_bits), std::move(v_bits)), u.member(b), horizon, pre, q};
  }
  throw ResourceError("b_sub_u_ep: no verified period within horizon " + std::to_string(horizon));
}

bool SyndeticReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

SyndeticReport verify_prop_syndetic(const StagedFilter& u, const StagedFilter& m,
                                    std::span<const EpSet> sample) {
  if (u.kind() != FilterKind::ultrafilter || m.kind() != FilterKind::maximal_tif) {
    throw PreconditionError("verify_prop_syndetic needs an ultrafilter and a maximal TIF");
  }
  SyndeticReport report;
  for (const auto& b : sample) {
    SyndeticCheck check;
    check.set = b;
    check.in_u = u.member(b);
    if (!check.in_u) {
      ++report.skipped;
      report.checks.push_back(std::move(check));
      continue;
    }
    check.piecewise_syndetic = is_piecewise_syndetic(b);
    const BSubU bu = b_sub_u_ep(u, b);
    check.b_u_syndetic = is_syndetic(bu.set);
    if (check.b_u_syndetic) check.b_u_gap = gap_bound(bu.set);

    // M ∪ {B^c - n | n} lacks the FIP (else M would extend); the shifts of
    // B^c in the counterexample give the cover.
    FipFamily family{m.family().shift_roots, {}};
    const std::size_t last = family.shift_roots.size();
    family.shift_roots.push_back(complement(b));
    const FipCertificate cert = fip(family);
    if (!cert.has_fip) {
      for (const auto& mem : cert.counterexample) {
        if (mem.source == FamilyMember::Source::root && mem.index == last) {
          check.cover.push_back(mem.shift);
        }
      }
      std::sort(check.cover.begin(), check.cover.end());
      if (!check.cover.empty()) check.cover_in_m = m.member(union_of_shifts(b, check.cover));
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace pws
