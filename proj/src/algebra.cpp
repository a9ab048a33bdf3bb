#include "pws/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace pws {

Nat cantor_pair(Nat x, Nat y) {
  const Nat s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Nat, Nat> cantor_unpair(Nat z) {
  auto w = static_cast<Nat>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  // Correct floating-point drift.
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  const Nat t = w * (w + 1) / 2;
  const Nat y = z - t;
  return {w - y, y};
}

std::vector<Nat> finite_set_of_index(Nat n) {
  std::vector<Nat> out;
  for (Nat k = 1; n != 0; ++k, n >>= 1) {
    if (n & 1U) out.push_back(k);
  }
  return out;
}

Clause decode_clause(Nat c) {
  if (c == 0) throw PreconditionError("clause index must be positive");
  const auto [x, y] = cantor_unpair(c - 1);
  Clause out;
  out.generators = finite_set_of_index(x + 1);
  out.negated.resize(out.generators.size());
  for (std::size_t b = 0; b < out.generators.size() && b < 64; ++b) {
    out.negated[b] = (y >> b) & 1U;
  }
  return out;
}

GeneratorIndex decode_generator(Nat i, std::size_t roots) {
  if (i == 0) throw PreconditionError("generator index must be positive");
  if (roots == 0) throw PreconditionError("no roots");
  const Nat r = roots;
  // Diagonals 0..r-2 are partial (s+1 entries); later ones hold r entries.
  const Nat triangle = r * (r - 1) / 2;
  if (i <= triangle) {
    Nat s = 0;
    while ((s + 1) * (s + 2) / 2 < i) ++s;
    const Nat j = i - s * (s + 1) / 2;
    return {static_cast<std::size_t>(j), s - (j - 1)};
  }
  const Nat rest = i - triangle - 1;
  const Nat s = (r - 1) + rest / r;
  const Nat j = rest % r + 1;
  return {static_cast<std::size_t>(j), s - (j - 1)};
}

Nat encode_generator(GeneratorIndex g, std::size_t roots) {
  if (g.root == 0 || g.root > roots) throw PreconditionError("root index out of range");
  const Nat r = roots;
  const Nat s = (g.root - 1) + g.shift;
  if (s + 1 < r) return s * (s + 1) / 2 + g.root;
  return r * (r - 1) / 2 + (s - (r - 1)) * r + g.root;
}

SetAlgebra::SetAlgebra(std::vector<EpSet> roots) : roots_(std::move(roots)) {
  if (roots_.empty()) throw PreconditionError("an algebra needs at least one root");

  std::size_t pre = 0, per = 1;
  for (const auto& r : roots_) {
    pre = std::max(pre, r.preperiod_len());
    per = std::lcm(per, r.period_len());
    if (per > lcm_cap()) throw ResourceError("algebra period exceeds lcm cap");
  }
  atom_pre_ = pre;
  atom_per_ = per;

  // Shifts of R beyond a + p - 1 repeat earlier ones, so these distinct
  // shifts generate the whole algebra.
  const std::size_t span = pre + per;
  std::map<BitWord, std::size_t> index_of_signature;
  std::vector<BitWord> members;  // per atom: membership of positions 1..span
  atom_of_position_.resize(span);
  for (std::size_t m = 1; m <= span; ++m) {
    BitWord sig;
    for (const auto& r : roots_) {
      for (Nat n = 0; n < r.preperiod_len() + r.period_len(); ++n) sig.push_back(r.contains(m + n));
    }
    auto [it, fresh] = index_of_signature.try_emplace(std::move(sig), members.size());
    if (fresh) members.emplace_back(span, false);
    members[it->second][m - 1] = true;
    atom_of_position_[m - 1] = it->second;
  }
  for (const auto& bits : members) {
    BitWord w(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(pre));
    BitWord v(bits.begin() + static_cast<std::ptrdiff_t>(pre), bits.end());
    atoms_.emplace_back(std::move(w), std::move(v));
  }
}

EpSet SetAlgebra::generator(Nat i) const {
  const auto g = decode_generator(i, roots_.size());
  return shift_left(roots_[g.root - 1], g.shift);
}

EpSet SetAlgebra::clause(Nat c) const {
  const Clause cl = decode_clause(c);
  EpSet acc = EpSet::naturals();
  for (std::size_t b = 0; b < cl.generators.size(); ++b) {
    EpSet lit = generator(cl.generators[b]);
    acc = intersect(acc, cl.negated[b] ? complement(lit) : lit);
  }
  return acc;
}

EpSet SetAlgebra::element(Nat n) const {
  if (n == 0) throw PreconditionError("element index must be positive");
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
  }
  EpSet acc = EpSet::empty();
  for (Nat c : finite_set_of_index(n)) acc = unite(acc, clause(c));
  std::lock_guard lock(cache_mutex_);
  return cache_.try_emplace(n, std::move(acc)).first->second;
}

std::optional<Nat> SetAlgebra::index_of(const EpSet& s, Nat bound) const {
  if (!contains(s)) return std::nullopt;
  for (Nat n = 1; n <= bound; ++n) {
    if (element(n) == s) return n;
  }
  return std::nullopt;
}

bool SetAlgebra::contains(const EpSet& s) const {
  if (s.preperiod_len() > atom_pre_ || atom_per_ % s.period_len() != 0) return false;
  std::vector<int> value(atoms_.size(), -1);
  for (std::size_t m = 1; m <= atom_pre_ + atom_per_; ++m) {
    const int bit = s.contains(m) ? 1 : 0;
    int& seen = value[atom_of_position_[m - 1]];
    if (seen == -1) {
      seen = bit;
    } else if (seen != bit) {
      return false;
    }
  }
  return true;
}

}  // namespace pws
