#include "pws/quotient.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace pws {

namespace {

void check_modulus(std::size_t p, std::size_t bound) {
  if (p == 0) throw PreconditionError("modulus must be positive");
  if (p > bound || p > 16) throw PreconditionError("modulus exceeds the quotient bound");
}

ResidueMask full_mask(std::size_t p) { return static_cast<ResidueMask>((1U << p) - 1U); }

// Atom sets X ⊆ {0..P-1} as masks; 𝔉(X) is the filter of sets containing
// every class in X, ℭ(F) the atoms containing F.
ResidueMask atoms_over(const QuotientFilter& f) { return f.generator; }
QuotientFilter filter_of(std::size_t p, ResidueMask atoms) { return {p, atoms}; }

bool is_left_ideal(ResidueMask x, const std::vector<std::vector<std::size_t>>& table) {
  if (x == 0) return false;
  const std::size_t p = table.size();
  for (std::size_t v = 0; v < p; ++v) {
    if (!((x >> v) & 1U)) continue;
    for (std::size_t u = 0; u < p; ++u) {
      if (!((x >> table[u][v]) & 1U)) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> sum_table(std::size_t p) {
  std::vector<std::vector<std::size_t>> t(p, std::vector<std::size_t>(p));
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t s = 0; s < p; ++s) t[r][s] = pseudosum({p, r}, {p, s}).residue;
  }
  return t;
}

bool is_subset_mask(ResidueMask a, ResidueMask b) { return (a & b) == a; }

}  // namespace

EpSet residue_union(std::size_t modulus, ResidueMask mask) {
  check_modulus(modulus, 16);
  BitWord per(modulus);
  for (std::size_t j = 0; j < modulus; ++j) per[j] = (mask >> ((j + 1) % modulus)) & 1U;
  return EpSet({}, std::move(per));
}

ResidueMask residue_mask(std::size_t modulus, const EpSet& s) {
  check_modulus(modulus, 16);
  ResidueMask mask = 0;
  for (std::size_t n = 1; n <= modulus; ++n) {
    if (s.contains(n)) mask |= ResidueMask{1} << (n % modulus);
  }
  if (!(residue_union(modulus, mask) == s)) {
    throw PreconditionError(to_string(s) + " is not a union of residue classes");
  }
  return mask;
}

QuotientUltrafilter pseudosum(const QuotientUltrafilter& u, const QuotientUltrafilter& v) {
  if (u.modulus != v.modulus) throw PreconditionError("pseudosum: modulus mismatch");
  const std::size_t p = u.modulus;
  check_modulus(p, 16);

  // in_sum[A] = [{n | A - n ∈ V} ∈ U]; the set of such n has period P.
  std::vector<bool> in_sum(std::size_t{1} << p);
  for (ResidueMask a = 0; a <= full_mask(p); ++a) {
    const EpSet set = residue_union(p, a);
    ResidueMask returns = 0;
    for (std::size_t n = 1; n <= p; ++n) {
      if (v.contains(residue_mask(p, shift_left(set, n)))) returns |= ResidueMask{1} << (n % p);
    }
    in_sum[a] = u.contains(returns);
  }

  std::optional<std::size_t> found;
  for (std::size_t w = 0; w < p; ++w) {
    bool match = true;
    for (ResidueMask a = 0; a <= full_mask(p) && match; ++a) {
      match = QuotientUltrafilter{p, w}.contains(a) == in_sum[a];
    }
    if (!match) continue;
    if (found) throw Error("pseudosum: not unique");
    found = w;
  }
  if (!found) throw Error("pseudosum: no atom matches");
  if (*found != (u.residue + v.residue) % p) throw Error("pseudosum: not residue addition");
  return {p, *found};
}

std::vector<QuotientFilter> enumerate_filters(std::size_t modulus, std::size_t bound) {
  check_modulus(modulus, bound);
  std::vector<QuotientFilter> out;
  for (ResidueMask g = 1; g <= full_mask(modulus); ++g) out.push_back({modulus, g});
  return out;
}

std::size_t count_filters_brute_force(std::size_t modulus) {
  check_modulus(modulus, 4);
  const std::size_t sets = std::size_t{1} << modulus;
  const ResidueMask full = full_mask(modulus);
  std::size_t count = 0;
  // Family = bitmask over the 2^P sets.
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << sets); ++fam) {
    auto in = [&](ResidueMask a) { return (fam >> a) & 1U; };
    if (in(0) || !in(full)) continue;
    bool ok = true;
    for (ResidueMask a = 0; a < sets && ok; ++a) {
      if (!in(a)) continue;
      for (ResidueMask b = 0; b < sets && ok; ++b) {
        if (is_subset_mask(a, b) && !in(b)) ok = false;
        if (in(b) && !in(a & b)) ok = false;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

bool is_tif(const QuotientFilter& f) {
  const std::size_t p = f.modulus;
  for (ResidueMask a = 0; a <= full_mask(p); ++a) {
    if (!f.contains(a)) continue;
    if (!f.contains(residue_mask(p, shift_left(residue_union(p, a), 1)))) return false;
  }
  return true;
}

std::vector<ResidueMask> enumerate_left_ideals(std::size_t modulus, std::size_t bound) {
  check_modulus(modulus, bound);
  const auto table = sum_table(modulus);
  std::vector<ResidueMask> out;
  for (ResidueMask x = 1; x <= full_mask(modulus); ++x) {
    if (is_left_ideal(x, table)) out.push_back(x);
  }
  return out;
}

CorrespondenceReport check_correspondence(std::size_t modulus, std::size_t bound) {
  check_modulus(modulus, bound);
  const std::size_t p = modulus;
  CorrespondenceReport rep;
  rep.modulus = p;
  rep.sum_table = sum_table(p);

  rep.sum_is_addition = true;
  rep.associative = true;
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t s = 0; s < p; ++s) {
      rep.sum_is_addition &= rep.sum_table[r][s] == (r + s) % p;
      for (std::size_t t = 0; t < p; ++t) {
        rep.associative &= rep.sum_table[rep.sum_table[r][s]][t] == rep.sum_table[r][rep.sum_table[s][t]];
      }
    }
  }

  const auto filters = enumerate_filters(p, bound);
  std::vector<QuotientFilter> tifs;
  for (const auto& f : filters) {
    if (is_tif(f)) tifs.push_back(f);
  }
  std::vector<ResidueMask> ideals;
  for (ResidueMask x = 1; x <= full_mask(p); ++x) {
    if (is_left_ideal(x, rep.sum_table)) ideals.push_back(x);
  }
  rep.filters = filters.size();
  rep.tifs = tifs.size();
  rep.left_ideals = ideals.size();

  rep.tif_gives_left_ideal = std::all_of(tifs.begin(), tifs.end(), [&](const auto& f) {
    return is_left_ideal(atoms_over(f), rep.sum_table);
  });
  rep.left_ideal_gives_tif = std::all_of(ideals.begin(), ideals.end(), [&](ResidueMask x) {
    return is_tif(filter_of(p, x));
  });
  rep.closure_round_trip = true;
  for (ResidueMask x = 1; x <= full_mask(p); ++x) {
    rep.closure_round_trip &= atoms_over(filter_of(p, x)) == x;
  }
  rep.filter_round_trip = std::all_of(filters.begin(), filters.end(), [&](const auto& f) {
    return filter_of(p, atoms_over(f)) == f;
  });

  // Larger filter = smaller generator.
  auto maximal_tif = [&](const QuotientFilter& f) {
    return std::none_of(tifs.begin(), tifs.end(), [&](const auto& g) {
      return g.generator != f.generator && is_subset_mask(g.generator, f.generator);
    });
  };
  auto minimal_ideal = [&](ResidueMask x) {
    return std::none_of(ideals.begin(), ideals.end(),
                        [&](ResidueMask y) { return y != x && is_subset_mask(y, x); });
  };
  rep.maximal_iff_minimal = std::all_of(tifs.begin(), tifs.end(), [&](const auto& f) {
    return maximal_tif(f) == minimal_ideal(atoms_over(f));
  });

  ResidueMask k = 0;
  for (ResidueMask x : ideals) {
    if (minimal_ideal(x)) {
      k |= x;
      ++rep.minimal_left_ideals;
    }
  }
  for (std::size_t r = 0; r < p; ++r) {
    if ((k >> r) & 1U) rep.k_atoms.push_back(r);
  }
  rep.k_is_everything = k == full_mask(p);
  rep.atom_extends_iff_in_k = true;
  for (std::size_t r = 0; r < p; ++r) {
    const bool extends = std::any_of(tifs.begin(), tifs.end(), [&](const auto& f) {
      return maximal_tif(f) && ((f.generator >> r) & 1U);
    });
    rep.atom_extends_iff_in_k &= extends == static_cast<bool>((k >> r) & 1U);
  }
  return rep;
}

}  // namespace pws
