#include <doctest.h>

#include "pws/quotient.hpp"

using namespace pws;

TEST_CASE("residue masks") {
  CHECK(residue_union(3, 0b001) == EpSet::residue(0, 3));
  CHECK(residue_union(3, 0b010) == EpSet::residue(1, 3));
  for (ResidueMask m = 0; m < 64; ++m) CHECK(residue_mask(6, residue_union(6, m)) == m);
  CHECK_THROWS_AS(residue_mask(3, EpSet::finite({1})), PreconditionError);
}

TEST_CASE("pseudosum") {
  CHECK(pseudosum({5, 2}, {5, 3}).residue == 0);
  for (std::size_t s = 0; s < 5; ++s) CHECK(pseudosum({5, 0}, {5, s}).residue == s);
  const QuotientUltrafilter x = pseudosum(pseudosum({5, 2}, {5, 3}), {5, 4});
  const QuotientUltrafilter y = pseudosum({5, 2}, pseudosum({5, 3}, {5, 4}));
  CHECK(x == y);
  CHECK_THROWS_AS(pseudosum({5, 1}, {4, 1}), PreconditionError);
}

TEST_CASE("filters, TIFs and left ideals at P = 4") {
  CHECK(enumerate_filters(4).size() == 15);
  CHECK(count_filters_brute_force(4) == 15);
  CHECK(count_filters_brute_force(2) == 3);
  std::size_t tifs = 0;
  for (const auto& f : enumerate_filters(4)) {
    if (is_tif(f)) {
      ++tifs;
      CHECK(f.generator == 0b1111);
    }
  }
  CHECK(tifs == 1);
  CHECK(enumerate_left_ideals(4) == std::vector<ResidueMask>{0b1111});
  CHECK_THROWS_AS(enumerate_filters(9), PreconditionError);
  CHECK_THROWS_AS(enumerate_filters(0), PreconditionError);
}

TEST_CASE("correspondence for every P up to 8") {
  for (std::size_t p = 1; p <= 8; ++p) {
    const CorrespondenceReport r = check_correspondence(p);
    CHECK(r.passed());
    CHECK(r.k_atoms.size() == p);
    CHECK(r.minimal_left_ideals == 1);
    CHECK(r.filters == (std::size_t{1} << p) - 1);
  }
}
