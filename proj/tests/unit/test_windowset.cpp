#include <doctest.h>

#include "../gen.hpp"
#include "pws/windowset.hpp"

using namespace pws;

TEST_CASE("materialize") {
  CHECK(to_string(materialize(EpSet::periodic("10"), 6)) == "101010");
  CHECK(to_string(materialize(EpSet(BitWord{true}, BitWord{true, false, false}), 7)) == "1100100");
  CHECK(to_string(materialize(EpSet::empty(), 4)) == "0000");
  const std::size_t old = horizon_cap();
  set_horizon_cap(16);
  CHECK_THROWS_AS(materialize(EpSet::naturals(), 17), ResourceError);
  set_horizon_cap(old);
}

TEST_CASE("window queries stay inside the horizon") {
  const WindowSet w = WindowSet::from_string("101");
  CHECK(w.contains(3));
  CHECK_THROWS_AS(w.contains(4), HorizonError);
  CHECK_THROWS_AS(w.contains(0), HorizonError);
  CHECK_THROWS_AS(WindowSet::from_string("10x"), ParseError);
  CHECK_THROWS_AS(WindowSet::from_string(""), PreconditionError);
}

TEST_CASE("oracle_thick") {
  CHECK(oracle_thick(WindowSet::from_string("111111"), 4));
  CHECK_FALSE(oracle_thick(WindowSet::from_string("101010"), 2));
  CHECK(oracle_thick(materialize(difference(EpSet::naturals(), EpSet::finite({2})), 50), 10));
  CHECK_THROWS_AS(oracle_thick(WindowSet::from_string("11"), 3), PreconditionError);
}

TEST_CASE("oracle_gap_bound") {
  CHECK(oracle_gap_bound(WindowSet::from_string("1010101010")) == 2);
  CHECK(oracle_gap_bound(materialize(EpSet::residue(1, 5), 40)) == 5);
  CHECK(oracle_gap_bound(WindowSet::from_string("0001000000")) == 7);
  CHECK_FALSE(oracle_gap_bound(WindowSet::from_string("0000")).has_value());
}

TEST_CASE("oracle_find_ap") {
  CHECK(oracle_find_ap(WindowSet::from_string("111111111"), 2) == Progression{1, 1, 2});
  CHECK(oracle_find_ap(WindowSet::from_string("101010101"), 3) == Progression{1, 2, 3});
  CHECK_FALSE(oracle_find_ap(WindowSet::from_string("110000000"), 2).has_value());
}

TEST_CASE("shift and union of windows") {
  const WindowSet w = WindowSet::from_string("0110");
  CHECK(to_string(shift_left(w, 1)) == "110");
  CHECK(to_string(unite(w, WindowSet::from_string("100"))) == "111");
}

TEST_CASE("property: oracle verdicts are monotone in the horizon") {
  pws::testing::Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const EpSet s = pws::testing::random_epset(rng, 8, 12, 0.7);
    for (std::size_t h = 4; h < 60; h += 7) {
      const WindowSet small = materialize(s, h), big = materialize(s, h + 13);
      for (std::size_t len = 1; len <= h; ++len) {
        if (oracle_thick(small, len)) REQUIRE(oracle_thick(big, len));
      }
      if (auto ap = oracle_find_ap(small, 2)) {
        for (Nat t : ap->terms()) REQUIRE(s.contains(t));
      }
    }
  }
}
