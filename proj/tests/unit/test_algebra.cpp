#include <doctest.h>

#include "../gen.hpp"
#include "pws/algebra.hpp"
#include "pws/combinatorics.hpp"

using namespace pws;

namespace {

const EpSet odds = EpSet::periodic("10");

EpSet noisy_res03() { return EpSet(BitWord{true, false, true, true}, EpSet::residue(0, 3).period()); }

}  // namespace

TEST_CASE("finite sets of indices") {
  CHECK(finite_set_of_index(1) == std::vector<Nat>{1});
  CHECK(finite_set_of_index(5) == std::vector<Nat>{1, 3});
  CHECK(finite_set_of_index(6) == std::vector<Nat>{2, 3});
}

TEST_CASE("cantor pairing round trip") {
  for (Nat z = 0; z < 5000; ++z) {
    const auto [x, y] = cantor_unpair(z);
    REQUIRE(cantor_pair(x, y) == z);
  }
  CHECK(cantor_unpair(cantor_pair(123456, 654321)) == std::pair<Nat, Nat>{123456, 654321});
}

TEST_CASE("generator order") {
  CHECK(decode_generator(1, 1) == GeneratorIndex{1, 0});
  CHECK(decode_generator(2, 1) == GeneratorIndex{1, 1});
  CHECK(decode_generator(7, 1) == GeneratorIndex{1, 6});
  // Two roots: (1,0), (1,1), (2,0), (1,2), (2,1), ...
  CHECK(decode_generator(1, 2) == GeneratorIndex{1, 0});
  CHECK(decode_generator(2, 2) == GeneratorIndex{1, 1});
  CHECK(decode_generator(3, 2) == GeneratorIndex{2, 0});
  CHECK(decode_generator(4, 2) == GeneratorIndex{1, 2});
  CHECK(decode_generator(5, 2) == GeneratorIndex{2, 1});
  for (std::size_t r = 1; r <= 5; ++r) {
    for (Nat i = 1; i < 500; ++i) REQUIRE(encode_generator(decode_generator(i, r), r) == i);
  }
  const SetAlgebra alg({odds, EpSet::residue(0, 3)});
  CHECK(alg.generator(1) == odds);
  CHECK(alg.generator(2) == shift_left(odds, 1));
  CHECK(alg.generator(encode_generator({2, 0}, 2)) == EpSet::residue(0, 3));
}

TEST_CASE("clauses and elements") {
  const SetAlgebra alg({EpSet::residue(0, 3)});
  const EpSet a = EpSet::residue(0, 3);
  // clause 1: F_1 = {1}, positive; clause 3: F_1, complemented; clause 4: F_3 = {1,2}.
  CHECK(alg.clause(1) == a);
  CHECK(alg.clause(3) == complement(a));
  CHECK(alg.clause(4) == intersect(a, shift_left(a, 1)));
  CHECK(alg.element(1) == a);
  CHECK(alg.element(4) == complement(a));
  CHECK(alg.element(3) == unite(a, shift_left(a, 1)));
  CHECK(alg.element(5) == EpSet::naturals());
  CHECK_THROWS_AS(alg.element(0), PreconditionError);
}

TEST_CASE("atoms partition ℕ and decide membership") {
  const SetAlgebra alg({noisy_res03()});
  EpSet all = EpSet::empty();
  for (std::size_t i = 0; i < alg.atoms().size(); ++i) {
    CHECK(is_empty(intersect(all, alg.atoms()[i])));
    all = unite(all, alg.atoms()[i]);
    if (i > 0) CHECK(min_element(alg.atoms()[i - 1]) < min_element(alg.atoms()[i]));
  }
  CHECK(all == EpSet::naturals());
  for (Nat n = 0; n < 12; ++n) CHECK(alg.contains(shift_left(noisy_res03(), n)));
  CHECK_FALSE(alg.contains(EpSet::residue(0, 5)));
  CHECK_FALSE(alg.contains(odds));
}

TEST_CASE("index_of") {
  const SetAlgebra alg({odds});
  const auto i = alg.index_of(alg.element(7), 1000);
  REQUIRE(i.has_value());
  CHECK(*i <= 7);
  const auto n = alg.index_of(EpSet::naturals(), 1000);
  REQUIRE(n.has_value());
  CHECK(alg.element(*n) == EpSet::naturals());
  CHECK_FALSE(alg.index_of(EpSet::residue(0, 3), 500).has_value());
}

TEST_CASE("ℕ and ∅ appear early") {
  const SetAlgebra alg({odds});
  bool seen_all = false, seen_none = false;
  for (Nat n = 1; n <= 64; ++n) {
    seen_all |= alg.element(n) == EpSet::naturals();
    seen_none |= is_empty(alg.element(n));
  }
  CHECK(seen_all);
  CHECK(seen_none);
}

TEST_CASE("property: closure of the enumeration") {
  const SetAlgebra alg({noisy_res03()});
  pws::testing::Rng rng(17);
  std::uniform_int_distribution<Nat> pick(1, 100);
  for (int trial = 0; trial < 60; ++trial) {
    const Nat m = pick(rng), n = pick(rng);
    const EpSet x = alg.element(m), y = alg.element(n);
    // Union of the clause lists: element(m | n).
    CHECK(alg.index_of(unite(x, y), m | n).has_value());
    CHECK(alg.contains(intersect(x, y)));
    CHECK(alg.contains(complement(x)));
    CHECK(alg.contains(shift_left(x, 1)));
  }
}

TEST_CASE("determinism") {
  const SetAlgebra a({noisy_res03(), odds});
  const SetAlgebra b({noisy_res03(), odds});
  for (Nat n = 1; n <= 10000; ++n) REQUIRE(a.element(n) == b.element(n));
}
