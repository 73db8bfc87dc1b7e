#include <doctest.h>

#include "oracles.hpp"
#include "padic_fixvec/characters.hpp"
#include "padic_fixvec/errors.hpp"

using namespace padic_fixvec;

TEST_CASE("class counts by conductor") {
  CHECK(num_classes_exact(3, 1) == 1);
  CHECK(num_classes_exact(5, 3) == 80);
  CHECK(num_classes_exact(2, 1) == 0);
  CHECK(num_classes_exact(7, 0) == 1);
  CHECK(num_classes_upto(5, 3) == 100);
  CHECK(num_classes_upto(3, 1) == 2);
  CHECK(num_classes_upto(11, 0) == 1);
}

TEST_CASE("cumulative class counts are (q-1) q^{r-1}") {
  for (std::uint64_t q = 2; q <= 9; ++q)
    for (std::uint32_t r = 1; r <= 8; ++r) {
      CHECK(num_classes_upto(q, r) == BigInt(q - 1) * ipow(BigInt(q), r - 1));
      CHECK(num_classes_exact(q, r) == oracle::class_count_by_quotient(static_cast<std::int64_t>(q), r));
    }
}

TEST_CASE("class indices are range checked") {
  CHECK(make_character_class(5, 2, 15).class_index == 15);
  CHECK_THROWS_AS(make_character_class(5, 2, 16), InvalidParameter);
  CHECK_THROWS_AS(make_character_class(2, 1, 0), InvalidParameter);
}

TEST_CASE("unit group structure and discrete logs") {
  const UnitGroup g9(3, 2);
  CHECK(g9.order() == 6);
  REQUIRE(g9.generators().size() == 1);
  CHECK(g9.generator_orders()[0] == 6);

  const UnitGroup g32(2, 5);
  CHECK(g32.order() == 16);
  REQUIRE(g32.generators().size() == 2);
  CHECK(g32.generators()[0] == 31);
  CHECK(g32.generators()[1] == 5);
  // log round trip: every unit is reconstructed from its exponents
  for (std::uint64_t x = 1; x < 32; x += 2) {
    const auto l = g32.log(x);
    std::uint64_t y = 1;
    for (std::uint64_t i = 0; i < l[0]; ++i) y = y * 31 % 32;
    for (std::uint64_t i = 0; i < l[1]; ++i) y = y * 5 % 32;
    CHECK(y == x);
  }
  CHECK_THROWS_AS(g32.log(4), InvalidParameter);
  CHECK(UnitGroup(2, 1).order() == 1);
  CHECK(UnitGroup(2, 2).generators().size() == 1);
}

TEST_CASE("dual enumeration: spec examples") {
  CHECK(conductor_histogram(enumerate_unit_dual(5, 2), 2) == std::vector<std::uint64_t>{1, 3, 16});
  CHECK(conductor_histogram(enumerate_unit_dual(2, 1), 1) == std::vector<std::uint64_t>{1, 0});
  const auto d9 = enumerate_unit_dual(3, 2);
  CHECK(d9.size() == 6);
  CHECK(conductor_histogram(d9, 2) == std::vector<std::uint64_t>{1, 1, 4});
}

TEST_CASE("dual histogram matches |L_i| and the subgroup-index oracle") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint32_t r = 0; r <= 4; ++r) {
      const auto hist = conductor_histogram(enumerate_unit_dual(p, r), r);
      const auto expected = oracle::class_counts_by_index(static_cast<std::int64_t>(p), r);
      CHECK(hist == expected);
      for (std::uint32_t i = 0; i <= r; ++i) CHECK(BigInt(hist[i]) == num_classes_exact(p, i));
      CHECK(num_classes_upto(p, r) == oracle::unit_count(static_cast<std::int64_t>(p), r));
    }
  }
}

TEST_CASE("dual characters have unique ids and in-range exponents") {
  const auto dual = enumerate_unit_dual(2, 4);
  CHECK(dual.size() == 8);
  for (std::size_t i = 0; i < dual.size(); ++i) {
    CHECK(dual[i].id == i);
    CHECK(dual[i].exponents.size() == 2);
    CHECK(dual[i].exponents[0] < 2);
    CHECK(dual[i].exponents[1] < 4);
  }
  // the trivial character and the character of -1 alone both have conductor <= 2
  CHECK(dual[0].conductor == 0);
  CHECK(dual[4].conductor == 2);  // exponents (1, 0): nontrivial only on -1
}

TEST_CASE("dual enumeration respects its budget") {
  CHECK_THROWS_AS(enumerate_unit_dual(7, 8), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_unit_dual(4, 2), InvalidParameter);
}
