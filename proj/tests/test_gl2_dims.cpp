#include <doctest.h>

#include "oracles.hpp"
#include "padic_fixvec/cosets.hpp"
#include "padic_fixvec/errors.hpp"
#include "padic_fixvec/gl2_dims.hpp"

using namespace padic_fixvec;

TEST_CASE("delta indicator") {
  CHECK(delta_leq(0, 0) == 1);
  CHECK(delta_leq(2, 1) == 0);
  CHECK(delta_leq(1, 1) == 1);
}

TEST_CASE("principal series") {
  CHECK(dim_principal_series(3, 0, 0, 1) == 4);
  CHECK(dim_principal_series(3, 2, 0, 1) == 0);
  CHECK(dim_principal_series(2, 1, 1, 2) == 6);
  CHECK_THROWS_AS(dim_principal_series(3, 0, 0, 0), InvalidParameter);
  CHECK_THROWS_AS(dim_principal_series(6, 0, 0, 1), InvalidParameter);
}

TEST_CASE("principal series is the Borel coset count times block dimensions") {
  for (auto [p, r] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    const auto orbits = oracle::coset_count_by_orbits({1, 1}, static_cast<std::int64_t>(p), r);
    CHECK(dim_principal_series(p, 0, 0, r) == orbits);
    const std::vector<BigInt> ones{1, 1};
    CHECK(dim_induced_general(Partition{1, 1}, p, r, ones) == orbits);
  }
}

TEST_CASE("twisted Steinberg") {
  CHECK(dim_steinberg_twist(3, 0, 1) == 3);
  CHECK(dim_steinberg_twist(2, 0, 2) == 5);
  CHECK(dim_steinberg_twist(3, 2, 1) == 0);
}

TEST_CASE("exact sequence: principal series = Steinberg + character") {
  for (std::uint64_t q : {2, 3, 4, 5, 7})
    for (std::uint32_t c = 0; c <= 6; ++c)
      for (std::uint32_t r = 1; r <= 6; ++r)
        CHECK(dim_principal_series(q, c, c, r) - dim_steinberg_twist(q, c, r) == delta_leq(c, r));
}

TEST_CASE("twisted conductor of a minimal supercuspidal") {
  CHECK(twisted_conductor_minimal(4, 1) == 4);
  CHECK(twisted_conductor_minimal(3, 2) == 4);
  CHECK(twisted_conductor_minimal(2, 0) == 2);
  CHECK(twisted_conductor_minimal(4, 2) == 4);
  CHECK_THROWS_AS(twisted_conductor_minimal(1, 0), InvalidParameter);
}

TEST_CASE("minimal supercuspidal closed form") {
  CHECK(dim_supercuspidal_minimal(3, 2, 1) == 2);
  CHECK(dim_supercuspidal_minimal(3, 3, 2) == 8);
  CHECK(dim_supercuspidal_minimal(2, 2, 2) == 4);
  CHECK(dim_supercuspidal_minimal(3, 4, 1) == 0);
  CHECK(dim_supercuspidal_minimal(3, 3, 0) == 0);
  CHECK_THROWS_AS(dim_supercuspidal_minimal(3, 1, 4), InvalidParameter);
}

TEST_CASE("lattice count") {
  CHECK(dim_supercuspidal_lattice(2, 2, 2) == 4);
  CHECK(dim_supercuspidal_lattice(3, 2, 1) == 2);
  CHECK(dim_supercuspidal_lattice(3, 4, 1) == 0);
  CHECK_THROWS_AS(dim_supercuspidal_lattice(3, 2, 0), InvalidParameter);
}

TEST_CASE("closed form, lattice count and oracle agree") {
  for (std::uint64_t q : {2, 3, 4, 5, 7})
    for (std::uint32_t s = 2; s <= 8; ++s)
      for (std::uint32_t m = 1; m <= 8; ++m) {
        const BigInt closed = dim_supercuspidal_minimal(q, s, m);
        CHECK(closed == dim_supercuspidal_lattice(q, s, m));
        CHECK(closed == oracle::supercuspidal_dim_by_lattice(static_cast<std::int64_t>(q), s, m));
      }
}

TEST_CASE("dimension at the minimal level") {
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const BigInt bq(q);
    for (std::uint32_t r = 1; r <= 4; ++r) {
      CHECK(dim_supercuspidal_minimal(q, 2 * r, r) == (bq - 1) * ipow(bq, r - 1));
      CHECK(dim_supercuspidal_minimal(q, 2 * r + 1, r + 1) == (bq + 1) * (bq - 1) * ipow(bq, r - 1));
    }
  }
}

TEST_CASE("non-minimal supercuspidals reduce to the minimal twist") {
  CHECK(dim_supercuspidal(3, 2, 1, 1) == 2);
  CHECK(dim_supercuspidal(3, 2, 2, 1) == 0);
  CHECK(dim_supercuspidal(3, 3, 0, 2) == 8);
  CHECK(dim_supercuspidal(3, 2, 2, 2) == dim_supercuspidal_minimal(3, 2, 2));
}

TEST_CASE("Kirillov basis") {
  const auto b = kirillov_basis(3, 2, 0, 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == KirillovBasisElement{{0, 0}, 1});
  CHECK(b[1] == KirillovBasisElement{{1, 0}, 1});
  CHECK(kirillov_basis(2, 2, 0, 2).size() == 4);
  CHECK(kirillov_basis(3, 4, 0, 1).empty());
  CHECK_THROWS_AS(kirillov_basis(3, 2, 0, -1), InvalidParameter);
}

TEST_CASE("Kirillov basis: additive conductor shifts the support window") {
  for (std::int64_t c_psi : {-2, -1, 0, 1, 3}) {
    const auto shifted = kirillov_basis(5, 3, c_psi, 2);
    const auto base = kirillov_basis(5, 3, 0, 2);
    REQUIRE(shifted.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(shifted[i].lambda == base[i].lambda);
      CHECK(shifted[i].m_support == base[i].m_support + c_psi);
    }
  }
  // r = -c_psi is allowed and has no characters of negative conductor
  CHECK(kirillov_basis(5, 3, 2, -2).empty());
}

TEST_CASE("Kirillov basis elements satisfy the support conditions") {
  const std::int64_t r = 3;
  for (const auto& e : kirillov_basis(4, 5, 0, r)) {
    CHECK(e.lambda.conductor <= r);
    CHECK(BigInt(e.lambda.class_index) < num_classes_exact(4, e.lambda.conductor));
    CHECK(twisted_conductor_minimal(5, e.lambda.conductor) - r <= e.m_support);
    CHECK(e.m_support <= r);
  }
  CHECK(BigInt(kirillov_basis(4, 5, 0, r).size()) == dim_supercuspidal_lattice(4, 5, 3));
}

TEST_CASE("Kirillov basis materialization cap") {
  CHECK_THROWS_AS(kirillov_basis(7, 2, 0, 4, 100), BudgetExceeded);
  std::uint64_t seen = 0;
  const auto n = for_each_kirillov_basis_element(7, 2, 0, 4, [&](const KirillovBasisElement&) { ++seen; });
  CHECK(n == seen);
  CHECK(BigInt(n) == dim_supercuspidal_lattice(7, 2, 4));
}

TEST_CASE("dim_gl2 dispatch, including level 0") {
  CHECK(dim_gl2(PrincipalSeries{0, 0}, 5, 0) == 1);
  CHECK(dim_gl2(PrincipalSeries{1, 0}, 5, 0) == 0);
  CHECK(dim_gl2(SteinbergTwist{0}, 5, 0) == 0);
  CHECK(dim_gl2(Supercuspidal{2, 0}, 3, 1) == 2);
  CHECK(dim_gl2(Supercuspidal{2, 0}, 3, 0) == 0);
  CHECK(dim_gl2(PrincipalSeries{0, 0}, 3, 1) == 4);
  CHECK(dim_gl2(SteinbergTwist{0}, 3, 1) == 3);
  CHECK(dim_gl2_branch(Supercuspidal{3, 0}, 2).name == "supercuspidal/minimal");
  CHECK(dim_gl2_branch(Supercuspidal{3, 2}, 2).name == "supercuspidal/twist-reduced");
  CHECK(dim_gl2_branch(Supercuspidal{4, 0}, 1).name == "supercuspidal/vanishing");
}

TEST_CASE("dimensions never decrease with the level") {
  for (std::uint64_t q : {2, 3, 5})
    for (std::uint32_t m = 0; m < 8; ++m) {
      for (std::uint32_t s = 2; s <= 8; ++s)
        for (std::uint32_t c = 0; c <= 6; ++c)
          CHECK(dim_gl2(Supercuspidal{s, c}, q, m) <= dim_gl2(Supercuspidal{s, c}, q, m + 1));
      for (std::uint32_t c = 0; c <= 6; ++c) {
        CHECK(dim_gl2(SteinbergTwist{c}, q, m) <= dim_gl2(SteinbergTwist{c}, q, m + 1));
        CHECK(dim_gl2(PrincipalSeries{c, 6 - c}, q, m) <= dim_gl2(PrincipalSeries{c, 6 - c}, q, m + 1));
      }
    }
}

TEST_CASE("square integrable GL_2 representations vanish exactly above c = 2m") {
  for (std::uint32_t m = 0; m <= 6; ++m) {
    for (std::uint32_t s = 2; s <= 8; ++s)
      for (std::uint32_t c = 0; c <= 6; ++c) {
        const GL2Representation sc = Supercuspidal{s, c};
        CHECK((dim_gl2(sc, 3, m) > 0) == (conductor_gl2(sc) <= 2 * m));
      }
    for (std::uint32_t c = 0; c <= 6; ++c) {
      const GL2Representation st = SteinbergTwist{c};
      CHECK((dim_gl2(st, 3, m) > 0) == (conductor_gl2(st) <= 2 * m));
    }
  }
}

TEST_CASE("induced dimension") {
  const std::vector<BigInt> ones2{1, 1}, ones3{1, 1, 1};
  CHECK(dim_induced_general(Partition{1, 1}, 3, 1, ones2) == 4);
  CHECK(dim_induced_general(Partition{1, 1, 1}, 2, 1, ones3) == 21);
  const std::vector<BigInt> seven{7};
  CHECK(dim_induced_general(Partition{3}, 5, 2, seven) == 7);
  CHECK(dim_induced_general(Partition{1, 1}, 3, 0, ones2) == 1);
  CHECK_THROWS_AS(dim_induced_general(Partition{1, 1}, 3, 1, ones3), InvalidParameter);
}
