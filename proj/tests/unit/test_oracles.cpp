#include "doctest.h"
#include "oracles/oracles.hpp"

using namespace qadm;

// Hand-checkable values for the reference computations themselves.
TEST_SUITE("oracles") {
  TEST_CASE("quotient dimensions") {
    const MPoly x = MPoly::var("x"), y = MPoly::var("y");
    CHECK(oracle::quotient_dim({x, y}) == 1);
    CHECK(oracle::quotient_dim({x.pow(3), y.pow(2)}) == 6);
    CHECK(oracle::quotient_dim({x * y, x.pow(2) + y.pow(2)}) == 4);
    CHECK(oracle::is_monomial_basis({x.pow(2), y}, {MPoly(1), x}));
    CHECK_FALSE(oracle::is_monomial_basis({x.pow(2), y}, {MPoly(1), y}));
  }

  TEST_CASE("Tjurina numbers of small germs") {
    CHECK(oracle::tjurina_dim(SingType::A(1)) == 1);
    CHECK(oracle::tjurina_dim(SingType::A(4)) == 4);
    CHECK(oracle::tjurina_dim(SingType::D(4)) == 4);
    CHECK(oracle::tjurina_dim(SingType::D(2)) == 2);
  }

  TEST_CASE("delta from parametrizations") {
    CHECK(oracle::brute_force_delta(SingType::A(1)) == 1);  // node
    CHECK(oracle::brute_force_delta(SingType::A(2)) == 1);  // cusp
    CHECK(oracle::brute_force_delta(SingType::A(3)) == 2);  // tacnode
    CHECK(oracle::brute_force_delta(SingType::D(4)) == 3);  // ordinary triple point
    CHECK(oracle::brute_force_delta(SingType::D(1)) == 0);
  }

  TEST_CASE("brute-force strata on tiny cases") {
    // Three points at weight 1/2: the smooth cover and one double point.
    CHECK(oracle::brute_force_strata_count(2, {Rational(1, 2), std::nullopt, 3}) == 2);
    // Four points at weight 1/2: profiles 1111, 211, 22 on one component, and
    // a tail carrying 111 or 21 next to a single point.
    CHECK(oracle::brute_force_strata_count(3, {Rational(1, 2), std::nullopt, 4}) == 5);
  }
}
