#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bimulcon/multiindex.hpp"

using namespace bimulcon;

TEST_CASE("binomial and compositions") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(10, 10) == 1);
  CHECK(compositions(2, 2) == 3);
  CHECK(compositions(3, 1) == 1);
  CHECK(compositions(0, 3) == 1);
  CHECK(compositions(0, 0) == 1);
  CHECK(compositions(2, 0) == 0);
}

TEST_CASE("dimension") {
  CHECK(dimension(1, 1, 2, 3) == 12);
  CHECK(dimension(2, 1, 1, 1) == 6);
  CHECK(dimension(1, 1, 0, 0) == 1);
  CHECK(dimension(1, 1, 4, 7) == 40);
  CHECK_THROWS_AS(dimension(1, 1, -1, 0), std::domain_error);
}

TEST_CASE("exponent vectors") {
  ExponentVector e({2, 0, 1});
  CHECK(e.degree() == 3);
  CHECK(e.size() == 3);
  CHECK(e[0] == 2);
  CHECK(ExponentVector::zeros(2).degree() == 0);
  CHECK_THROWS_AS(ExponentVector({-1, 0}), std::domain_error);

  ExponentVector f({1, 0, 1});
  CHECK(f.divides(e));
  CHECK_FALSE(e.divides(f));
  CHECK(e.plus(f) == ExponentVector({3, 0, 2}));
  CHECK(e.minus(f) == ExponentVector({1, 0, 0}));
  CHECK_THROWS_AS(f.minus(e), std::domain_error);
  CHECK(e.to_string("x") == "x0^2*x2");
}

TEST_CASE("exponent rank order is ascending lex") {
  // degree 1 in two variables: (0,1) comes before (1,0)
  CHECK(exponent_rank(ExponentVector({0, 1}), 1) == 0);
  CHECK(exponent_rank(ExponentVector({1, 0}), 1) == 1);
  CHECK(exponent_rank(ExponentVector({0, 2}), 2) == 0);
  CHECK(exponent_rank(ExponentVector({1, 1}), 2) == 1);
  CHECK(exponent_rank(ExponentVector({2, 0}), 2) == 2);
}

TEST_CASE("rank/unrank round trip") {
  for (int deg : {0, 1, 3})
    for (int vars : {1, 2, 3}) {
      long long count = compositions(deg, vars);
      for (long long i = 0; i < count; ++i) {
        ExponentVector e = exponent_unrank(i, deg, vars);
        CHECK(e.degree() == deg);
        CHECK(exponent_rank(e, deg) == i);
      }
      CHECK_THROWS_AS(exponent_unrank(count, deg, vars), std::out_of_range);
    }
}

TEST_CASE("basis indexer") {
  BasisIndexer basis(1, 1, 2, 3, false);
  CHECK(basis.dimension() == 12);
  CHECK(basis.x_dimension() == 3);
  CHECK(basis.y_dimension() == 4);
  for (long long i = 0; i < basis.dimension(); ++i) {
    BiMonomial mono = basis.monomial_at(i);
    CHECK(basis.index_of(mono) == i);
  }
  CHECK_THROWS_AS(basis.monomial_at(12), std::out_of_range);
  CHECK_THROWS_AS(
      basis.index_of(BiMonomial{ExponentVector({1, 0}), ExponentVector({1, 0}), false}),
      std::domain_error);
}

TEST_CASE("basis order at bidegree (1,1)") {
  BasisIndexer basis(1, 1, 1, 1, true);
  // x part is the major digit; within each part index 0 carries the last variable
  BiMonomial m0 = basis.monomial_at(0);
  CHECK(m0.x == ExponentVector({0, 1}));
  CHECK(m0.y == ExponentVector({0, 1}));
  CHECK(m0.y_dual);
  BiMonomial m1 = basis.monomial_at(1);
  CHECK(m1.x == ExponentVector({0, 1}));
  CHECK(m1.y == ExponentVector({1, 0}));
  BiMonomial m3 = basis.monomial_at(3);
  CHECK(m3.x == ExponentVector({1, 0}));
  CHECK(m3.y == ExponentVector({1, 0}));
}

TEST_CASE("indexer equality ignores the dual tag") {
  CHECK(BasisIndexer(1, 1, 2, 3, true) == BasisIndexer(1, 1, 2, 3, false));
  CHECK_FALSE(BasisIndexer(1, 1, 2, 3) == BasisIndexer(1, 1, 3, 2));
}
