#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bimulcon/gridcurve.hpp"
#include "bimulcon/rank.hpp"

using namespace bimulcon;

namespace {
const PrimeField F(65537);
const RationalField Q;
}

TEST_CASE("grid curve form, frozen coefficients") {
  // a = b = 2, lambda = mu = {1,2}, h = u^2 + 1
  GridCurve<PrimeField> C = make_grid_curve(F, {1, 2}, {1, 2}, {1, 0, 1});
  CHECK(C.a() == 2);
  CHECK(C.b() == 2);
  CHECK(C.l == Poly<PrimeField>(F, {2, 65534, 1}));  // (u-1)(u-2)
  CHECK(C.m == Poly<PrimeField>(F, {2, 65534, 1}));
  // x0^2 y1^2 picks up l_0 - h_0 m_2 = 2 - 1
  CHECK(C.F.coefficient(ExponentVector({2, 0}), ExponentVector({0, 2})) == 1);
  // x1^2 y0^2 is -h_2 m_0 = -2
  CHECK(C.F.coefficient(ExponentVector({0, 2}), ExponentVector({2, 0})) == 65535);
}

TEST_CASE("grid curves pass through their grid") {
  GridCurve<PrimeField> C = make_grid_curve(F, {1, 2, 3}, {1, 2}, {1, 7, 3, 2});
  for (const auto& pt : C.grid.all_points())
    CHECK(C.F.field().is_zero(evaluate_biform(C.F, pt)));
  // and not through a point off the grid
  QPoint<PrimeField> off(F, {1, 0}, {1, 0});
  CHECK_FALSE(C.F.field().is_zero(evaluate_biform(C.F, off)));
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(make_grid_curve(F, {1, 2}, {1, 0}, {1, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(make_grid_curve(F, {1, 1}, {1, 2}, {1, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(make_grid_curve(F, {1, 2}, {1, 2}, {1, 1, 0}), std::domain_error);
  CHECK_THROWS_AS(make_grid_curve(F, {}, {1}, {1}), std::domain_error);
  CHECK_THROWS_AS(corner_twist(2, 2, 1), std::domain_error);
  CHECK(corner_twist(2, 2, 2) == TwistState{2, 2, 3, -3});
  CHECK(corner_twist(3, 4, 3) == TwistState{3, 4, 8, -9});
}

TEST_CASE("smoothness certificate flags failures") {
  // h with a repeated root
  GridCurve<PrimeField> dbl = make_grid_curve(F, {1, 2}, {1, 2}, {25, 65527, 1});
  SmoothnessCertificate c1 = smoothness_certificate(dbl);
  CHECK_FALSE(c1.h_squarefree);
  CHECK_FALSE(c1.certified());

  // h sharing the root u = 1 with l
  GridCurve<PrimeField> shared = make_grid_curve(F, {1, 2}, {1, 2}, {2, 65534, 1});
  SmoothnessCertificate c2 = smoothness_certificate(shared);
  CHECK(c2.h_squarefree);
  CHECK_FALSE(c2.lh_coprime);
  CHECK_FALSE(c2.certified());
}

TEST_CASE("default grid curves come certified") {
  GridCurve<PrimeField> C = default_grid_curve(F, 2, 2, 1);
  CHECK(smoothness_certificate(C).certified());
  CHECK(C.F == default_grid_curve(F, 2, 2, 1).F);  // deterministic

  GridCurve<RationalField> CQ = default_grid_curve(Q, 3, 2, 1);
  CHECK(smoothness_certificate(CQ).certified());
  CHECK(CQ.h.degree() == 3);
}

TEST_CASE("corner twist of a grid curve is square and invertible") {
  GridCurve<RationalField> C = default_grid_curve(Q, 2, 2, 1);
  TwistState tw = corner_twist(2, 2, 2);
  CohomologyResult r = h0_h1(C.F, tw.h, tw.k);
  CHECK(r.rows == 8);  // m (m-1) a b
  CHECK(r.cols == 8);
  CHECK(r.rank == 8);
  CHECK(r.h0 == 0);
  CHECK(r.h1 == 0);
}

TEST_CASE("curves by name") {
  CHECK(curve_by_name(F, "random", 2, 3, 5) == random_biform(2, 3, F, 5));
  BiForm<PrimeField> g = curve_by_name(F, "grid", 2, 2, 1);
  CHECK(g == default_grid_curve(F, 2, 2, 1).F);
  BiForm<PrimeField> deg = curve_by_name(F, "line-degenerate", 2, 2, 3);
  CHECK(deg.a() == 2);
  CHECK(deg.b() == 2);
  CohomologyResult r = h0_h1(deg, 3, -3);
  CHECK(r.h0 >= 2);
  CHECK_THROWS_AS(curve_by_name(F, "elliptic", 2, 2, 1), std::domain_error);
}
