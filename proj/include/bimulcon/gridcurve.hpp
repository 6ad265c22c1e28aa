#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "bimulcon/biform.hpp"
#include "bimulcon/cohomology.hpp"
#include "bimulcon/grid.hpp"
#include "bimulcon/polynomial.hpp"

namespace bimulcon {

/* Curve F = L(x) y1^b - H(x) M(y) with
 *   L = prod_i (x1 - lambda_i x0),  M = prod_j (y1 - mu_j y0),
 *   H = sum_i h_i x0^{a-i} x1^i  of exact degree a;
 * it contains the full lambda x mu grid, which is what the corner-case
 * vanishing arguments consume. */
template <class K>
struct GridCurve {
  BiForm<K> F;
  Grid<K> grid;
  Poly<K> l, m, h;  // dehomogenized building blocks in u = x1/x0, v = y1/y0

  int a() const { return F.a(); }
  int b() const { return F.b(); }
};

template <class K>
BiForm<K> grid_curve_form(const K& field, const Poly<K>& l, const Poly<K>& m,
                          const Poly<K>& h) {
  const int a = l.degree(), b = m.degree();
  if (a < 1 || b < 1) throw std::domain_error("grid curve needs degrees a, b >= 1");
  if (h.degree() != a)
    throw std::domain_error("h must have degree exactly a = " + std::to_string(a));
  BiForm<K> F(a, b, field);
  for (int i = 0; i <= a; ++i)
    F.add_term(ExponentVector({a - i, i}), ExponentVector({0, b}), l.coeff(i));
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j)
      F.add_term(ExponentVector({a - i, i}), ExponentVector({b - j, j}),
                 field.neg(field.mul(h.coeff(i), m.coeff(j))));
  return F;
}

template <class K>
GridCurve<K> make_grid_curve(const K& field,
                             const std::vector<typename K::Element>& lambda,
                             const std::vector<typename K::Element>& mu,
                             const std::vector<typename K::Element>& h_coeffs) {
  for (const auto& v : mu)
    if (field.is_zero(v)) throw std::domain_error("mu values must be nonzero");
  Grid<K> grid(field, lambda, mu);  // also enforces distinctness
  Poly<K> l = Poly<K>::from_roots(field, lambda);
  Poly<K> m = Poly<K>::from_roots(field, mu);
  Poly<K> h(field, h_coeffs);
  BiForm<K> F = grid_curve_form(field, l, m, h);
  return GridCurve<K>{std::move(F), std::move(grid), std::move(l), std::move(m),
                      std::move(h)};
}

/* Sufficient smoothness test for the affine model f = l(u) v^b - h(u) m(v)
 * and its boundary charts.  All four flags holding certifies the curve is
 * smooth; a failure only means this particular witness wasn't certified. */
struct SmoothnessCertificate {
  bool h_squarefree = false;
  bool lh_coprime = false;
  bool resultant_nonzero = false;      // Res_u(f, f_u) not identically zero
  bool critical_values_clear = false;  // that resultant avoids v m'(v) = b m(v)

  bool certified() const {
    return h_squarefree && lh_coprime && resultant_nonzero && critical_values_clear;
  }
};

template <class K>
SmoothnessCertificate smoothness_certificate(const GridCurve<K>& C) {
  const K& fld = C.F.field();
  const int a = C.a(), b = C.b();
  SmoothnessCertificate cert;
  cert.h_squarefree = is_squarefree(C.h);
  cert.lh_coprime = poly_gcd(C.l, C.h).degree() == 0;
  if (!cert.h_squarefree || !cert.lh_coprime) return cert;

  /* u-coefficients of f and f_u as polynomials in v */
  Poly<K> vb = Poly<K>::monomial(fld, b);  // v^b
  std::vector<Poly<K>> fu_coeffs, f_coeffs;
  for (int i = 0; i <= a; ++i)
    f_coeffs.push_back(
        vb.times_scalar(C.l.coeff(i)).minus(C.m.times_scalar(C.h.coeff(i))));
  for (int i = 1; i <= a; ++i)
    fu_coeffs.push_back(f_coeffs[static_cast<std::size_t>(i)].times_scalar(
        fld.from_int(i)));
  Poly<K> R = resultant_u(fld, f_coeffs, fu_coeffs, b * (2 * a - 1));
  cert.resultant_nonzero = R.degree() >= 0;
  if (!cert.resultant_nonzero) return cert;

  Poly<K> T = C.m.derivative()
                  .times(Poly<K>::monomial(fld, 1))
                  .minus(C.m.times_scalar(fld.from_int(b)));
  cert.critical_values_clear = poly_gcd(R, T).degree() == 0;
  return cert;
}

/* The twist (h, k) = (m a - 1, b - 1 - m b) whose contraction matrix on a
 * grid curve is square of size m (m - 1) a b. */
inline TwistState corner_twist(int a, int b, int m) {
  if (m < 2) throw std::domain_error("corner twist needs m >= 2");
  return TwistState{a, b, m * a - 1, b - 1 - m * b};
}

/* Deterministic certified curve on the grid 1..a x 1..b: retries random h of
 * degree a with coefficients in [1, 100] until the smoothness test passes. */
template <class K>
GridCurve<K> default_grid_curve(const K& field, int a, int b, std::uint64_t seed = 1,
                                int max_attempts = 64) {
  if (a < 1 || b < 1) throw std::domain_error("grid curve needs a, b >= 1");
  std::vector<typename K::Element> lambda, mu;
  for (int i = 1; i <= a; ++i) lambda.push_back(field.from_int(i));
  for (int j = 1; j <= b; ++j) mu.push_back(field.from_int(j));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<typename K::Element> h_coeffs;
    for (int i = 0; i <= a; ++i)
      h_coeffs.push_back(field.from_int(1 + static_cast<long long>(rng() % 100)));
    GridCurve<K> C = make_grid_curve(field, lambda, mu, h_coeffs);
    if (smoothness_certificate(C).certified()) return C;
  }
  throw std::runtime_error("no certified grid curve found; raise max_attempts");
}

/* The curve families the CLI and bindings offer:
 *   random          dense random form of bidegree (a, b)
 *   grid            certified grid curve through the 1..a x 1..b grid
 *   line-degenerate y0 times a random (a, b-1) form; a reducible negative
 *                   control whose cohomology jumps */
template <class K>
BiForm<K> curve_by_name(const K& field, const std::string& kind, int a, int b,
                        std::uint64_t seed) {
  if (kind == "random") return random_biform(a, b, field, seed);
  if (kind == "grid") return default_grid_curve(field, a, b, seed).F;
  if (kind == "line-degenerate") {
    if (b < 1) throw std::domain_error("line-degenerate curve needs b >= 1");
    BiForm<K> y0(0, 1, field);
    y0.add_term(ExponentVector({0, 0}), ExponentVector({1, 0}), field.one());
    return multiply_biforms(y0, random_biform(a, b - 1, field, seed));
  }
  throw std::domain_error("unknown curve kind '" + kind +
                          "' (expected random, grid or line-degenerate)");
}

}  // namespace bimulcon
