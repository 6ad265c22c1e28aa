#pragma once

#include <stdexcept>
#include <string>

#include "bimulcon/biform.hpp"
#include "bimulcon/rank.hpp"

namespace bimulcon {

/* arithmetic genus of a smooth curve of type (a, b) on P^1 x P^1 */
inline long long genus(int a, int b) {
  if (a < 1 || b < 1) throw std::domain_error("curve type requires a, b >= 1");
  return static_cast<long long>(a - 1) * (b - 1);
}

/* degree of O_C(h, k) on a type-(a, b) curve: the intersection number */
inline long long line_bundle_degree(int a, int b, int h, int k) {
  return static_cast<long long>(h) * b + static_cast<long long>(k) * a;
}

/* A twist O_C(h, k) on a curve of type (a, b).  The computable window is
 * h >= a, k <= -2; everything else reaches it through the moves below. */
struct TwistState {
  int a = 0, b = 0, h = 0, k = 0;
  bool operator==(const TwistState&) const = default;

  std::string to_string() const {
    return "(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
           ", h=" + std::to_string(h) + ", k=" + std::to_string(k) + ")";
  }
};

inline bool in_window(const TwistState& s) { return s.h >= s.a && s.k <= -2; }

/* O_C(h,k)^dual (x) omega_C, which exchanges h^0 and h^1 */
inline TwistState serre_dual(const TwistState& s) {
  return {s.a, s.b, s.a - 2 - s.h, s.b - 2 - s.k};
}

/* relabel the two rulings; cohomology is untouched */
inline TwistState swap_rulings(const TwistState& s) { return {s.b, s.a, s.k, s.h}; }

/* Serre dual followed by the ruling swap: maps the window into itself and
 * turns the contraction matrix into its transpose. */
inline TwistState serre_dual_swapped(const TwistState& s) {
  return swap_rulings(serre_dual(s));
}

struct CohomologyResult {
  long long h0 = 0, h1 = 0;
  long long degree = 0;  // of the twist on the curve
  long long genus = 0;
  long long rows = 0, cols = 0, rank = 0;

  long long euler() const { return h0 - h1; }
};

/* h^0 and h^1 of O_C(h, k) for the curve C = {F = 0}, F of bidegree (a, b),
 * read off the multiplication-contraction matrix in the window h >= a,
 * k <= -2: h^0 is its kernel, h^1 its cokernel. */
template <class K>
CohomologyResult h0_h1(const BiForm<K>& F, int h, int k) {
  if (F.m() != 1 || F.n() != 1)
    throw std::domain_error("h0_h1 handles curves on P^1 x P^1 only");
  if (F.is_zero()) throw std::domain_error("the zero form does not cut out a curve");
  const int a = F.a(), b = F.b();
  if (a < 1 || b < 1) throw std::domain_error("curve type requires a, b >= 1");
  if (h < a || k > -2)
    throw std::domain_error("twist " + TwistState{a, b, h, k}.to_string() +
                            " is outside the window h >= a, k <= -2; move it there "
                            "with serre_dual / swap_rulings first");
  MapMatrix<K> M = build_mulcon_matrix(F, h - a, b - 2 - k);
  CohomologyResult res;
  res.rows = M.rows();
  res.cols = M.cols();
  res.rank = matrix_rank(M);
  res.h0 = res.cols - res.rank;
  res.h1 = res.rows - res.rank;
  res.degree = line_bundle_degree(a, b, h, k);
  res.genus = genus(a, b);
  if (res.euler() != res.degree + 1 - res.genus)
    throw std::logic_error("Euler characteristic mismatch for twist " +
                           TwistState{a, b, h, k}.to_string());
  return res;
}

struct RoutedCohomology {
  CohomologyResult computed;  // for the in-window twist actually evaluated
  TwistState used;
  std::string route;  // direct | swap_rulings | serre_dual | serre_dual_swap
  long long h0 = 0, h1 = 0;  // for the requested twist
};

/* h0_h1 for any twist that swapping rulings and/or Serre duality can move
 * into the window; throws a domain_error otherwise. */
template <class K>
RoutedCohomology h0_h1_routed(const BiForm<K>& F, int h, int k) {
  TwistState want{F.a(), F.b(), h, k};
  RoutedCohomology out;
  bool swapped = false, dualized = false;
  if (in_window(want)) {
    out.used = want;
    out.route = "direct";
  } else if (in_window(swap_rulings(want))) {
    out.used = swap_rulings(want);
    out.route = "swap_rulings";
    swapped = true;
  } else if (in_window(serre_dual(want))) {
    out.used = serre_dual(want);
    out.route = "serre_dual";
    dualized = true;
  } else if (in_window(serre_dual_swapped(want))) {
    out.used = serre_dual_swapped(want);
    out.route = "serre_dual_swap";
    swapped = true;
    dualized = true;
  } else {
    throw std::domain_error("twist " + want.to_string() +
                            " cannot be moved into the window h >= a, k <= -2 by "
                            "swapping rulings and/or Serre duality");
  }
  out.computed = swapped ? h0_h1(swap_rulings_form(F), out.used.h, out.used.k)
                         : h0_h1(F, out.used.h, out.used.k);
  out.h0 = dualized ? out.computed.h1 : out.computed.h0;
  out.h1 = dualized ? out.computed.h0 : out.computed.h1;
  return out;
}

struct VanishingCheck {
  Certificate certificate;
  long long h0_generic = 0;  // valid when certified
  long long h1_generic = 0;

  bool holds() const { return certificate.certified(); }
};

/* Certify that for the generic curve of type (a, b) the twist O_C(h, k) has
 * h^0 = 0 or h^1 = 0 (whichever the Euler characteristic forces), by finding
 * one full-rank witness of the contraction matrix. */
inline VanishingCheck h0_or_h1_vanishes(std::uint64_t prime, int a, int b, int h, int k,
                                        std::uint64_t base_seed = 1, int max_trials = 3) {
  if (a < 1 || b < 1) throw std::domain_error("curve type requires a, b >= 1");
  if (h < a || k > -2)
    throw std::domain_error("twist " + TwistState{a, b, h, k}.to_string() +
                            " is outside the window h >= a, k <= -2");
  VanishingCheck chk;
  chk.certificate = generic_rank_certificate(PrimeField(prime), a, b, h - a, b - 2 - k,
                                             base_seed, max_trials);
  chk.h0_generic = std::max(0LL, chk.certificate.cols - chk.certificate.rows);
  chk.h1_generic = std::max(0LL, chk.certificate.rows - chk.certificate.cols);
  return chk;
}

}  // namespace bimulcon
