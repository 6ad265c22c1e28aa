#include "bimulcon/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace bimulcon {

CriticalBand critical_band(int a, int b) {
  if (a < 2 || b < 2) throw std::domain_error("critical band needs a, b >= 2");
  long long hi = static_cast<long long>(a) * b - a - b;
  return CriticalBand{hi - std::min(a, b), hi};
}

Decomposition decompose(int a, int b, int h, int k) {
  if (a < 1 || b < 1) throw std::domain_error("decompose needs a, b >= 1");
  auto floor_mod = [](long long v, long long md) {
    long long r = v % md;
    return r < 0 ? r + md : r;
  };
  Decomposition dec;
  dec.alpha = static_cast<int>(floor_mod(h + 1LL, a)) - 1;
  dec.m = static_cast<int>((h - dec.alpha) / a);
  dec.beta = static_cast<int>(floor_mod(k + 1LL, b)) - 1;
  dec.n = static_cast<int>((static_cast<long long>(dec.beta) - k) / b);
  return dec;
}

TwistState recompose(int a, int b, const Decomposition& dec) {
  return TwistState{a, b, dec.m * a + dec.alpha, dec.beta - dec.n * b};
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::SwapRulings: return "swap_rulings";
    case StepKind::SerreDualSwap: return "serre_dual_swap";
    case StepKind::Grow: return "grow";
  }
  return "?";
}

const char* to_string(TwistKind k) {
  switch (k) {
    case TwistKind::Trivial: return "trivial";
    case TwistKind::Interior: return "interior";
    case TwistKind::Corner: return "corner";
    case TwistKind::NonCritical: return "non-critical";
  }
  return "?";
}

const char* to_string(NonCriticalSide s) {
  return s == NonCriticalSide::Dual ? "dual" : "growth";
}

namespace {

bool is_interior(const Decomposition& d) {
  return d.m == d.n && d.alpha >= 0 && d.beta >= 0;
}

bool is_corner(const Decomposition& d) {
  return d.m == d.n + 1 && d.alpha == -1 && d.beta == -1;
}

ReductionResult finish(ReductionResult res, const TwistState& s,
                       const Decomposition& dec) {
  res.kind = is_interior(dec) ? TwistKind::Interior : TwistKind::Corner;
  res.final_state = s;
  res.decomposition = dec;
  res.d = line_bundle_degree(s.a, s.b, s.h, s.k);
  res.g = genus(s.a, s.b);
  return res;
}

}  // namespace

ReductionResult classify(int a, int b, int h, int k) {
  if (a < 1 || b < 1) throw std::domain_error("classify needs a curve type a, b >= 1");
  ReductionResult res;
  res.input = TwistState{a, b, h, k};
  if (a == 1 || b == 1) {
    /* sections restrict from the ambient quadric; nothing to certify */
    res.kind = TwistKind::Trivial;
    res.final_state = res.input;
    res.d = line_bundle_degree(a, b, h, k);
    res.g = genus(a, b);
    return res;
  }

  TwistState s = res.input;
  if (!in_window(s)) {
    TwistState sw = swap_rulings(s);
    if (in_window(sw)) {
      s = sw;
      res.chain.push_back(ReductionStep{StepKind::SwapRulings, s});
    } else {
      res.kind = TwistKind::NonCritical;
      res.final_state = s;
      res.d = line_bundle_degree(s.a, s.b, s.h, s.k);
      res.g = genus(s.a, s.b);
      res.side = res.d >= res.g ? NonCriticalSide::Dual : NonCriticalSide::Growth;
      return res;
    }
  }

  if (line_bundle_degree(s.a, s.b, s.h, s.k) >= genus(s.a, s.b)) {
    s = serre_dual_swapped(s);
    res.chain.push_back(ReductionStep{StepKind::SerreDualSwap, s});
  }

  Decomposition dec = decompose(s.a, s.b, s.h, s.k);
  if (is_interior(dec) || is_corner(dec)) return finish(std::move(res), s, dec);

  /* climb the degree into the critical band in steps of min(a, b); growing h
   * raises the degree by b, growing k raises it by a */
  CriticalBand band = critical_band(s.a, s.b);
  while (line_bundle_degree(s.a, s.b, s.h, s.k) <= band.lo) {
    if (s.a < s.b)
      ++s.k;
    else
      ++s.h;
    res.chain.push_back(ReductionStep{StepKind::Grow, s});
  }
  dec = decompose(s.a, s.b, s.h, s.k);
  if (!is_interior(dec) && !is_corner(dec))
    throw std::logic_error("band dichotomy failed at " + s.to_string());
  return finish(std::move(res), s, dec);
}

}  // namespace bimulcon
