#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimulcon/cohomology.hpp"

namespace bimulcon {

/* Degrees d with ab - a - b - min(a,b) < d <= ab - a - b.  Growth steps move
 * the twist degree upward in increments of min(a, b), so a climb from below
 * always lands inside. */
struct CriticalBand {
  long long lo = 0;  // exclusive
  long long hi = 0;  // inclusive

  bool contains(long long d) const { return lo < d && d <= hi; }
};

CriticalBand critical_band(int a, int b);

/* h = m a + alpha with alpha in [-1, a-2];  k = beta - n b with beta in
 * [-1, b-2].  Twists inside the critical band satisfy a dichotomy: either
 * m = n with alpha, beta >= 0, or m = n + 1 with alpha = beta = -1. */
struct Decomposition {
  int alpha = 0;
  int m = 0;
  int beta = 0;
  int n = 0;
  bool operator==(const Decomposition&) const = default;
};

Decomposition decompose(int a, int b, int h, int k);
TwistState recompose(int a, int b, const Decomposition& dec);

enum class StepKind { SwapRulings, SerreDualSwap, Grow };

const char* to_string(StepKind k);

struct ReductionStep {
  StepKind kind;
  TwistState after;
  bool operator==(const ReductionStep&) const = default;
};

enum class TwistKind { Trivial, Interior, Corner, NonCritical };

const char* to_string(TwistKind k);

enum class NonCriticalSide { Dual, Growth };

const char* to_string(NonCriticalSide s);

/* Route an arbitrary twist to one of the two critical shapes (or report that
 * no routing applies).  Every step preserves the pair {h^0, h^1} up to
 * swapping, so vanishing statements transport back along the chain. */
struct ReductionResult {
  TwistKind kind = TwistKind::NonCritical;
  TwistState input;
  TwistState final_state;
  std::vector<ReductionStep> chain;
  std::optional<Decomposition> decomposition;  // set for Interior / Corner
  std::optional<NonCriticalSide> side;         // set for NonCritical
  long long d = 0;  // degree of the final twist
  long long g = 0;  // genus of the final curve type
};

ReductionResult classify(int a, int b, int h, int k);

}  // namespace bimulcon
