#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimulcon/biform.hpp"
#include "bimulcon/field.hpp"
#include "bimulcon/matrix.hpp"

namespace bimulcon {

struct RankProfile {
  long long rank = 0;
  long long kernel_dim = 0;    // cols - rank
  long long cokernel_dim = 0;  // rows - rank
};

namespace detail {

long long rank_dense(const PrimeField& f, long long rows, long long cols,
                     const std::vector<Triplet<PrimeField>>& entries);
long long rank_sparse(const PrimeField& f, long long rows, long long cols,
                      const std::vector<Triplet<PrimeField>>& entries);
long long rank_bareiss_integer(std::vector<std::vector<BigInt>> M);

/* below this many dense cells, skip the sparse bookkeeping entirely */
inline constexpr long long kDenseCellLimit = 256 * 256;

}  // namespace detail

long long matrix_rank(const MapMatrix<PrimeField>& M);
long long matrix_rank(const MapMatrix<RationalField>& M);

template <class K>
RankProfile rank_profile(const MapMatrix<K>& M) {
  RankProfile p;
  p.rank = matrix_rank(M);
  p.kernel_dim = M.cols() - p.rank;
  p.cokernel_dim = M.rows() - p.rank;
  if (p.rank < 0 || p.kernel_dim < 0 || p.cokernel_dim < 0)
    throw std::logic_error("rank outside [0, min(rows, cols)]");
  return p;
}

template <class K>
bool is_maximal_rank(const MapMatrix<K>& M) {
  return matrix_rank(M) == std::min(M.rows(), M.cols());
}

/* Outcome of hunting for a full-rank specialization of the contraction map in
 * bidegree box (a, b; r, t).  A single witness certifies the generic rank. */
struct Certificate {
  enum class Verdict { Certified, Inconclusive };

  int a = 0, b = 0, r = 0, t = 0;
  int m = 1, n = 1;
  FieldDescriptor field = FieldDescriptor::prime(kDefaultPrime);
  long long rows = 0, cols = 0;
  long long target_rank = 0;
  long long achieved_rank = 0;  // best rank seen over all trials
  int trials = 0;
  std::uint64_t base_seed = 0;
  std::uint64_t witness_seed = 0;  // meaningful only when certified
  Verdict verdict = Verdict::Inconclusive;

  bool certified() const { return verdict == Verdict::Certified; }
};

inline const char* to_string(Certificate::Verdict v) {
  return v == Certificate::Verdict::Certified ? "certified" : "inconclusive";
}

inline FieldDescriptor field_descriptor(const PrimeField& f) {
  return FieldDescriptor::prime(f.modulus());
}
inline FieldDescriptor field_descriptor(const RationalField&) {
  return FieldDescriptor::rationals();
}

/* Tries builder(base_seed), builder(base_seed + 1), ... until one witness has
 * full rank or max_trials runs out.  The default builder draws a dense random
 * form; tests exercise the hook with degenerate generators. */
template <class K>
Certificate generic_rank_certificate(
    const K& field, int a, int b, int r, int t, std::uint64_t base_seed = 1,
    int max_trials = 3, int m = 1, int n = 1,
    std::function<BiForm<K>(std::uint64_t)> builder = nullptr) {
  if (max_trials < 1) throw std::domain_error("max_trials must be positive");
  Certificate cert;
  cert.a = a;
  cert.b = b;
  cert.r = r;
  cert.t = t;
  cert.m = m;
  cert.n = n;
  cert.field = field_descriptor(field);
  cert.base_seed = base_seed;
  cert.rows = dimension(m, n, r + a, t - b);
  cert.cols = dimension(m, n, r, t);
  cert.target_rank = std::min(cert.rows, cert.cols);
  if (!builder)
    builder = [&field, a, b, m, n](std::uint64_t seed) {
      return random_biform(a, b, field, seed, m, n);
    };
  for (int trial = 0; trial < max_trials; ++trial) {
    std::uint64_t seed = base_seed + static_cast<std::uint64_t>(trial);
    BiForm<K> sigma = builder(seed);
    MapMatrix<K> M = build_mulcon_matrix(sigma, r, t);
    long long rk = matrix_rank(M);
    ++cert.trials;
    cert.achieved_rank = std::max(cert.achieved_rank, rk);
    if (rk == cert.target_rank) {
      cert.witness_seed = seed;
      cert.verdict = Certificate::Verdict::Certified;
      return cert;
    }
  }
  return cert;
}

struct EscalationResult {
  Certificate first;
  std::optional<Certificate> escalated;

  const Certificate& outcome() const { return escalated ? *escalated : first; }
};

/* One retry at a much larger prime when the base prime stays inconclusive;
 * a full-rank witness at either prime certifies the characteristic-zero rank.
 * The optional builder receives the field of the attempt so both passes can be
 * driven with hand-picked (possibly degenerate) forms. */
inline EscalationResult certify_with_escalation(
    std::uint64_t prime, int a, int b, int r, int t, std::uint64_t base_seed = 1,
    int max_trials = 3, int m = 1, int n = 1,
    std::function<BiForm<PrimeField>(const PrimeField&, std::uint64_t)> builder = nullptr) {
  auto bind = [&builder](const PrimeField& f) {
    std::function<BiForm<PrimeField>(std::uint64_t)> bound;
    if (builder) bound = [&builder, f](std::uint64_t seed) { return builder(f, seed); };
    return bound;
  };
  PrimeField base(prime);
  EscalationResult res{generic_rank_certificate(base, a, b, r, t, base_seed, max_trials, m,
                                                n, bind(base)),
                       std::nullopt};
  if (!res.first.certified() && prime < kEscalationPrime) {
    PrimeField big(kEscalationPrime);
    res.escalated = generic_rank_certificate(big, a, b, r, t, base_seed, max_trials, m, n,
                                             bind(big));
  }
  return res;
}

}  // namespace bimulcon
