#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bimulcon/rank.hpp"

using namespace bimulcon;

namespace {
const PrimeField F(65537);

MapMatrix<PrimeField> from_dense(const std::vector<std::vector<std::uint64_t>>& d) {
  std::vector<Triplet<PrimeField>> e;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j)
      if (d[i][j] % 65537 != 0)
        e.push_back({static_cast<long long>(i), static_cast<long long>(j), d[i][j] % 65537});
  return MapMatrix<PrimeField>(static_cast<long long>(d.size()),
                               static_cast<long long>(d.empty() ? 0 : d[0].size()), F,
                               std::move(e));
}

MapMatrix<RationalField> from_rational(const std::vector<std::vector<Rational>>& d) {
  RationalField q;
  std::vector<Triplet<RationalField>> e;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j)
      if (d[i][j] != 0)
        e.push_back({static_cast<long long>(i), static_cast<long long>(j), d[i][j]});
  return MapMatrix<RationalField>(static_cast<long long>(d.size()),
                                  static_cast<long long>(d.empty() ? 0 : d[0].size()), q,
                                  std::move(e));
}

// degenerate generator: a single monomial, independent of the seed
BiForm<PrimeField> monomial_form(const PrimeField& f, int a, int b) {
  BiForm<PrimeField> s(a, b, f);
  s.add_term(ExponentVector({a, 0}), ExponentVector({b, 0}), 1);
  return s;
}
}  // namespace

TEST_CASE("rank over a prime field, frozen cases") {
  CHECK(matrix_rank(from_dense({{1, 2}, {2, 4}})) == 1);
  CHECK(matrix_rank(from_dense({{2, 0}, {0, 3}})) == 2);
  CHECK(matrix_rank(from_dense({{0, 0}, {0, 0}})) == 0);
  CHECK(matrix_rank(from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(matrix_rank(from_dense({{1, 0, 2, 0}})) == 1);

  RankProfile p = rank_profile(from_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  CHECK(p.rank == 2);
  CHECK(p.kernel_dim == 1);
  CHECK(p.cokernel_dim == 1);
  CHECK(is_maximal_rank(from_dense({{2, 0}, {0, 3}})));
  CHECK_FALSE(is_maximal_rank(from_dense({{1, 2}, {2, 4}})));
}

TEST_CASE("dense and sparse eliminations agree on random matrices") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 40; ++iter) {
    long long rows = 1 + static_cast<long long>(rng() % 12);
    long long cols = 1 + static_cast<long long>(rng() % 12);
    std::vector<Triplet<PrimeField>> e;
    for (long long i = 0; i < rows; ++i)
      for (long long j = 0; j < cols; ++j)
        if (rng() % 3 == 0) {
          std::uint64_t v = rng() % 65537;
          if (v != 0) e.push_back({i, j, v});
        }
    long long rd = detail::rank_dense(F, rows, cols, e);
    long long rs = detail::rank_sparse(F, rows, cols, e);
    CHECK(rd == rs);
  }
}

TEST_CASE("fraction-free rank over the rationals") {
  CHECK(detail::rank_bareiss_integer({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 1);
  CHECK(detail::rank_bareiss_integer({{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(3)}}) == 2);

  // denominators are cleared row by row before the integer elimination
  Rational half(1, 2), third(1, 3), quarter(1, 4), sixth(1, 6);
  CHECK(matrix_rank(from_rational({{half, third}, {quarter, sixth}})) == 1);
  CHECK(matrix_rank(from_rational({{half, third}, {quarter, third}})) == 2);
  CHECK(matrix_rank(from_rational({{Rational(0), Rational(0)}})) == 0);

  // entries whose cross products overflow 64 bits still come out exact
  Rational big("123456789123456789");
  CHECK(matrix_rank(from_rational({{big, big * 2}, {big * 3, big * 6}})) == 1);
  CHECK(matrix_rank(from_rational({{big, big * 2}, {big * 3, big * 7}})) == 2);
}

TEST_CASE("generic rank certificates") {
  Certificate c = generic_rank_certificate(F, 2, 2, 1, 4);
  CHECK(c.a == 2);
  CHECK(c.t == 4);
  CHECK(c.rows == 12);
  CHECK(c.cols == 10);
  CHECK(c.target_rank == 10);
  CHECK(c.certified());
  CHECK(c.achieved_rank == 10);
  CHECK(c.witness_seed >= c.base_seed);
  CHECK(c.field.to_string() == "F65537");

  CHECK_THROWS_AS(generic_rank_certificate(F, 2, 2, 1, 4, 1, 0), std::domain_error);
}

TEST_CASE("degenerate builder stays inconclusive") {
  std::function<BiForm<PrimeField>(std::uint64_t)> builder = [](std::uint64_t) {
    return monomial_form(PrimeField(65537), 2, 2);
  };
  Certificate c = generic_rank_certificate(F, 2, 2, 1, 4, 1, 1, 1, 1, builder);
  CHECK_FALSE(c.certified());
  CHECK(c.trials == 1);
  // x0^2*y0^2 shifts the 6 columns with enough y0; the rest die
  CHECK(c.achieved_rank == 6);
  CHECK(c.target_rank == 10);
}

TEST_CASE("escalation retries at the big prime") {
  EscalationResult ok = certify_with_escalation(65537, 1, 1, 1, 2);
  CHECK(ok.first.certified());
  CHECK_FALSE(ok.escalated.has_value());
  CHECK(ok.outcome().certified());

  auto degenerate = [](const PrimeField& f, std::uint64_t) { return monomial_form(f, 2, 2); };
  EscalationResult esc = certify_with_escalation(65537, 2, 2, 1, 4, 1, 2, 1, 1, degenerate);
  CHECK_FALSE(esc.first.certified());
  REQUIRE(esc.escalated.has_value());
  CHECK(esc.escalated->field.p == kEscalationPrime);
  CHECK_FALSE(esc.escalated->certified());
  CHECK(esc.outcome().field.p == kEscalationPrime);
  CHECK(esc.outcome().achieved_rank == 6);

  // already at the top prime: no second pass
  EscalationResult top = certify_with_escalation(kEscalationPrime, 2, 2, 1, 4, 1, 1, 1, 1,
                                                 degenerate);
  CHECK_FALSE(top.first.certified());
  CHECK_FALSE(top.escalated.has_value());
}
