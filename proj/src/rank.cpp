#include "bimulcon/rank.hpp"

#include <map>
#include <set>

namespace bimulcon {
namespace detail {

long long rank_dense(const PrimeField& f, long long rows, long long cols,
                     const std::vector<Triplet<PrimeField>>& entries) {
  std::vector<std::vector<std::uint64_t>> M(
      static_cast<std::size_t>(rows),
      std::vector<std::uint64_t>(static_cast<std::size_t>(cols), 0));
  for (const auto& e : entries)
    M[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = e.value;
  long long rank = 0;
  for (long long col = 0; col < cols && rank < rows; ++col) {
    long long pivot = -1;
    for (long long r = rank; r < rows; ++r)
      if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(M[static_cast<std::size_t>(pivot)], M[static_cast<std::size_t>(rank)]);
    const auto& prow = M[static_cast<std::size_t>(rank)];
    std::uint64_t pinv = f.inv(prow[static_cast<std::size_t>(col)]);
    for (long long r = rank + 1; r < rows; ++r) {
      auto& row = M[static_cast<std::size_t>(r)];
      std::uint64_t lead = row[static_cast<std::size_t>(col)];
      if (lead == 0) continue;
      std::uint64_t factor = f.mul(lead, pinv);
      for (long long c = col; c < cols; ++c)
        row[static_cast<std::size_t>(c)] =
            f.sub(row[static_cast<std::size_t>(c)],
                  f.mul(factor, prow[static_cast<std::size_t>(c)]));
    }
    ++rank;
  }
  return rank;
}

/* Markowitz-style sparse elimination: pivot in the lightest active column,
 * within it on the sparsest row.  Keeps fill-in down on the structured,
 * very sparse contraction matrices. */
long long rank_sparse(const PrimeField& f, long long rows, long long cols,
                      const std::vector<Triplet<PrimeField>>& entries) {
  std::vector<std::map<long long, std::uint64_t>> R(static_cast<std::size_t>(rows));
  std::vector<std::set<long long>> colrows(static_cast<std::size_t>(cols));
  for (const auto& e : entries) {
    R[static_cast<std::size_t>(e.row)][e.col] = e.value;
    colrows[static_cast<std::size_t>(e.col)].insert(e.row);
  }
  std::vector<char> col_done(static_cast<std::size_t>(cols), 0);
  long long rank = 0;
  for (;;) {
    long long pc = -1;
    std::size_t best = 0;
    for (long long c = 0; c < cols; ++c) {
      if (col_done[static_cast<std::size_t>(c)]) continue;
      std::size_t cnt = colrows[static_cast<std::size_t>(c)].size();
      if (cnt == 0) continue;
      if (pc < 0 || cnt < best) {
        pc = c;
        best = cnt;
      }
    }
    if (pc < 0) break;
    long long pr = -1;
    std::size_t prow_nnz = 0;
    for (long long r : colrows[static_cast<std::size_t>(pc)]) {
      std::size_t cnt = R[static_cast<std::size_t>(r)].size();
      if (pr < 0 || cnt < prow_nnz) {
        pr = r;
        prow_nnz = cnt;
      }
    }
    auto prow = std::move(R[static_cast<std::size_t>(pr)]);
    R[static_cast<std::size_t>(pr)].clear();
    for (const auto& [c, v] : prow) colrows[static_cast<std::size_t>(c)].erase(pr);
    std::uint64_t pinv = f.inv(prow.at(pc));
    std::vector<long long> victims(colrows[static_cast<std::size_t>(pc)].begin(),
                                   colrows[static_cast<std::size_t>(pc)].end());
    for (long long r : victims) {
      auto& row = R[static_cast<std::size_t>(r)];
      std::uint64_t factor = f.mul(row.at(pc), pinv);
      for (const auto& [c, v] : prow) {
        auto it = row.find(c);
        std::uint64_t delta = f.mul(factor, v);
        if (it == row.end()) {
          row.emplace(c, f.neg(delta));
          colrows[static_cast<std::size_t>(c)].insert(r);
        } else {
          it->second = f.sub(it->second, delta);
          if (it->second == 0) {
            row.erase(it);
            colrows[static_cast<std::size_t>(c)].erase(r);
          }
        }
      }
    }
    col_done[static_cast<std::size_t>(pc)] = 1;
    ++rank;
  }
  return rank;
}

/* Fraction-free Bareiss elimination; every division is exact by Sylvester's
 * determinant identity, so the entries stay integral. */
long long rank_bareiss_integer(std::vector<std::vector<BigInt>> M) {
  const long long rows = static_cast<long long>(M.size());
  const long long cols = rows == 0 ? 0 : static_cast<long long>(M[0].size());
  long long rank = 0;
  BigInt prev = 1;
  for (long long col = 0; col < cols && rank < rows; ++col) {
    long long pivot = -1;
    for (long long r = rank; r < rows; ++r)
      if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(M[static_cast<std::size_t>(pivot)], M[static_cast<std::size_t>(rank)]);
    const BigInt& p = M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    for (long long r = rank + 1; r < rows; ++r) {
      auto& row = M[static_cast<std::size_t>(r)];
      const auto& prow = M[static_cast<std::size_t>(rank)];
      for (long long c = col + 1; c < cols; ++c)
        row[static_cast<std::size_t>(c)] =
            (p * row[static_cast<std::size_t>(c)] -
             row[static_cast<std::size_t>(col)] * prow[static_cast<std::size_t>(c)]) /
            prev;
      row[static_cast<std::size_t>(col)] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace detail

long long matrix_rank(const MapMatrix<PrimeField>& M) {
  if (M.nnz() == 0) return 0;
  if (M.rows() * M.cols() <= detail::kDenseCellLimit)
    return detail::rank_dense(M.field(), M.rows(), M.cols(), M.entries());
  return detail::rank_sparse(M.field(), M.rows(), M.cols(), M.entries());
}

long long matrix_rank(const MapMatrix<RationalField>& M) {
  if (M.nnz() == 0) return 0;
  /* scale each row integral (rank is unchanged), then eliminate over Z */
  std::vector<std::vector<Rational>> D = M.to_dense();
  std::vector<std::vector<BigInt>> Z;
  Z.reserve(D.size());
  for (const auto& row : D) {
    BigInt lcm = 1;
    for (const auto& q : row) {
      BigInt den = boost::multiprecision::denominator(q);
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<BigInt> zr;
    zr.reserve(row.size());
    for (const auto& q : row)
      zr.push_back(boost::multiprecision::numerator(q) *
                   (lcm / boost::multiprecision::denominator(q)));
    Z.push_back(std::move(zr));
  }
  return detail::rank_bareiss_integer(std::move(Z));
}

}  // namespace bimulcon
