#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "bimulcon/field.hpp"
#include "bimulcon/multiindex.hpp"

namespace bimulcon {

template <class K>
struct Triplet {
  long long row = 0, col = 0;
  typename K::Element value{};

  bool operator==(const Triplet& o) const {
    return row == o.row && col == o.col && value == o.value;
  }
};

/* Sparse exact matrix of a linear map together with the basis indexers of its
 * codomain (rows) and domain (columns) when those sides are monomial bases.
 * Entries are sorted by (row, col), unique, and nonzero. */
template <class K>
class MapMatrix {
public:
  MapMatrix(long long rows, long long cols, K field, std::vector<Triplet<K>> entries,
            std::optional<BasisIndexer> row_basis = std::nullopt,
            std::optional<BasisIndexer> col_basis = std::nullopt)
      : rows_(rows), cols_(cols), field_(std::move(field)), entries_(std::move(entries)),
        row_basis_(std::move(row_basis)), col_basis_(std::move(col_basis)) {
    if (rows_ < 0 || cols_ < 0) throw std::domain_error("negative matrix dimension");
    if (row_basis_ && row_basis_->dimension() != rows_)
      throw std::domain_error("row basis dimension mismatch");
    if (col_basis_ && col_basis_->dimension() != cols_)
      throw std::domain_error("column basis dimension mismatch");
    const Triplet<K>* prev = nullptr;
    for (const auto& e : entries_) {
      if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_)
        throw std::out_of_range("matrix entry out of bounds");
      if (field_.is_zero(e.value)) throw std::domain_error("explicit zero entry stored");
      if (prev && !(prev->row < e.row || (prev->row == e.row && prev->col < e.col)))
        throw std::domain_error("matrix entries not sorted by (row, col)");
      prev = &e;
    }
  }

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }
  long long nnz() const { return static_cast<long long>(entries_.size()); }
  const K& field() const { return field_; }
  const std::vector<Triplet<K>>& entries() const { return entries_; }
  const std::optional<BasisIndexer>& row_basis() const { return row_basis_; }
  const std::optional<BasisIndexer>& col_basis() const { return col_basis_; }

  MapMatrix transpose() const {
    std::vector<Triplet<K>> tr;
    tr.reserve(entries_.size());
    std::map<std::pair<long long, long long>, typename K::Element> acc;
    for (const auto& e : entries_) acc[{e.col, e.row}] = e.value;
    for (auto& [rc, v] : acc) tr.push_back(Triplet<K>{rc.first, rc.second, v});
    return MapMatrix(cols_, rows_, field_, std::move(tr), col_basis_, row_basis_);
  }

  std::vector<std::vector<typename K::Element>> to_dense() const {
    std::vector<std::vector<typename K::Element>> d(
        static_cast<std::size_t>(rows_),
        std::vector<typename K::Element>(static_cast<std::size_t>(cols_), field_.zero()));
    for (const auto& e : entries_)
      d[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = e.value;
    return d;
  }

  bool operator==(const MapMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
           entries_ == o.entries_;
  }

private:
  long long rows_, cols_;
  K field_;
  std::vector<Triplet<K>> entries_;
  std::optional<BasisIndexer> row_basis_, col_basis_;
};

/* Accumulating builder; collapses duplicate coordinates and drops zeros. */
template <class K>
class MatrixAccumulator {
public:
  explicit MatrixAccumulator(const K& field) : field_(field) {}

  void add(long long row, long long col, const typename K::Element& v) {
    if (field_.is_zero(v)) return;
    auto key = std::make_pair(row, col);
    auto it = acc_.find(key);
    if (it == acc_.end()) {
      acc_.emplace(key, v);
    } else {
      it->second = field_.add(it->second, v);
      if (field_.is_zero(it->second)) acc_.erase(it);
    }
  }

  MapMatrix<K> finalize(long long rows, long long cols,
                        std::optional<BasisIndexer> row_basis = std::nullopt,
                        std::optional<BasisIndexer> col_basis = std::nullopt) const {
    std::vector<Triplet<K>> tr;
    tr.reserve(acc_.size());
    for (const auto& [rc, v] : acc_) tr.push_back(Triplet<K>{rc.first, rc.second, v});
    return MapMatrix<K>(rows, cols, field_, std::move(tr), std::move(row_basis),
                        std::move(col_basis));
  }

private:
  K field_;
  std::map<std::pair<long long, long long>, typename K::Element> acc_;
};

template <class K>
MapMatrix<K> matrix_product(const MapMatrix<K>& A, const MapMatrix<K>& B) {
  if (A.field() != B.field()) throw std::domain_error("field mismatch in matrix product");
  if (A.cols() != B.rows()) throw std::domain_error("dimension mismatch in matrix product");
  const K& f = A.field();
  // bucket B's entries by row for the sparse convolution
  std::vector<std::vector<const Triplet<K>*>> brows(static_cast<std::size_t>(B.rows()));
  for (const auto& e : B.entries()) brows[static_cast<std::size_t>(e.row)].push_back(&e);
  MatrixAccumulator<K> acc(f);
  for (const auto& a : A.entries())
    for (const Triplet<K>* b : brows[static_cast<std::size_t>(a.col)])
      acc.add(a.row, b->col, f.mul(a.value, b->value));
  return acc.finalize(A.rows(), B.cols(), A.row_basis(), B.col_basis());
}

namespace detail {

inline BigInt integral_value(const PrimeField&, const PrimeField::Element& v) {
  return BigInt(v);
}

inline BigInt integral_value(const RationalField&, const Rational& v) {
  if (boost::multiprecision::denominator(v) != 1)
    throw std::domain_error("matrix entry " + v.str() + " is not an integer");
  return BigInt(boost::multiprecision::numerator(v));
}

}  // namespace detail

/* MatrixMarket coordinate export: 1-based (row, col, value) triples sorted by
 * (row, col).  Entries must be integers (always true over F_p). */
template <class K>
void export_matrix_market(const MapMatrix<K>& M, std::ostream& os) {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << M.rows() << " " << M.cols() << " " << M.nnz() << "\n";
  for (const auto& e : M.entries())
    os << (e.row + 1) << " " << (e.col + 1) << " "
       << detail::integral_value(M.field(), e.value) << "\n";
}

template <class K>
std::string matrix_market_string(const MapMatrix<K>& M) {
  std::ostringstream os;
  export_matrix_market(M, os);
  return os.str();
}

}  // namespace bimulcon
