#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bimulcon {

long long binomial(long long n, long long k);

/* Number of monomials of total degree `deg` in `vars` variables. */
long long compositions(long long deg, int vars);

/* dim S^r(C^{m+1}) x S^t(C^{n+1}) = C(m+r,r) * C(n+t,t). */
long long dimension(int m, int n, int r, int t);

/* Exponent tuple of a monomial in some fixed variable set.  Entries are
 * non-negative; comparison is lexicographic on the tuple. */
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries);
  static ExponentVector zeros(int size) { return ExponentVector(std::vector<int>(size, 0)); }

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }

  int degree() const;

  /* componentwise <=, used for the contraction support rule */
  bool divides(const ExponentVector& other) const;

  ExponentVector plus(const ExponentVector& o) const;
  ExponentVector minus(const ExponentVector& o) const;  // requires o.divides(*this)

  auto operator<=>(const ExponentVector&) const = default;

  std::string to_string(const char* var) const;

private:
  std::vector<int> e_;
};

/* A basis monomial x^I (y)^J of S^r V x S^t W (or its dual on the y side;
 * the flag only tags semantics, it never affects indexing). */
struct BiMonomial {
  ExponentVector x;
  ExponentVector y;
  bool y_dual = false;

  auto operator<=>(const BiMonomial&) const = default;
  std::string to_string() const;
};

/* Bijection between [0, dim) and the monomial basis of S^r(C^{m+1}) x
 * S^t(C^{n+1}), ordered by the lexicographic order on the concatenated
 * exponent tuple (x part first); index 0 is the order minimum.  All degrees
 * are fixed, so this agrees with graded lex. */
class BasisIndexer {
public:
  BasisIndexer(int m, int n, int r, int t, bool y_dual = false);

  int m() const { return m_; }
  int n() const { return n_; }
  int r() const { return r_; }
  int t() const { return t_; }
  bool y_dual() const { return y_dual_; }

  long long dimension() const { return dim_x_ * dim_y_; }
  long long x_dimension() const { return dim_x_; }
  long long y_dimension() const { return dim_y_; }

  long long index_of(const BiMonomial& mono) const;
  BiMonomial monomial_at(long long i) const;

  bool operator==(const BasisIndexer& o) const {
    return m_ == o.m_ && n_ == o.n_ && r_ == o.r_ && t_ == o.t_;
  }

private:
  int m_, n_, r_, t_;
  bool y_dual_;
  long long dim_x_, dim_y_;
};

/* rank/unrank of a single exponent tuple within the degree-d stratum */
long long exponent_rank(const ExponentVector& e, int deg);
ExponentVector exponent_unrank(long long idx, int deg, int vars);

}  // namespace bimulcon
