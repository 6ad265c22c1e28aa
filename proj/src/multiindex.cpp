#include "bimulcon/multiindex.hpp"

#include <limits>
#include <numeric>

namespace bimulcon {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long c = 1;
  for (long long i = 1; i <= k; ++i) {
    long long f = n - k + i;
    if (c > std::numeric_limits<long long>::max() / f)
      throw std::overflow_error("binomial overflow");
    c = c * f / i;  // exact at every step
  }
  return c;
}

long long compositions(long long deg, int vars) {
  if (deg < 0) return 0;
  if (vars == 0) return deg == 0 ? 1 : 0;
  return binomial(deg + vars - 1, vars - 1);
}

long long dimension(int m, int n, int r, int t) {
  if (m < 0 || n < 0 || r < 0 || t < 0)
    throw std::domain_error("dimension requires m, n, r, t >= 0");
  long long dx = binomial(m + r, r);
  long long dy = binomial(n + t, t);
  if (dx != 0 && dy > std::numeric_limits<long long>::max() / dx)
    throw std::overflow_error("dimension overflow");
  return dx * dy;
}

ExponentVector::ExponentVector(std::vector<int> entries) : e_(std::move(entries)) {
  for (int v : e_)
    if (v < 0) throw std::domain_error("exponent entries must be non-negative");
}

int ExponentVector::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (size() != other.size()) return false;
  for (int i = 0; i < size(); ++i)
    if (e_[static_cast<std::size_t>(i)] > other[i]) return false;
  return true;
}

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
  if (size() != o.size()) throw std::domain_error("exponent size mismatch");
  std::vector<int> r(e_);
  for (int i = 0; i < size(); ++i) r[static_cast<std::size_t>(i)] += o[i];
  return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::minus(const ExponentVector& o) const {
  if (!o.divides(*this)) throw std::domain_error("exponent subtraction would go negative");
  std::vector<int> r(e_);
  for (int i = 0; i < size(); ++i) r[static_cast<std::size_t>(i)] -= o[i];
  return ExponentVector(std::move(r));
}

std::string ExponentVector::to_string(const char* var) const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    int ex = e_[static_cast<std::size_t>(i)];
    if (ex == 0) continue;
    if (!s.empty()) s += "*";
    s += var + std::to_string(i);
    if (ex > 1) s += "^" + std::to_string(ex);
  }
  return s.empty() ? "1" : s;
}

std::string BiMonomial::to_string() const {
  std::string xs = x.to_string("x");
  std::string ys = y.to_string(y_dual ? "y*" : "y");
  if (xs == "1") return ys;
  if (ys == "1") return xs;
  return xs + "*" + ys;
}

long long exponent_rank(const ExponentVector& e, int deg) {
  if (e.degree() != deg) throw std::domain_error("exponent degree mismatch");
  int vars = e.size();
  long long rank = 0;
  long long rem = deg;
  for (int pos = 0; pos + 1 < vars; ++pos) {
    for (int c = 0; c < e[pos]; ++c) rank += compositions(rem - c, vars - pos - 1);
    rem -= e[pos];
  }
  return rank;
}

ExponentVector exponent_unrank(long long idx, int deg, int vars) {
  if (vars <= 0) throw std::domain_error("exponent_unrank needs vars >= 1");
  if (idx < 0 || idx >= compositions(deg, vars))
    throw std::out_of_range("exponent_unrank index out of range");
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  long long rem = deg;
  for (int pos = 0; pos + 1 < vars; ++pos) {
    int c = 0;
    while (true) {
      long long cnt = compositions(rem - c, vars - pos - 1);
      if (idx < cnt) break;
      idx -= cnt;
      ++c;
    }
    e[static_cast<std::size_t>(pos)] = c;
    rem -= c;
  }
  e[static_cast<std::size_t>(vars - 1)] = static_cast<int>(rem);
  return ExponentVector(std::move(e));
}

BasisIndexer::BasisIndexer(int m, int n, int r, int t, bool y_dual)
    : m_(m), n_(n), r_(r), t_(t), y_dual_(y_dual) {
  if (m < 0 || n < 0 || r < 0 || t < 0)
    throw std::domain_error("BasisIndexer requires m, n, r, t >= 0");
  dim_x_ = compositions(r, m + 1);
  dim_y_ = compositions(t, n + 1);
}

long long BasisIndexer::index_of(const BiMonomial& mono) const {
  if (mono.x.size() != m_ + 1 || mono.y.size() != n_ + 1)
    throw std::domain_error("monomial has wrong number of variables");
  if (mono.x.degree() != r_ || mono.y.degree() != t_)
    throw std::domain_error("monomial bidegree does not match basis (" +
                            std::to_string(r_) + "," + std::to_string(t_) + ")");
  return exponent_rank(mono.x, r_) * dim_y_ + exponent_rank(mono.y, t_);
}

BiMonomial BasisIndexer::monomial_at(long long i) const {
  if (i < 0 || i >= dimension()) throw std::out_of_range("basis index out of range");
  return BiMonomial{exponent_unrank(i / dim_y_, r_, m_ + 1),
                    exponent_unrank(i % dim_y_, t_, n_ + 1), y_dual_};
}

}  // namespace bimulcon
