#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimulcon/field.hpp"
#include "bimulcon/matrix.hpp"
#include "bimulcon/multiindex.hpp"
#include "bimulcon/polynomial.hpp"

namespace bimulcon {

/* Bihomogeneous form of bidegree (a, b) on P^m x P^n: an element of
 * S^a(C^{m+1}) (x) S^b(C^{n+1}) stored as a sparse term map. */
template <class K>
class BiForm {
public:
  using Element = typename K::Element;
  using TermMap = std::map<BiMonomial, Element>;

  BiForm(int m, int n, int a, int b, K field)
      : m_(m), n_(n), a_(a), b_(b), field_(std::move(field)) {
    if (m < 0 || n < 0 || a < 0 || b < 0)
      throw std::domain_error("BiForm requires m, n, a, b >= 0");
  }
  BiForm(int a, int b, K field) : BiForm(1, 1, a, b, std::move(field)) {}

  int m() const { return m_; }
  int n() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }
  const K& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExponentVector& xe, const ExponentVector& ye, const Element& c) {
    if (xe.size() != m_ + 1 || ye.size() != n_ + 1)
      throw std::domain_error("term has wrong number of variables");
    if (xe.degree() != a_ || ye.degree() != b_)
      throw std::domain_error("term bidegree does not match form bidegree (" +
                              std::to_string(a_) + "," + std::to_string(b_) + ")");
    if (field_.is_zero(c)) return;
    BiMonomial key{xe, ye, false};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c);
    } else {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Element coefficient(const ExponentVector& xe, const ExponentVector& ye) const {
    auto it = terms_.find(BiMonomial{xe, ye, false});
    return it == terms_.end() ? field_.zero() : it->second;
  }

  BiForm plus(const BiForm& o) const {
    require_compatible(o);
    if (a_ != o.a_ || b_ != o.b_)
      throw std::domain_error("bidegree mismatch in form addition");
    BiForm r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono.x, mono.y, c);
    return r;
  }

  BiForm scaled(const Element& s) const {
    BiForm r(m_, n_, a_, b_, field_);
    for (const auto& [mono, c] : terms_) r.add_term(mono.x, mono.y, field_.mul(c, s));
    return r;
  }

  bool operator==(const BiForm& o) const {
    return m_ == o.m_ && n_ == o.n_ && a_ == o.a_ && b_ == o.b_ && field_ == o.field_ &&
           terms_ == o.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mono, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + field_.to_string(c) + ")*" + mono.to_string();
    }
    return s;
  }

  void require_compatible(const BiForm& o) const {
    if (field_ != o.field_) throw std::domain_error("coefficient field mismatch");
    if (m_ != o.m_ || n_ != o.n_)
      throw std::domain_error("variable count mismatch between forms");
  }

private:
  int m_, n_, a_, b_;
  K field_;
  TermMap terms_;
};

template <class K>
BiForm<K> multiply_biforms(const BiForm<K>& f, const BiForm<K>& g) {
  f.require_compatible(g);
  const K& fld = f.field();
  BiForm<K> r(f.m(), f.n(), f.a() + g.a(), f.b() + g.b(), fld);
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms())
      r.add_term(mf.x.plus(mg.x), mf.y.plus(mg.y), fld.mul(cf, cg));
  return r;
}

namespace detail {

inline PrimeField::Element sample_coefficient(const PrimeField& f, std::mt19937_64& rng) {
  return static_cast<PrimeField::Element>(rng() % f.modulus());
}

inline Rational sample_coefficient(const RationalField& f, std::mt19937_64& rng) {
  /* integer coefficients in [0, 65537): the same stream reduces verbatim
   * mod the default prime, which the modular/rational cross-checks rely on */
  return f.from_int(static_cast<long long>(rng() % kDefaultPrime));
}

}  // namespace detail

/* Dense random form, deterministic in (seed); every coefficient is drawn from
 * one mt19937_64 stream in basis order. */
template <class K>
BiForm<K> random_biform(int a, int b, const K& field, std::uint64_t seed, int m = 1,
                        int n = 1) {
  BiForm<K> r(m, n, a, b, field);
  BasisIndexer basis(m, n, a, b, false);
  std::mt19937_64 rng(seed);
  for (long long i = 0; i < basis.dimension(); ++i) {
    BiMonomial mono = basis.monomial_at(i);
    r.add_term(mono.x, mono.y, detail::sample_coefficient(field, rng));
  }
  return r;
}

/* exchange the two rulings: x <-> y, so bidegree (a,b) becomes (b,a) */
template <class K>
BiForm<K> swap_rulings_form(const BiForm<K>& f) {
  BiForm<K> r(f.n(), f.m(), f.b(), f.a(), f.field());
  for (const auto& [mono, c] : f.terms()) r.add_term(mono.y, mono.x, c);
  return r;
}

/* The multiplication-contraction matrix of sigma, acting
 *   S^r V (x) S^t W*  ->  S^{r+a} V (x) S^{t-b} W*,
 * column x^I (y*)^T picking up sigma's term c x^A y^B at row x^{I+A} (y*)^{T-B}
 * whenever B <= T componentwise; coefficients are carried verbatim. */
template <class K>
MapMatrix<K> build_mulcon_matrix(const BiForm<K>& sigma, int r, int t) {
  const int a = sigma.a(), b = sigma.b();
  if (r < 0 || t < b)
    throw std::domain_error("build_mulcon_matrix requires r >= 0 and t >= b");
  BasisIndexer dom(sigma.m(), sigma.n(), r, t, true);
  BasisIndexer cod(sigma.m(), sigma.n(), r + a, t - b, true);
  MatrixAccumulator<K> acc(sigma.field());
  for (long long col = 0; col < dom.dimension(); ++col) {
    BiMonomial mono = dom.monomial_at(col);
    for (const auto& [term, c] : sigma.terms()) {
      if (!term.y.divides(mono.y)) continue;
      long long row = cod.index_of(
          BiMonomial{mono.x.plus(term.x), mono.y.minus(term.y), true});
      acc.add(row, col, c);
    }
  }
  return acc.finalize(cod.dimension(), dom.dimension(), cod, dom);
}

/* Differential operator variant: D acts C[x]_r (x) C[y]_t -> C[x]_{r+a} (x)
 * C[y]_{t-b}; same support rule as multiplication-contraction, each entry
 * scaled by the falling factorial prod_k T_k (T_k-1) ... (T_k-B_k+1).  Needs
 * characteristic 0 or > t so those factors stay invertible. */
template <class K>
MapMatrix<K> build_diff_matrix(const BiForm<K>& D, int r, int t) {
  const int a = D.a(), b = D.b();
  if (r < 0 || t < b)
    throw std::domain_error("build_diff_matrix requires r >= 0 and t >= b");
  const std::uint64_t ch = D.field().characteristic();
  if (ch != 0 && ch <= static_cast<std::uint64_t>(t))
    throw std::domain_error("build_diff_matrix needs characteristic 0 or > t");
  BasisIndexer dom(D.m(), D.n(), r, t, false);
  BasisIndexer cod(D.m(), D.n(), r + a, t - b, false);
  const K& fld = D.field();
  MatrixAccumulator<K> acc(fld);
  for (long long col = 0; col < dom.dimension(); ++col) {
    BiMonomial mono = dom.monomial_at(col);
    for (const auto& [term, c] : D.terms()) {
      if (!term.y.divides(mono.y)) continue;
      typename K::Element factor = fld.one();
      for (int k = 0; k < term.y.size(); ++k)
        for (int step = 0; step < term.y[k]; ++step)
          factor = fld.mul(factor, fld.from_int(mono.y[k] - step));
      long long row = cod.index_of(
          BiMonomial{mono.x.plus(term.x), mono.y.minus(term.y), false});
      acc.add(row, col, fld.mul(c, factor));
    }
  }
  return acc.finalize(cod.dimension(), dom.dimension(), cod, dom);
}

namespace detail {

/* homogeneous polynomial in one variable group, used for substitution */
template <class K>
using HomPoly = std::map<ExponentVector, typename K::Element>;

template <class K>
HomPoly<K> hom_mul(const K& fld, const HomPoly<K>& f, const HomPoly<K>& g) {
  HomPoly<K> r;
  for (const auto& [ef, cf] : f)
    for (const auto& [eg, cg] : g) {
      ExponentVector key = ef.plus(eg);
      auto it = r.find(key);
      typename K::Element v = fld.mul(cf, cg);
      if (it == r.end()) {
        if (!fld.is_zero(v)) r.emplace(std::move(key), v);
      } else {
        it->second = fld.add(it->second, v);
        if (fld.is_zero(it->second)) r.erase(it);
      }
    }
  return r;
}

/* expand prod_i (sum_j g[i][j] z_j)^{e_i} */
template <class K>
HomPoly<K> substituted_power(const K& fld,
                             const std::vector<std::vector<typename K::Element>>& g,
                             const ExponentVector& e) {
  const int nvars = e.size();
  HomPoly<K> acc;
  acc.emplace(ExponentVector::zeros(nvars), fld.one());
  for (int i = 0; i < nvars; ++i) {
    HomPoly<K> lin;
    for (int j = 0; j < nvars; ++j) {
      if (fld.is_zero(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) continue;
      std::vector<int> unit(static_cast<std::size_t>(nvars), 0);
      unit[static_cast<std::size_t>(j)] = 1;
      lin.emplace(ExponentVector(std::move(unit)),
                  g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    for (int rep = 0; rep < e[i]; ++rep) acc = hom_mul(fld, acc, lin);
  }
  return acc;
}

template <class K>
void require_invertible(const K& fld,
                        const std::vector<std::vector<typename K::Element>>& g, int nvars,
                        const char* which) {
  if (static_cast<int>(g.size()) != nvars)
    throw std::domain_error(std::string("substitution matrix for ") + which +
                            " has wrong size");
  for (const auto& row : g)
    if (static_cast<int>(row.size()) != nvars)
      throw std::domain_error(std::string("substitution matrix for ") + which +
                              " is not square");
  if (fld.is_zero(dense_determinant(fld, g)))
    throw std::domain_error(std::string("substitution matrix for ") + which +
                            " is singular");
}

}  // namespace detail

/* sigma(gV x, gW y): x_i -> sum_j gV[i][j] x_j and likewise for y.  Both
 * matrices must be invertible, so ranks of the derived maps are preserved. */
template <class K>
BiForm<K> substitute_linear(const BiForm<K>& sigma,
                            const std::vector<std::vector<typename K::Element>>& gV,
                            const std::vector<std::vector<typename K::Element>>& gW) {
  const K& fld = sigma.field();
  detail::require_invertible(fld, gV, sigma.m() + 1, "x");
  detail::require_invertible(fld, gW, sigma.n() + 1, "y");
  BiForm<K> r(sigma.m(), sigma.n(), sigma.a(), sigma.b(), fld);
  for (const auto& [mono, c] : sigma.terms()) {
    auto px = detail::substituted_power(fld, gV, mono.x);
    auto py = detail::substituted_power(fld, gW, mono.y);
    for (const auto& [ex, cx] : px)
      for (const auto& [ey, cy] : py)
        r.add_term(ex, ey, fld.mul(c, fld.mul(cx, cy)));
  }
  return r;
}

/* Point of P^m x P^n; each coordinate tuple is normalized so its first
 * nonzero entry is 1. */
template <class K>
struct QPoint {
  std::vector<typename K::Element> x, y;

  QPoint(const K& field, std::vector<typename K::Element> xs,
         std::vector<typename K::Element> ys)
      : x(std::move(xs)), y(std::move(ys)) {
    normalize(field, x, "x");
    normalize(field, y, "y");
  }

private:
  static void normalize(const K& field, std::vector<typename K::Element>& v,
                        const char* which) {
    for (auto& c : v) {
      if (field.is_zero(c)) continue;
      typename K::Element inv = field.inv(c);
      for (auto& d : v) d = field.mul(d, inv);
      return;
    }
    throw std::domain_error(std::string("point has all-zero ") + which + " coordinates");
  }
};

/* rows = points, cols = monomial basis of bidegree (alpha, beta) */
template <class K>
MapMatrix<K> evaluation_matrix(const K& field, const std::vector<QPoint<K>>& points,
                               int alpha, int beta, int m = 1, int n = 1) {
  BasisIndexer cols(m, n, alpha, beta, false);
  MatrixAccumulator<K> acc(field);
  for (std::size_t p = 0; p < points.size(); ++p) {
    const QPoint<K>& pt = points[p];
    if (static_cast<int>(pt.x.size()) != m + 1 || static_cast<int>(pt.y.size()) != n + 1)
      throw std::domain_error("point has wrong number of coordinates");
    for (long long j = 0; j < cols.dimension(); ++j) {
      BiMonomial mono = cols.monomial_at(j);
      typename K::Element v = field.one();
      for (int i = 0; i <= m; ++i)
        v = field.mul(v, field.pow(pt.x[static_cast<std::size_t>(i)],
                                   static_cast<std::uint64_t>(mono.x[i])));
      for (int i = 0; i <= n; ++i)
        v = field.mul(v, field.pow(pt.y[static_cast<std::size_t>(i)],
                                   static_cast<std::uint64_t>(mono.y[i])));
      acc.add(static_cast<long long>(p), j, v);
    }
  }
  return acc.finalize(static_cast<long long>(points.size()), cols.dimension(),
                      std::nullopt, cols);
}

/* evaluate a biform at a point */
template <class K>
typename K::Element evaluate_biform(const BiForm<K>& f, const QPoint<K>& pt) {
  const K& fld = f.field();
  typename K::Element acc = fld.zero();
  for (const auto& [mono, c] : f.terms()) {
    typename K::Element v = c;
    for (int i = 0; i <= f.m(); ++i)
      v = fld.mul(v, fld.pow(pt.x[static_cast<std::size_t>(i)],
                             static_cast<std::uint64_t>(mono.x[i])));
    for (int i = 0; i <= f.n(); ++i)
      v = fld.mul(v, fld.pow(pt.y[static_cast<std::size_t>(i)],
                             static_cast<std::uint64_t>(mono.y[i])));
    acc = fld.add(acc, v);
  }
  return acc;
}

}  // namespace bimulcon
