#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bimulcon/field.hpp"

namespace bimulcon {

/* Dense univariate polynomial over a field object, coefficients ascending.
 * The zero polynomial has degree -1. */
template <class K>
class Poly {
public:
  using Element = typename K::Element;

  explicit Poly(K field) : field_(std::move(field)) {}
  Poly(K field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(const K& field, const Element& v) {
    return Poly(field, std::vector<Element>{v});
  }

  static Poly monomial(const K& field, int d) {
    if (d < 0) throw std::domain_error("monomial degree must be non-negative");
    std::vector<Element> c(static_cast<std::size_t>(d) + 1, field.zero());
    c.back() = field.one();
    return Poly(field, std::move(c));
  }

  /* monic product of (v - root_i) */
  static Poly from_roots(const K& field, const std::vector<Element>& roots) {
    Poly p(field, std::vector<Element>{field.one()});
    for (const Element& r : roots) {
      Poly lin(field, std::vector<Element>{field.neg(r), field.one()});
      p = p.times(lin);
    }
    return p;
  }

  const K& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  Element coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
    return c_[static_cast<std::size_t>(i)];
  }
  Element lc() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<Element>& coeffs() const { return c_; }

  Element eval(const Element& v) const {
    Element acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = field_.add(field_.mul(acc, v), *it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Element> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i)), c_[i]);
    return Poly(field_, std::move(d));
  }

  Poly plus(const Poly& o) const {
    std::vector<Element> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.add(r[i], o.c_[i]);
    return Poly(field_, std::move(r));
  }

  Poly minus(const Poly& o) const { return plus(o.times_scalar(field_.neg(field_.one()))); }

  Poly times(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Element> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    return Poly(field_, std::move(r));
  }

  Poly times_scalar(const Element& s) const {
    std::vector<Element> r(c_);
    for (auto& v : r) v = field_.mul(v, s);
    return Poly(field_, std::move(r));
  }

  /* euclidean division; divisor must be nonzero */
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(field_), r = *this;
    std::vector<Element> qc;
    if (r.degree() >= d.degree()) {
      qc.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), field_.zero());
      Element dinv = field_.inv(d.lc());
      while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Element f = field_.mul(r.lc(), dinv);
        qc[static_cast<std::size_t>(shift)] = f;
        std::vector<Element> rc(r.c_);
        for (int i = 0; i <= d.degree(); ++i) {
          std::size_t pos = static_cast<std::size_t>(i + shift);
          rc[pos] = field_.sub(rc[pos], field_.mul(f, d.coeff(i)));
        }
        r = Poly(field_, std::move(rc));
      }
    }
    return {Poly(field_, std::move(qc)), r};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return times_scalar(field_.inv(lc()));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string to_string(const char* var = "v") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (field_.is_zero(coeff(i))) continue;
      if (!s.empty()) s += " + ";
      s += field_.to_string(coeff(i));
      if (i >= 1) s += std::string("*") + var;
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  K field_;
  std::vector<Element> c_;
};

template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> x = a, y = b;
  while (!y.is_zero()) {
    Poly<K> r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

/* squarefree <=> gcd(f, f') is constant; a vanishing derivative of a
 * non-constant f (possible only in positive characteristic) is not squarefree */
template <class K>
bool is_squarefree(const Poly<K>& f) {
  if (f.is_zero()) return false;
  if (f.is_constant()) return true;
  Poly<K> d = f.derivative();
  if (d.is_zero()) return false;
  return poly_gcd(f, d).is_constant();
}

namespace detail {

/* determinant by destructive Gaussian elimination, exact over any field */
template <class K>
typename K::Element dense_determinant(const K& f,
                                      std::vector<std::vector<typename K::Element>> M) {
  const std::size_t n = M.size();
  typename K::Element det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && f.is_zero(M[piv][col])) ++piv;
    if (piv == n) return f.zero();
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = f.neg(det);
    }
    det = f.mul(det, M[col][col]);
    typename K::Element inv = f.inv(M[col][col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (f.is_zero(M[i][col])) continue;
      typename K::Element factor = f.mul(M[i][col], inv);
      for (std::size_t j = col; j < n; ++j)
        M[i][j] = f.sub(M[i][j], f.mul(factor, M[col][j]));
    }
  }
  return det;
}

}  // namespace detail

/* Resultant of A (formal degree da = coeffsA.size()-1) and B via the Sylvester
 * determinant.  Formal degrees are honoured even if leading coefficients are
 * zero, which keeps specialization of polynomial coefficients exact. */
template <class K>
typename K::Element sylvester_resultant(const K& f,
                                        const std::vector<typename K::Element>& coeffsA,
                                        const std::vector<typename K::Element>& coeffsB) {
  const int da = static_cast<int>(coeffsA.size()) - 1;
  const int db = static_cast<int>(coeffsB.size()) - 1;
  if (da < 1 && db < 1) throw std::domain_error("sylvester needs a positive formal degree");
  const int nsz = da + db;
  std::vector<std::vector<typename K::Element>> S(
      static_cast<std::size_t>(nsz),
      std::vector<typename K::Element>(static_cast<std::size_t>(nsz), f.zero()));
  for (int i = 0; i < db; ++i)
    for (int k = 0; k <= da; ++k)
      S[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] =
          coeffsA[static_cast<std::size_t>(da - k)];
  for (int i = 0; i < da; ++i)
    for (int k = 0; k <= db; ++k)
      S[static_cast<std::size_t>(db + i)][static_cast<std::size_t>(i + k)] =
          coeffsB[static_cast<std::size_t>(db - k)];
  return detail::dense_determinant(f, std::move(S));
}

/* Lagrange interpolation through (xs[i], ys[i]) with distinct xs. */
template <class K>
Poly<K> interpolate(const K& f, const std::vector<typename K::Element>& xs,
                    const std::vector<typename K::Element>& ys) {
  if (xs.size() != ys.size()) throw std::domain_error("interpolation size mismatch");
  Poly<K> acc(f);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly<K> num = Poly<K>::constant(f, f.one());
    typename K::Element den = f.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      num = num.times(Poly<K>(f, {f.neg(xs[j]), f.one()}));
      den = f.mul(den, f.sub(xs[i], xs[j]));
    }
    acc = acc.plus(num.times_scalar(f.mul(ys[i], f.inv(den))));
  }
  return acc;
}

/* Resultant in u of two polynomials whose u-coefficients are polynomials in v,
 * computed by evaluation at degv_bound+1 sample points and interpolation.
 * Sample points are 0, 1, 2, ...; the prime must exceed degv_bound. */
template <class K>
Poly<K> resultant_u(const K& f, const std::vector<Poly<K>>& coeffsA,
                    const std::vector<Poly<K>>& coeffsB, int degv_bound) {
  if (f.characteristic() != 0 &&
      f.characteristic() <= static_cast<std::uint64_t>(degv_bound))
    throw std::domain_error("field too small for resultant interpolation");
  std::vector<typename K::Element> xs, ys;
  for (int s = 0; s <= degv_bound; ++s) {
    typename K::Element x = f.from_int(s);
    std::vector<typename K::Element> a, b;
    a.reserve(coeffsA.size());
    b.reserve(coeffsB.size());
    for (const auto& p : coeffsA) a.push_back(p.eval(x));
    for (const auto& p : coeffsB) b.push_back(p.eval(x));
    xs.push_back(x);
    ys.push_back(sylvester_resultant(f, a, b));
  }
  return interpolate(f, xs, ys);
}

}  // namespace bimulcon
