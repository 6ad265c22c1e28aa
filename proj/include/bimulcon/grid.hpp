#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimulcon/biform.hpp"
#include "bimulcon/rank.hpp"

namespace bimulcon {

/* Product configuration {([1 : lambda_i], [1 : mu_j])} on P^1 x P^1. */
template <class K>
class Grid {
public:
  using Element = typename K::Element;

  Grid(K field, std::vector<Element> lambda, std::vector<Element> mu)
      : field_(std::move(field)), lambda_(std::move(lambda)), mu_(std::move(mu)) {
    require_distinct(lambda_, "lambda");
    require_distinct(mu_, "mu");
  }

  const K& field() const { return field_; }
  const std::vector<Element>& lambda() const { return lambda_; }
  const std::vector<Element>& mu() const { return mu_; }
  int rows() const { return static_cast<int>(lambda_.size()); }
  int cols() const { return static_cast<int>(mu_.size()); }

  QPoint<K> point(int i, int j) const {
    if (i < 0 || i >= rows() || j < 0 || j >= cols())
      throw std::out_of_range("grid cell out of range");
    return QPoint<K>(field_, {field_.one(), lambda_[static_cast<std::size_t>(i)]},
                     {field_.one(), mu_[static_cast<std::size_t>(j)]});
  }

  std::vector<QPoint<K>> all_points() const {
    std::vector<QPoint<K>> pts;
    pts.reserve(static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols()));
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j) pts.push_back(point(i, j));
    return pts;
  }

  bool operator==(const Grid& o) const {
    return field_ == o.field_ && lambda_ == o.lambda_ && mu_ == o.mu_;
  }

private:
  void require_distinct(const std::vector<Element>& v, const char* which) const {
    std::set<Element> seen(v.begin(), v.end());
    if (seen.size() != v.size())
      throw std::domain_error(std::string(which) + " values must be distinct");
  }

  K field_;
  std::vector<Element> lambda_, mu_;
};

/* p x q grid on the small integers 1..p and 1..q */
template <class K>
Grid<K> make_grid(const K& field, int p, int q) {
  if (p < 0 || q < 0) throw std::domain_error("grid size must be non-negative");
  std::vector<typename K::Element> lambda, mu;
  for (int i = 1; i <= p; ++i) lambda.push_back(field.from_int(i));
  for (int j = 1; j <= q; ++j) mu.push_back(field.from_int(j));
  return Grid<K>(field, std::move(lambda), std::move(mu));
}

/* Bipartite multigraph-free edge list between `rows` left nodes and `cols`
 * right nodes.  The round-robin layout below hits every cell at most once and
 * keeps all degrees within one of each other. */
struct BipartiteGraph {
  int rows = 0, cols = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> row_degrees() const;
  std::vector<int> col_degrees() const;
};

BipartiteGraph bipartite_graph(int rows, int cols, long long n_edges);

enum class ZCase { FullSubgrid, Graph, SwappedGraph };

const char* to_string(ZCase c);

/* Chosen cells of a grid, remembering the bidegrees they were built for. */
template <class K>
struct ZSubset {
  Grid<K> grid;
  std::vector<std::pair<int, int>> cells;
  int alpha = 0, beta = 0;          // target bidegree
  int alpha_hat = 0, beta_hat = 0;  // complementary bidegree
  ZCase zcase = ZCase::FullSubgrid;

  std::vector<QPoint<K>> points() const {
    std::vector<QPoint<K>> pts;
    pts.reserve(cells.size());
    for (const auto& [i, j] : cells) pts.push_back(grid.point(i, j));
    return pts;
  }
};

/* Pick |Z| = (alpha_hat + 1)(beta_hat + 1) grid cells that impose independent
 * conditions in bidegrees (alpha, beta) and (alpha_hat, beta_hat), where
 * alpha_hat = a - 2 - alpha and beta_hat = b - 2 - beta.  Shapes:
 *   - alpha <= alpha_hat, beta <= beta_hat: the full subgrid;
 *   - alpha <= alpha_hat, beta >  beta_hat: balanced graph cells in an
 *     (alpha_hat + 1) x (beta + 1) grid;
 *   - otherwise: the mirrored graph on the swapped rulings. */
template <class K>
ZSubset<K> construct_Z(const K& field, int a, int b, int alpha, int beta) {
  if (a < 2 || b < 2) throw std::domain_error("construct_Z needs a, b >= 2");
  if (alpha < -1 || alpha > a - 2 || beta < -1 || beta > b - 2)
    throw std::domain_error("construct_Z needs alpha in [-1, a-2], beta in [-1, b-2]");
  const int ah = a - 2 - alpha, bh = b - 2 - beta;
  const long long small = static_cast<long long>(alpha + 1) * (beta + 1);
  const long long big = static_cast<long long>(ah + 1) * (bh + 1);
  if (small > big)
    throw std::domain_error("construct_Z needs (alpha+1)(beta+1) <= (alpha_hat+1)(beta_hat+1)");

  if (alpha <= ah && beta <= bh) {
    ZSubset<K> Z{make_grid(field, ah + 1, bh + 1), {}, alpha, beta, ah, bh,
                 ZCase::FullSubgrid};
    for (int i = 0; i <= ah; ++i)
      for (int j = 0; j <= bh; ++j) Z.cells.emplace_back(i, j);
    return Z;
  }
  if (alpha <= ah) {  // beta > beta_hat
    BipartiteGraph g = bipartite_graph(ah + 1, beta + 1, big);
    return ZSubset<K>{make_grid(field, ah + 1, beta + 1), g.edges, alpha, beta,
                      ah, bh, ZCase::Graph};
  }
  // alpha > alpha_hat (so beta <= beta_hat): mirror of the graph case
  BipartiteGraph g = bipartite_graph(bh + 1, alpha + 1, big);
  ZSubset<K> Z{make_grid(field, alpha + 1, bh + 1), {}, alpha, beta, ah, bh,
               ZCase::SwappedGraph};
  Z.cells.reserve(g.edges.size());
  for (const auto& [i, j] : g.edges) Z.cells.emplace_back(j, i);
  return Z;
}

/* Both evaluation maps out of Z must be injective on forms; empty bidegrees
 * are vacuously fine. */
template <class K>
bool verify_Z(const ZSubset<K>& Z) {
  auto pts = Z.points();
  auto injective = [&](int p, int q) {
    if (p < 0 || q < 0) return true;
    MapMatrix<K> M = evaluation_matrix(Z.grid.field(), pts, p, q);
    return matrix_rank(M) == M.cols();
  };
  return injective(Z.alpha, Z.beta) && injective(Z.alpha_hat, Z.beta_hat);
}

/* Points of `grid` whose coordinate values do not occur in Z.  Z must sit
 * inside the grid value-wise. */
template <class K>
std::vector<QPoint<K>> grid_points_minus(const Grid<K>& grid, const ZSubset<K>& Z) {
  using Element = typename K::Element;
  std::set<std::pair<Element, Element>> zvals;
  for (const auto& [i, j] : Z.cells) {
    Element lv = Z.grid.lambda()[static_cast<std::size_t>(i)];
    Element mv = Z.grid.mu()[static_cast<std::size_t>(j)];
    zvals.emplace(lv, mv);
  }
  std::set<std::pair<Element, Element>> gvals;
  for (const auto& lv : grid.lambda())
    for (const auto& mv : grid.mu()) gvals.emplace(lv, mv);
  for (const auto& zv : zvals)
    if (!gvals.count(zv))
      throw std::domain_error("Z does not sit inside the given grid");
  std::vector<QPoint<K>> pts;
  for (int i = 0; i < grid.rows(); ++i)
    for (int j = 0; j < grid.cols(); ++j) {
      auto key = std::make_pair(grid.lambda()[static_cast<std::size_t>(i)],
                                grid.mu()[static_cast<std::size_t>(j)]);
      if (!zvals.count(key)) pts.push_back(grid.point(i, j));
    }
  return pts;
}

}  // namespace bimulcon
