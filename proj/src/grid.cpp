#include "bimulcon/grid.hpp"

#include <numeric>
#include <stdexcept>

namespace bimulcon {

std::vector<int> BipartiteGraph::row_degrees() const {
  std::vector<int> d(static_cast<std::size_t>(rows), 0);
  for (const auto& [i, j] : edges) ++d[static_cast<std::size_t>(i)];
  return d;
}

std::vector<int> BipartiteGraph::col_degrees() const {
  std::vector<int> d(static_cast<std::size_t>(cols), 0);
  for (const auto& [i, j] : edges) ++d[static_cast<std::size_t>(j)];
  return d;
}

/* Walk the torus diagonally, shifting the column track by one every time a
 * full lcm cycle closes; the first rows*cols steps visit every cell once, so
 * any prefix is duplicate-free with degrees as balanced as they can be. */
BipartiteGraph bipartite_graph(int rows, int cols, long long n_edges) {
  if (rows < 1 || cols < 1) throw std::domain_error("bipartite graph needs rows, cols >= 1");
  if (n_edges < 0 || n_edges > static_cast<long long>(rows) * cols)
    throw std::domain_error("edge count must lie in [0, rows*cols]");
  const long long cycle = std::lcm<long long>(rows, cols);
  BipartiteGraph g{rows, cols, {}};
  g.edges.reserve(static_cast<std::size_t>(n_edges));
  for (long long k = 0; k < n_edges; ++k)
    g.edges.emplace_back(static_cast<int>(k % rows),
                         static_cast<int>((k + k / cycle) % cols));
  return g;
}

const char* to_string(ZCase c) {
  switch (c) {
    case ZCase::FullSubgrid: return "full-subgrid";
    case ZCase::Graph: return "graph";
    case ZCase::SwappedGraph: return "swapped-graph";
  }
  return "?";
}

}  // namespace bimulcon
