#ifndef POLYSKEL_GRAPH_HPP
#define POLYSKEL_GRAPH_HPP

#include <utility>
#include <vector>

#include "polyskel/hypergraph.hpp"

namespace polyskel {

// Simple undirected graph on vertices 0..n-1. Edges keep input order, are
// normalized to (min, max), and must be loop-free and pairwise distinct.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::pair<int, int>& edge(int index) const { return edges_.at(index); }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  bool connected() const;

  // The same graph as a hypergraph of two-element edges, same edge order.
  Hypergraph to_hypergraph() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// Per-vertex in-degrees of an edge orientation (heads are arc targets).
std::vector<int> indegree_vector(const Graph& g, const Orientation& o);

}  // namespace polyskel

#endif
