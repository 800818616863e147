#include "polyskel/graph.hpp"

#include <algorithm>
#include <set>

namespace polyskel {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw ValidationError("graph: negative vertex count");
  adj_.resize(n_);
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw ValidationError("graph: edge endpoint out of range");
    if (u == v) throw ValidationError("graph: self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ValidationError("graph: duplicate edge");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw ValidationError("graph: vertex out of range");
  return adj_[v];
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n_;
}

Hypergraph Graph::to_hypergraph() const {
  std::vector<std::vector<Vertex>> hyperedges;
  hyperedges.reserve(edges_.size());
  for (const auto& [u, v] : edges_) hyperedges.push_back({u, v});
  return Hypergraph(n_, std::move(hyperedges));
}

std::vector<int> indegree_vector(const Graph& g, const Orientation& o) {
  if (static_cast<int>(o.heads.size()) != g.edge_count())
    throw ValidationError("in-degree: orientation size mismatch");
  std::vector<int> deg(g.vertex_count(), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edge(i);
    if (o.heads[i] != u && o.heads[i] != v)
      throw ValidationError("in-degree: head is not an endpoint");
    ++deg[o.heads[i]];
  }
  return deg;
}

}  // namespace polyskel
