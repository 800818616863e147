#ifndef POLYSKEL_HYPERGRAPH_HPP
#define POLYSKEL_HYPERGRAPH_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyskel/errors.hpp"

namespace polyskel {

using Vertex = int;

// One flip step: `from` lost head status on the affected edges, `to` gained it.
struct Flip {
  Vertex from = -1;
  Vertex to = -1;
  friend bool operator==(const Flip&, const Flip&) = default;
};

// Digraph on dense vertex indices with deduplicated arcs, no self-loops.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> arcs);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }
  bool has_arc(Vertex u, Vertex v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs_;  // sorted, unique
};

// Whether all vertices can be removed by repeatedly deleting in-degree-zero
// vertices, always taking the smallest index first.
bool is_acyclic(const Digraph& d);

// Hypergraph on vertices 0..n-1. Edges keep their input order and are
// addressed by index; each edge is stored sorted and must have distinct
// members. Duplicate edges are allowed and remain distinct by index.
class Hypergraph {
 public:
  Hypergraph(int vertex_count, std::vector<std::vector<Vertex>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& edge(int index) const { return edges_.at(index); }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
  bool edge_contains(int index, Vertex v) const;

  // Indices of edges containing v, ascending.
  const std::vector<int>& incident_edges(Vertex v) const;

  // Indices of edges containing both u and v, ascending. Requires u != v.
  const std::vector<int>& edges_containing_pair(Vertex u, Vertex v) const;

  // Number of edges containing both u and v.
  int codegree(Vertex u, Vertex v) const;

  // Largest codegree over all vertex pairs; 0 when no pair co-occurs.
  int max_codegree() const;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<int>> incident_;
  std::unordered_map<std::uint64_t, std::vector<int>> pair_index_;
  int max_codegree_ = 0;
};

// Head choice per edge, parallel to the edge list.
struct Orientation {
  std::vector<Vertex> heads;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Throws ValidationError unless o has one head per edge and each head is a
// member of its edge.
void validate_orientation(const Hypergraph& h, const Orientation& o);

// Arcs u -> head(e) for every edge e and every other member u of e.
Digraph induced_digraph(const Hypergraph& h, const Orientation& o);

// Acyclicity of the induced digraph, without materializing it.
bool is_acyclic(const Hypergraph& h, const Orientation& o);

// Reassigns the head of every edge containing both `from` and `to` whose head
// is `from`. Does not check acyclicity of the result.
Orientation apply_flip(const Hypergraph& h, const Orientation& o, Vertex from,
                       Vertex to);

enum class FlipStatus {
  Flippable,  // at least one edge changes and the result is acyclic
  Blocked,    // at least one edge changes but the result has a cycle
  Vacuous,    // no edge has head `from` among those containing the pair
};

// Requires o acyclic (not re-checked) and from != to.
FlipStatus flip_status(const Hypergraph& h, const Orientation& o, Vertex from,
                       Vertex to);

// flip_status(...) == FlipStatus::Flippable. A vacuous flip is not flippable.
bool is_flippable(const Hypergraph& h, const Orientation& o, Vertex from,
                  Vertex to);

// All acyclic orientations, by trying every head combination. The number of
// combinations must not exceed max_combinations (CapacityError otherwise).
// Output is in odometer order over per-edge head positions.
std::vector<Orientation> enumerate_acyclic_orientations(
    const Hypergraph& h, std::uint64_t max_combinations = 10'000'000);

namespace detail {

// Same as is_acyclic(h, o) but skips head-membership validation; for hot
// loops whose callers uphold the invariant themselves.
bool is_acyclic_unchecked(const Hypergraph& h, const std::vector<Vertex>& heads);

}  // namespace detail

}  // namespace polyskel

#endif
