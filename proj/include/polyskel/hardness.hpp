#ifndef POLYSKEL_HARDNESS_HPP
#define POLYSKEL_HARDNESS_HPP

#include <string>
#include <vector>

#include "polyskel/flip_engine.hpp"
#include "polyskel/graph.hpp"
#include "polyskel/hypergraph.hpp"

namespace polyskel {

// Center 0 and leaves 1..6; two-element edges {0,i} headed at the leaves and
// all 15 triples {0,i,j}. min_heads points every triple at its smallest
// leaf, max_heads at its largest; the two orientations differ on exactly the
// triples.
struct StarGadget {
  Hypergraph h;
  Orientation min_heads;
  Orientation max_heads;
};

StarGadget build_star_gadget();

// Twelve flips from min_heads to max_heads: six gathering every head at the
// center, six redistributing them to the leaves in the same pair order.
std::vector<Flip> star_gadget_schedule();

// Hypergraph with one vertex pair per graph vertex and one star gadget per
// graph edge, wired so that a gadget can run its schedule only while one
// endpoint pair of its edge is flipped back. start and goal disagree exactly
// on the gadget triples.
struct ReductionInstance {
  Graph source;
  Hypergraph h;
  Orientation start;
  Orientation goal;

  int vertex_minus(int v) const { return 2 * v; }
  int vertex_plus(int v) const { return 2 * v + 1; }
  int gadget_center(int k) const {
    return 2 * source.vertex_count() + 7 * k;
  }
  int gadget_leaf(int k, int i) const { return gadget_center(k) + i; }

  // One label per hypergraph vertex, e.g. "v3-", "v3+", "e0.c", "e0.w4".
  std::vector<std::string> vertex_names() const;
};

ReductionInstance build_reduction(const Graph& g);

// Exact minimum vertex cover by branch and bound; requires at most 20
// vertices. Result is sorted ascending.
std::vector<int> min_vertex_cover(const Graph& g);

struct ReductionBound {
  std::vector<int> cover;
  long long distance = 0;  // 2 * cover size + 12 * edge count
};

// The flip distance between start and goal of build_reduction(g), computed
// from a minimum vertex cover of g without searching the flip graph.
ReductionBound reduction_distance(const Graph& g);

// Flip walk realizing 2 * cover + 12 * edges: flip the cover pairs back,
// run every gadget schedule, flip the cover pairs forward again. The cover
// must hit every edge of the source graph. The result is replay-checked
// before returning.
FlipSequence witness_sequence(const ReductionInstance& inst,
                              const std::vector<int>& cover);

}  // namespace polyskel

#endif
