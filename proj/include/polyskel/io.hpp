#ifndef POLYSKEL_IO_HPP
#define POLYSKEL_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyskel/box.hpp"
#include "polyskel/graph.hpp"
#include "polyskel/hypergraph.hpp"
#include "polyskel/special_cases.hpp"

namespace polyskel {

// Every instance file is a JSON object with "kind" and "version": 1 plus the
// payload fields of its kind. Unknown fields and wrong types are rejected
// with ParseError.

struct NamedHypergraph {
  Hypergraph h;
  std::vector<std::string> names;  // one label per vertex, or empty
};

// kind "hypergraph": n, edges (arrays of vertex indices, or of labels when
// the optional names array is present).
NamedHypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const Hypergraph& h,
                     const std::vector<std::string>& names = {});

// kind "orientation": heads, one vertex index per edge.
Orientation load_orientation(const std::string& path);
void save_orientation(const std::string& path, const Orientation& o);

// kind "graph": n, edges as [u, v] pairs.
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

// kind "box": coordinate vectors a and b.
BoxInstance load_box(const std::string& path);
void save_box(const std::string& path, const BoxInstance& inst);

// kind "pcfct": supplies and demands.
PcfctInstance load_pcfct(const std::string& path);
void save_pcfct(const std::string& path, const PcfctInstance& p);

// kind "matroid-test": an oracle description plus two bases as element lists. The
// oracle description is {"type": "uniform", n, k}, {"type": "graphic", graph}, or
// {"type": "table", n, values} with one value per subset mask.
struct MatroidTest {
  RankOracle oracle;
  std::uint64_t base_a = 0;
  std::uint64_t base_b = 0;
};

MatroidTest load_matroid_test(const std::string& path);

}  // namespace polyskel

#endif
