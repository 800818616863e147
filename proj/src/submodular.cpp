#include "polyskel/submodular.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace polyskel {

long long SubmodularOracle::value(std::uint64_t mask) const {
  if ((mask & ~full_mask()) != 0)
    throw ValidationError("oracle: mask outside the ground set");
  return f(mask);
}

SubmodularOracle hypergraph_cut_count_oracle(const Hypergraph& h) {
  if (h.vertex_count() > 63)
    throw ValidationError("oracle: more than 63 vertices");
  std::vector<std::uint64_t> edge_masks;
  edge_masks.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= std::uint64_t{1} << v;
    edge_masks.push_back(m);
  }
  SubmodularOracle oracle;
  oracle.n = h.vertex_count();
  oracle.label = "edges-met";
  oracle.f = [edge_masks = std::move(edge_masks)](std::uint64_t mask) {
    long long count = 0;
    for (std::uint64_t em : edge_masks)
      if ((em & mask) != 0) ++count;
    return count;
  };
  return oracle;
}

Hypergraph interval_hypergraph(int n) {
  if (n < 1) throw ValidationError("interval hypergraph: need n >= 1");
  std::vector<std::vector<Vertex>> edges;
  for (int len = 2; len <= n; ++len)
    for (int start = 0; start + len <= n; ++start) {
      std::vector<Vertex> e(len);
      for (int k = 0; k < len; ++k) e[k] = start + k;
      edges.push_back(std::move(e));
    }
  return Hypergraph(n, std::move(edges));
}

Hypergraph building_set_hypergraph(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16)
    throw CapacityError("building set: more than 16 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::vector<std::uint32_t> connected;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::uint32_t start = mask & (~mask + 1);
    std::uint32_t seen = start;
    while (true) {
      std::uint32_t grow = seen;
      std::uint32_t scan = seen;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        grow |= adj[v] & mask;
      }
      if (grow == seen) break;
      seen = grow;
    }
    if (seen == mask) connected.push_back(mask);
  }
  std::sort(connected.begin(), connected.end(),
            [](std::uint32_t a, std::uint32_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(connected.size());
  for (std::uint32_t mask : connected) {
    std::vector<Vertex> e;
    for (std::uint32_t scan = mask; scan;) {
      e.push_back(std::countr_zero(scan));
      scan &= scan - 1;
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

namespace {

std::optional<SubmodularityViolation> violation_for(
    const SubmodularOracle& oracle, std::uint64_t a, std::uint64_t b,
    const std::vector<long long>* table) {
  auto val = [&](std::uint64_t m) {
    return table ? (*table)[m] : oracle.value(m);
  };
  long long lhs = val(a) + val(b);
  long long rhs = val(a | b) + val(a & b);
  if (lhs < rhs) return SubmodularityViolation{a, b, lhs, rhs};
  return std::nullopt;
}

}  // namespace

std::optional<SubmodularityViolation> check_submodular(
    const SubmodularOracle& oracle) {
  if (oracle.n > 12)
    throw CapacityError("submodularity check: exhaustive mode needs n <= 12");
  const std::uint64_t limit = std::uint64_t{1} << oracle.n;
  std::vector<long long> table(limit);
  for (std::uint64_t m = 0; m < limit; ++m) table[m] = oracle.value(m);
  for (std::uint64_t a = 0; a < limit; ++a)
    for (std::uint64_t b = a + 1; b < limit; ++b)
      if (auto v = violation_for(oracle, a, b, &table)) return v;
  return std::nullopt;
}

std::optional<SubmodularityViolation> check_submodular_sampled(
    const SubmodularOracle& oracle, std::uint64_t samples,
    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t full = oracle.full_mask();
  for (std::uint64_t k = 0; k < samples; ++k) {
    std::uint64_t a = rng() & full;
    std::uint64_t b = rng() & full;
    if (auto v = violation_for(oracle, a, b, nullptr)) return v;
  }
  return std::nullopt;
}

bool is_normalized(const SubmodularOracle& oracle) {
  return oracle.value(0) == 0;
}

std::vector<long long> greedy_vertex(const SubmodularOracle& oracle,
                                     const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != oracle.n)
    throw ValidationError("greedy vertex: order size mismatch");
  std::vector<char> seen(oracle.n, 0);
  for (int v : order) {
    if (v < 0 || v >= oracle.n || seen[v])
      throw ValidationError("greedy vertex: order is not a permutation");
    seen[v] = 1;
  }
  std::vector<long long> x(oracle.n, 0);
  std::uint64_t prefix = 0;
  long long prev = oracle.value(0);
  for (int v : order) {
    prefix |= std::uint64_t{1} << v;
    long long cur = oracle.value(prefix);
    x[v] = cur - prev;
    prev = cur;
  }
  return x;
}

std::vector<long long> head_count_vector(const Hypergraph& h,
                                         const Orientation& o) {
  validate_orientation(h, o);
  std::vector<long long> x(h.vertex_count(), 0);
  for (Vertex head : o.heads) ++x[head];
  return x;
}

Orientation orientation_of_head_counts(const Hypergraph& h,
                                       const std::vector<long long>& x) {
  const int n = h.vertex_count();
  const int m = h.edge_count();
  if (static_cast<int>(x.size()) != n)
    throw ValidationError("head counts: size mismatch");
  long long total = 0;
  for (long long v : x) {
    if (v < 0) throw ValidationError("head counts: negative entry");
    total += v;
  }
  if (total != m)
    throw ValidationError("head counts: entries must sum to the edge count");

  // Peel the vertex (smallest index first) whose remaining incidence count
  // equals its coordinate; all remaining edges through it get that head.
  std::vector<int> remaining_incidence(n, 0);
  for (const auto& e : h.edges())
    for (Vertex v : e) ++remaining_incidence[v];
  std::vector<char> vertex_done(n, 0), edge_done(m, 0);
  Orientation o;
  o.heads.assign(m, -1);
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!vertex_done[v] && remaining_incidence[v] == x[v]) {
        pick = v;
        break;
      }
    if (pick < 0)
      throw ValidationError(
          "head counts: not realized by any acyclic orientation");
    vertex_done[pick] = 1;
    for (int ei : h.incident_edges(pick)) {
      if (edge_done[ei]) continue;
      edge_done[ei] = 1;
      o.heads[ei] = pick;
      for (Vertex w : h.edge(ei)) --remaining_incidence[w];
    }
  }
  return o;
}

CorrespondenceReport check_vertex_correspondence(
    const Hypergraph& h, std::uint64_t max_combinations) {
  if (h.vertex_count() > 8)
    throw CapacityError("vertex correspondence check needs n <= 8");
  CorrespondenceReport report;
  const int n = h.vertex_count();
  auto orientations = enumerate_acyclic_orientations(h, max_combinations);
  report.orientation_count = orientations.size();

  std::set<std::vector<long long>> head_vectors;
  for (const auto& o : orientations) {
    auto x = head_count_vector(h, o);
    if (!head_vectors.insert(x).second) {
      report.detail = "two acyclic orientations share a head-count vector";
      return report;
    }
    Orientation back = orientation_of_head_counts(h, x);
    if (back.heads != o.heads) {
      report.detail = "head-count vector does not round-trip";
      return report;
    }
  }

  SubmodularOracle oracle = hypergraph_cut_count_oracle(h);
  std::set<std::vector<long long>> greedy_points;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  do {
    greedy_points.insert(greedy_vertex(oracle, order));
  } while (std::next_permutation(order.begin(), order.end()));
  report.greedy_point_count = greedy_points.size();

  if (head_vectors != greedy_points) {
    report.detail = "greedy points differ from head-count vectors";
    return report;
  }
  report.ok = true;
  return report;
}

}  // namespace polyskel
