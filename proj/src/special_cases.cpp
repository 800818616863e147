#include "polyskel/special_cases.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace polyskel {

RankOracle uniform_matroid(int n, int k) {
  if (n < 0 || n > 63) throw ValidationError("uniform matroid: need 0 <= n <= 63");
  if (k < 0 || k > n) throw ValidationError("uniform matroid: need 0 <= k <= n");
  RankOracle oracle;
  oracle.n = n;
  oracle.label = "uniform(" + std::to_string(k) + "," + std::to_string(n) + ")";
  oracle.f = [k](std::uint64_t mask) {
    return static_cast<long long>(std::min(std::popcount(mask), k));
  };
  return oracle;
}

RankOracle graphic_matroid(const Graph& g) {
  if (g.edge_count() > 63)
    throw ValidationError("graphic matroid: more than 63 edges");
  const int n = g.vertex_count();
  auto edges = g.edges();
  RankOracle oracle;
  oracle.n = g.edge_count();
  oracle.label = "graphic";
  oracle.f = [n, edges](std::uint64_t mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    long long rank = 0;
    for (std::uint64_t scan = mask; scan;) {
      int i = std::countr_zero(scan);
      scan &= scan - 1;
      int ru = find(edges[i].first), rv = find(edges[i].second);
      if (ru != rv) {
        parent[ru] = rv;
        ++rank;
      }
    }
    return rank;
  };
  return oracle;
}

bool is_base(const RankOracle& oracle, std::uint64_t base) {
  long long rank = oracle.value(oracle.full_mask());
  return std::popcount(base) == rank && oracle.value(base) == rank;
}

std::vector<std::uint64_t> matroid_exchange_path(const RankOracle& oracle,
                                                 std::uint64_t base_a,
                                                 std::uint64_t base_b) {
  if (!is_base(oracle, base_a))
    throw ValidationError("exchange path: first set is not a base");
  if (!is_base(oracle, base_b))
    throw ValidationError("exchange path: second set is not a base");
  const long long rank = oracle.value(oracle.full_mask());
  std::vector<std::uint64_t> path{base_a};
  std::uint64_t cur = base_a;
  while (cur != base_b) {
    bool advanced = false;
    for (std::uint64_t add = base_b & ~cur; add && !advanced;
         add &= add - 1) {
      std::uint64_t i = std::uint64_t{1} << std::countr_zero(add);
      for (std::uint64_t drop = cur & ~base_b; drop; drop &= drop - 1) {
        std::uint64_t j = std::uint64_t{1} << std::countr_zero(drop);
        std::uint64_t cand = (cur | i) & ~j;
        if (oracle.value(cand) == rank) {
          cur = cand;
          path.push_back(cur);
          advanced = true;
          break;
        }
      }
    }
    if (!advanced)
      throw ValidationError(
          "exchange path: oracle violates the base exchange property");
  }
  return path;
}

std::vector<std::uint64_t> enumerate_bases(const RankOracle& oracle) {
  if (oracle.n > 24)
    throw CapacityError("base enumeration: ground set too large");
  long long rank = oracle.value(oracle.full_mask());
  std::vector<std::uint64_t> bases;
  const std::uint64_t limit = std::uint64_t{1} << oracle.n;
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    if (std::popcount(mask) == rank && oracle.value(mask) == rank)
      bases.push_back(mask);
  return bases;
}

namespace {

std::optional<RankAxiomViolation> bad_marginal(const RankOracle& oracle,
                                               std::uint64_t set, int e) {
  std::uint64_t bit = std::uint64_t{1} << e;
  long long delta = oracle.value(set | bit) - oracle.value(set);
  if (delta < 0) return RankAxiomViolation{set, e, "marginal below 0"};
  if (delta > 1) return RankAxiomViolation{set, e, "marginal above 1"};
  return std::nullopt;
}

}  // namespace

std::optional<RankAxiomViolation> check_rank_axioms(const RankOracle& oracle,
                                                    std::uint64_t samples,
                                                    const std::uint64_t* seed) {
  if (oracle.value(0) != 0)
    return RankAxiomViolation{0, -1, "f(empty set) != 0"};
  if (oracle.n == 0) return std::nullopt;
  if (oracle.n <= 12) {
    const std::uint64_t limit = std::uint64_t{1} << oracle.n;
    for (std::uint64_t mask = 0; mask < limit; ++mask)
      for (int e = 0; e < oracle.n; ++e) {
        if (mask >> e & 1) continue;
        if (auto v = bad_marginal(oracle, mask, e)) return v;
      }
    return std::nullopt;
  }
  if (!seed)
    throw ValidationError(
        "rank axiom check: ground set too large for the exhaustive test; a "
        "seed is required for sampling");
  if (samples == 0) samples = 100'000;
  std::mt19937_64 rng(*seed);
  const std::uint64_t full = oracle.full_mask();
  for (std::uint64_t i = 0; i < samples; ++i) {
    int e = static_cast<int>(rng() % oracle.n);
    std::uint64_t mask = rng() & full & ~(std::uint64_t{1} << e);
    if (auto v = bad_marginal(oracle, mask, e)) return v;
  }
  return std::nullopt;
}

Graph reconstruct_graph(const SubmodularOracle& oracle) {
  const int n = oracle.n;
  std::vector<long long> single(n);
  for (int v = 0; v < n; ++v) single[v] = oracle.value(std::uint64_t{1} << v);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t both = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      long long marginal = single[u] + single[v] - oracle.value(both);
      if (marginal == 1)
        edges.emplace_back(u, v);
      else if (marginal != 0)
        throw ValidationError(
            "reconstruction: oracle is not a cut-count oracle of a simple "
            "graph");
    }
  return Graph(n, std::move(edges));
}

Orientation orientation_from_indegrees(const Graph& g,
                                       const std::vector<int>& d) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (static_cast<int>(d.size()) != n)
    throw ValidationError("in-degree realization: size mismatch");
  long long total = 0;
  for (int v : d) {
    if (v < 0) throw ValidationError("in-degree realization: negative entry");
    total += v;
  }
  if (total != m)
    throw ValidationError(
        "in-degree realization: entries must sum to the edge count");

  std::vector<int> residual = d;
  std::vector<char> vertex_done(n, 0), edge_done(m, 0);
  Orientation o;
  o.heads.assign(m, -1);
  std::vector<std::vector<int>> incident(n);
  for (int i = 0; i < m; ++i) {
    incident[g.edge(i).first].push_back(i);
    incident[g.edge(i).second].push_back(i);
  }
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!vertex_done[v] && residual[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0)
      throw ValidationError(
          "in-degree realization: no acyclic orientation matches");
    vertex_done[pick] = 1;
    for (int ei : incident[pick]) {
      if (edge_done[ei]) continue;
      edge_done[ei] = 1;
      auto [u, v] = g.edge(ei);
      int other = u == pick ? v : u;
      o.heads[ei] = other;
      if (--residual[other] < 0)
        throw ValidationError(
            "in-degree realization: no acyclic orientation matches");
    }
  }
  return o;
}

FlipSequence zonotope_flip_sequence(const Graph& g, const Orientation& a,
                                    const Orientation& b) {
  Hypergraph h = g.to_hypergraph();
  validate_orientation(h, a);
  validate_orientation(h, b);
  if (!detail::is_acyclic_unchecked(h, a.heads))
    throw ValidationError("zonotope flips: first orientation is not acyclic");
  if (!detail::is_acyclic_unchecked(h, b.heads))
    throw ValidationError("zonotope flips: second orientation is not acyclic");
  FlipSequence seq;
  seq.start = a;
  seq.end = b;
  Orientation cur = a;
  long long guard = diff_count(h, a, b) + 1;
  while (cur.heads != b.heads) {
    if (--guard < 0)
      throw std::logic_error("disagreement count failed to decrease");
    bool advanced = false;
    for (int i = 0; i < h.edge_count() && !advanced; ++i) {
      if (cur.heads[i] == b.heads[i]) continue;
      Vertex u = cur.heads[i];
      Vertex w = b.heads[i];
      Orientation next = cur;
      next.heads[i] = w;
      if (detail::is_acyclic_unchecked(h, next.heads)) {
        cur = std::move(next);
        seq.flips.push_back(Flip{u, w});
        advanced = true;
      }
    }
    if (!advanced)
      throw std::logic_error(
          "no reversible disagreeing edge between distinct acyclic "
          "orientations");
  }
  return seq;
}

}  // namespace polyskel
