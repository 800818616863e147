#include "polyskel/hardness.hpp"

#include <algorithm>

namespace polyskel {

StarGadget build_star_gadget() {
  std::vector<std::vector<Vertex>> edges;
  for (int i = 1; i <= 6; ++i) edges.push_back({0, i});
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) edges.push_back({0, i, j});
  Hypergraph h(7, std::move(edges));
  Orientation lo, hi;
  for (int i = 1; i <= 6; ++i) {
    lo.heads.push_back(i);
    hi.heads.push_back(i);
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      lo.heads.push_back(i);
      hi.heads.push_back(j);
    }
  StarGadget gadget{std::move(h), std::move(lo), std::move(hi)};
  if (!is_acyclic(gadget.h, gadget.min_heads) ||
      !is_acyclic(gadget.h, gadget.max_heads))
    throw std::logic_error("star gadget: orientation not acyclic");
  return gadget;
}

std::vector<Flip> star_gadget_schedule() {
  std::vector<Flip> flips;
  for (int i = 6; i >= 1; --i) flips.push_back(Flip{i, 0});
  for (int i = 6; i >= 1; --i) flips.push_back(Flip{0, i});
  return flips;
}

std::vector<std::string> ReductionInstance::vertex_names() const {
  std::vector<std::string> names(h.vertex_count());
  for (int v = 0; v < source.vertex_count(); ++v) {
    names[vertex_minus(v)] = "v" + std::to_string(v) + "-";
    names[vertex_plus(v)] = "v" + std::to_string(v) + "+";
  }
  for (int k = 0; k < source.edge_count(); ++k) {
    names[gadget_center(k)] = "e" + std::to_string(k) + ".c";
    for (int i = 1; i <= 6; ++i)
      names[gadget_leaf(k, i)] = "e" + std::to_string(k) + ".w" +
                                 std::to_string(i);
  }
  return names;
}

ReductionInstance build_reduction(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int total = 2 * n + 7 * m;
  std::vector<std::vector<Vertex>> edges;
  Orientation start, goal;
  auto minus = [](int v) { return 2 * v; };
  auto plus = [](int v) { return 2 * v + 1; };

  for (int v = 0; v < n; ++v) {
    edges.push_back({minus(v), plus(v)});
    start.heads.push_back(plus(v));
    goal.heads.push_back(plus(v));
  }
  for (int k = 0; k < m; ++k) {
    auto [u, v] = g.edge(k);
    int c = 2 * n + 7 * k;
    auto leaf = [c](int i) { return c + i; };
    for (int i = 1; i <= 6; ++i) {
      edges.push_back({c, leaf(i)});
      start.heads.push_back(leaf(i));
      goal.heads.push_back(leaf(i));
    }
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        edges.push_back({c, leaf(i), leaf(j)});
        start.heads.push_back(leaf(i));
        goal.heads.push_back(leaf(j));
      }
    edges.push_back({c, minus(u)});
    start.heads.push_back(minus(u));
    goal.heads.push_back(minus(u));
    edges.push_back({plus(u), minus(v)});
    start.heads.push_back(minus(v));
    goal.heads.push_back(minus(v));
    for (int i = 1; i <= 6; ++i) {
      edges.push_back({leaf(i), plus(v)});
      start.heads.push_back(leaf(i));
      goal.heads.push_back(leaf(i));
    }
  }
  ReductionInstance inst{g, Hypergraph(total, std::move(edges)),
                         std::move(start), std::move(goal)};
  if (!is_acyclic(inst.h, inst.start) || !is_acyclic(inst.h, inst.goal))
    throw std::logic_error("reduction: orientation not acyclic");
  return inst;
}

namespace {

void cover_search(const Graph& g, std::uint32_t covered, int chosen,
                  std::uint32_t& best_mask, int& best) {
  if (chosen >= best) return;
  // take any vertex whose last uncovered edge would otherwise force it, and
  // otherwise branch on the two endpoints of the first uncovered edge
  int branch_edge = -1;
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [u, v] = g.edge(k);
    if ((covered >> u & 1) || (covered >> v & 1)) continue;
    branch_edge = k;
    break;
  }
  if (branch_edge < 0) {
    best = chosen;
    best_mask = covered;
    return;
  }
  auto degree_one_endpoint = [&](int w) {
    int uncovered = 0;
    for (int x : g.neighbors(w))
      if (!(covered >> x & 1) && !(covered >> w & 1)) ++uncovered;
    return uncovered == 1;
  };
  auto [u, v] = g.edge(branch_edge);
  if (degree_one_endpoint(u)) {
    cover_search(g, covered | (std::uint32_t{1} << v), chosen + 1, best_mask,
                 best);
    return;
  }
  if (degree_one_endpoint(v)) {
    cover_search(g, covered | (std::uint32_t{1} << u), chosen + 1, best_mask,
                 best);
    return;
  }
  cover_search(g, covered | (std::uint32_t{1} << u), chosen + 1, best_mask,
               best);
  cover_search(g, covered | (std::uint32_t{1} << v), chosen + 1, best_mask,
               best);
}

}  // namespace

std::vector<int> min_vertex_cover(const Graph& g) {
  if (g.vertex_count() > 20)
    throw CapacityError("vertex cover: exact search needs at most 20 vertices");
  std::uint32_t best_mask = 0;
  int best = g.vertex_count() + 1;
  cover_search(g, 0, 0, best_mask, best);
  std::vector<int> cover;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (best_mask >> v & 1) cover.push_back(v);
  return cover;
}

ReductionBound reduction_distance(const Graph& g) {
  ReductionBound bound;
  bound.cover = min_vertex_cover(g);
  bound.distance = 2 * static_cast<long long>(bound.cover.size()) +
                   12 * static_cast<long long>(g.edge_count());
  return bound;
}

FlipSequence witness_sequence(const ReductionInstance& inst,
                              const std::vector<int>& cover) {
  const Graph& g = inst.source;
  std::vector<char> in_cover(g.vertex_count(), 0);
  for (int v : cover) {
    if (v < 0 || v >= g.vertex_count())
      throw ValidationError("witness: cover vertex out of range");
    in_cover[v] = 1;
  }
  for (const auto& [u, v] : g.edges())
    if (!in_cover[u] && !in_cover[v])
      throw ValidationError("witness: set does not cover every edge");

  std::vector<int> sorted_cover;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in_cover[v]) sorted_cover.push_back(v);

  FlipSequence seq;
  seq.start = inst.start;
  seq.end = inst.goal;
  for (int v : sorted_cover)
    seq.flips.push_back(Flip{inst.vertex_plus(v), inst.vertex_minus(v)});
  for (int k = 0; k < g.edge_count(); ++k)
    for (const Flip& f : star_gadget_schedule()) {
      auto translate = [&](int local) {
        return local == 0 ? inst.gadget_center(k) : inst.gadget_leaf(k, local);
      };
      seq.flips.push_back(Flip{translate(f.from), translate(f.to)});
    }
  for (int v : sorted_cover)
    seq.flips.push_back(Flip{inst.vertex_minus(v), inst.vertex_plus(v)});

  std::string why;
  if (!replay_is_valid(inst.h, seq, &why))
    throw std::logic_error("witness: replay failed: " + why);
  return seq;
}

}  // namespace polyskel
