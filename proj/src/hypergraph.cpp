#include "polyskel/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace polyskel {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

const std::vector<int>& empty_index_list() {
  static const std::vector<int> empty;
  return empty;
}

}  // namespace

Digraph::Digraph(int vertex_count, std::vector<std::pair<Vertex, Vertex>> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
  if (n_ < 0) throw ValidationError("digraph: negative vertex count");
  for (const auto& [u, v] : arcs_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw ValidationError("digraph: arc endpoint out of range");
    if (u == v) throw ValidationError("digraph: self-loop");
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

bool is_acyclic(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (const auto& [u, v] : d.arcs()) {
    out[u].push_back(v);
    ++indeg[v];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  int removed = 0;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    ++removed;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  return removed == n;
}

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<Vertex>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw ValidationError("hypergraph: negative vertex count");
  incident_.resize(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.empty()) throw ValidationError("hypergraph: empty edge");
    std::sort(e.begin(), e.end());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < 0 || e[k] >= n_)
        throw ValidationError("hypergraph: vertex out of range in edge " +
                              std::to_string(i));
      if (k > 0 && e[k] == e[k - 1])
        throw ValidationError("hypergraph: repeated vertex in edge " +
                              std::to_string(i));
      incident_[e[k]].push_back(static_cast<int>(i));
    }
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        pair_index_[pair_key(e[a], e[b])].push_back(static_cast<int>(i));
  }
  for (const auto& [key, list] : pair_index_)
    max_codegree_ = std::max(max_codegree_, static_cast<int>(list.size()));
}

bool Hypergraph::edge_contains(int index, Vertex v) const {
  const auto& e = edges_.at(index);
  return std::binary_search(e.begin(), e.end(), v);
}

const std::vector<int>& Hypergraph::incident_edges(Vertex v) const {
  check_vertex(v);
  return incident_[v];
}

const std::vector<int>& Hypergraph::edges_containing_pair(Vertex u,
                                                          Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ValidationError("hypergraph: pair needs distinct vertices");
  auto it = pair_index_.find(pair_key(u, v));
  return it == pair_index_.end() ? empty_index_list() : it->second;
}

int Hypergraph::codegree(Vertex u, Vertex v) const {
  return static_cast<int>(edges_containing_pair(u, v).size());
}

int Hypergraph::max_codegree() const { return max_codegree_; }

void Hypergraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw ValidationError("hypergraph: vertex out of range");
}

void validate_orientation(const Hypergraph& h, const Orientation& o) {
  if (static_cast<int>(o.heads.size()) != h.edge_count())
    throw ValidationError("orientation: one head per edge required");
  for (int i = 0; i < h.edge_count(); ++i)
    if (!h.edge_contains(i, o.heads[i]))
      throw ValidationError("orientation: head of edge " + std::to_string(i) +
                            " is not a member of the edge");
}

Digraph induced_digraph(const Hypergraph& h, const Orientation& o) {
  validate_orientation(h, o);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (int i = 0; i < h.edge_count(); ++i) {
    Vertex head = o.heads[i];
    for (Vertex u : h.edge(i))
      if (u != head) arcs.emplace_back(u, head);
  }
  return Digraph(h.vertex_count(), std::move(arcs));
}

namespace detail {

bool is_acyclic_unchecked(const Hypergraph& h,
                          const std::vector<Vertex>& heads) {
  const int n = h.vertex_count();
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < h.edge_count(); ++i)
    indeg[heads[i]] += static_cast<int>(h.edge(i).size()) - 1;
  std::vector<int> stack;
  stack.reserve(n);
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int e : h.incident_edges(v)) {
      Vertex t = heads[e];
      if (t != v && --indeg[t] == 0) stack.push_back(t);
    }
  }
  return removed == n;
}

}  // namespace detail

bool is_acyclic(const Hypergraph& h, const Orientation& o) {
  validate_orientation(h, o);
  return detail::is_acyclic_unchecked(h, o.heads);
}

Orientation apply_flip(const Hypergraph& h, const Orientation& o, Vertex from,
                       Vertex to) {
  if (from == to) throw ValidationError("flip: endpoints must differ");
  if (static_cast<int>(o.heads.size()) != h.edge_count())
    throw ValidationError("flip: orientation size mismatch");
  Orientation result = o;
  for (int e : h.edges_containing_pair(from, to))
    if (result.heads[e] == from) result.heads[e] = to;
  return result;
}

FlipStatus flip_status(const Hypergraph& h, const Orientation& o, Vertex from,
                       Vertex to) {
  if (from == to) throw ValidationError("flip: endpoints must differ");
  bool touches = false;
  for (int e : h.edges_containing_pair(from, to))
    if (o.heads[e] == from) {
      touches = true;
      break;
    }
  if (!touches) return FlipStatus::Vacuous;
  Orientation next = apply_flip(h, o, from, to);
  return is_acyclic(h, next) ? FlipStatus::Flippable : FlipStatus::Blocked;
}

bool is_flippable(const Hypergraph& h, const Orientation& o, Vertex from,
                  Vertex to) {
  return flip_status(h, o, from, to) == FlipStatus::Flippable;
}

std::vector<Orientation> enumerate_acyclic_orientations(
    const Hypergraph& h, std::uint64_t max_combinations) {
  const int m = h.edge_count();
  std::uint64_t combos = 1;
  for (int i = 0; i < m; ++i) {
    std::uint64_t size = h.edge(i).size();
    if (combos > max_combinations / size)
      throw CapacityError("orientation enumeration: too many combinations");
    combos *= size;
  }
  std::vector<Orientation> result;
  std::vector<std::size_t> pos(m, 0);
  Orientation o;
  o.heads.resize(m);
  while (true) {
    for (int i = 0; i < m; ++i) o.heads[i] = h.edge(i)[pos[i]];
    if (is_acyclic(h, o)) result.push_back(o);
    int i = m - 1;
    while (i >= 0 && pos[i] + 1 == h.edge(i).size()) {
      pos[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++pos[i];
  }
  return result;
}

}  // namespace polyskel
