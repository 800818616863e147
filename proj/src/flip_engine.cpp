#include "polyskel/flip_engine.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <unordered_map>

namespace polyskel {

namespace {

// Search states are strings with one byte per edge: the position of the
// current head inside the sorted edge. Keeps keys compact and hashable.
class StateCodec {
 public:
  explicit StateCodec(const Hypergraph& h) : h_(&h) {
    for (int i = 0; i < h.edge_count(); ++i)
      if (h.edge(i).size() > 255)
        throw CapacityError("flip search: edge too large to encode");
  }

  std::string encode(const std::vector<Vertex>& heads) const {
    std::string s(h_->edge_count(), '\0');
    for (int i = 0; i < h_->edge_count(); ++i) {
      const auto& e = h_->edge(i);
      auto it = std::lower_bound(e.begin(), e.end(), heads[i]);
      s[i] = static_cast<char>(it - e.begin());
    }
    return s;
  }

  void decode(const std::string& s, std::vector<Vertex>& heads) const {
    heads.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      heads[i] = h_->edge(static_cast<int>(i))[static_cast<unsigned char>(s[i])];
  }

 private:
  const Hypergraph* h_;
};

// Kahn peeling over a local-index state with reusable scratch buffers.
class AcyclicChecker {
 public:
  explicit AcyclicChecker(const Hypergraph& h)
      : h_(&h), indeg_(h.vertex_count(), 0) {
    stack_.reserve(h.vertex_count());
  }

  bool acyclic(const std::string& s) {
    const int n = h_->vertex_count();
    std::fill(indeg_.begin(), indeg_.end(), 0);
    for (int i = 0; i < h_->edge_count(); ++i) {
      const auto& e = h_->edge(i);
      indeg_[e[static_cast<unsigned char>(s[i])]] +=
          static_cast<int>(e.size()) - 1;
    }
    stack_.clear();
    for (int v = 0; v < n; ++v)
      if (indeg_[v] == 0) stack_.push_back(v);
    int removed = 0;
    while (!stack_.empty()) {
      int v = stack_.back();
      stack_.pop_back();
      ++removed;
      for (int ei : h_->incident_edges(v)) {
        const auto& e = h_->edge(ei);
        Vertex t = e[static_cast<unsigned char>(s[ei])];
        if (t != v && --indeg_[t] == 0) stack_.push_back(t);
      }
    }
    return removed == n;
  }

 private:
  const Hypergraph* h_;
  std::vector<int> indeg_;
  std::vector<int> stack_;
};

struct MoveKeyLess {
  bool operator()(const Flip& a, const Flip& b) const {
    return std::tuple(std::min(a.from, a.to), std::max(a.from, a.to), a.from) <
           std::tuple(std::min(b.from, b.to), std::max(b.from, b.to), b.from);
  }
};

// Deduplicated non-vacuous move candidates out of `heads`, in a fixed order.
void candidate_moves(const Hypergraph& h, const std::vector<Vertex>& heads,
                     const std::vector<char>& banned, std::vector<Flip>& out) {
  out.clear();
  for (int i = 0; i < h.edge_count(); ++i) {
    Vertex u = heads[i];
    if (!banned.empty() && banned[u]) continue;
    for (Vertex w : h.edge(i)) {
      if (w == u) continue;
      if (!banned.empty() && banned[w]) continue;
      out.push_back(Flip{u, w});
    }
  }
  std::sort(out.begin(), out.end(), MoveKeyLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

// Applies move to a local-index state.
std::string apply_move(const Hypergraph& h, const std::string& s,
                       const Flip& mv) {
  std::string t = s;
  for (int ei : h.edges_containing_pair(mv.from, mv.to)) {
    const auto& e = h.edge(ei);
    auto from_pos = std::lower_bound(e.begin(), e.end(), mv.from) - e.begin();
    if (t[ei] == static_cast<char>(from_pos)) {
      auto to_pos = std::lower_bound(e.begin(), e.end(), mv.to) - e.begin();
      t[ei] = static_cast<char>(to_pos);
    }
  }
  return t;
}

struct SearchNode {
  std::uint32_t dist = 0;
  const std::string* parent = nullptr;  // stable across rehash
  Flip via;
};

using StateMap = std::unordered_map<std::string, SearchNode>;

void check_inputs(const Hypergraph& h, const Orientation& h1,
                  const Orientation& h2) {
  validate_orientation(h, h1);
  validate_orientation(h, h2);
  if (!detail::is_acyclic_unchecked(h, h1.heads))
    throw ValidationError("flip search: first orientation is not acyclic");
  if (!detail::is_acyclic_unchecked(h, h2.heads))
    throw ValidationError("flip search: second orientation is not acyclic");
}

}  // namespace

long long diff_count(const Hypergraph& h, const Orientation& h1,
                     const Orientation& h2) {
  if (static_cast<int>(h1.heads.size()) != h.edge_count() ||
      static_cast<int>(h2.heads.size()) != h.edge_count())
    throw ValidationError("diff count: orientation size mismatch");
  long long d = 0;
  for (int i = 0; i < h.edge_count(); ++i)
    if (h1.heads[i] != h2.heads[i]) ++d;
  return d;
}

DistanceBounds distance_bounds(const Hypergraph& h, const Orientation& h1,
                               const Orientation& h2) {
  long long d = diff_count(h, h1, h2);
  long long factor = std::max(h.max_codegree(), 1);
  return DistanceBounds{(d + factor - 1) / factor, d};
}

std::optional<std::pair<int, Flip>> find_flippable_difference(
    const Hypergraph& h, const Orientation& h1, const Orientation& h2) {
  check_inputs(h, h1, h2);
  std::vector<Vertex> scratch;
  for (int i = 0; i < h.edge_count(); ++i) {
    if (h1.heads[i] == h2.heads[i]) continue;
    Vertex u = h1.heads[i];
    Vertex w = h2.heads[i];
    scratch = h1.heads;
    for (int ei : h.edges_containing_pair(u, w))
      if (scratch[ei] == u) scratch[ei] = w;
    if (detail::is_acyclic_unchecked(h, scratch))
      return std::make_pair(i, Flip{u, w});
  }
  return std::nullopt;
}

FlipSequence approx_flip_sequence(const Hypergraph& h, const Orientation& h1,
                                  const Orientation& h2) {
  check_inputs(h, h1, h2);
  FlipSequence seq;
  seq.start = h1;
  seq.end = h2;
  Orientation cur = h1;
  std::vector<Vertex> scratch;
  long long guard = diff_count(h, h1, h2) + 1;
  while (cur.heads != h2.heads) {
    if (--guard < 0)
      throw std::logic_error("difference count failed to decrease");
    bool advanced = false;
    for (int i = 0; i < h.edge_count() && !advanced; ++i) {
      if (cur.heads[i] == h2.heads[i]) continue;
      Vertex u = cur.heads[i];
      Vertex w = h2.heads[i];
      scratch = cur.heads;
      for (int ei : h.edges_containing_pair(u, w))
        if (scratch[ei] == u) scratch[ei] = w;
      if (detail::is_acyclic_unchecked(h, scratch)) {
        cur.heads.swap(scratch);
        seq.flips.push_back(Flip{u, w});
        advanced = true;
      }
    }
    if (!advanced)
      throw std::logic_error("no flippable difference between distinct "
                             "acyclic orientations");
  }
  return seq;
}

std::vector<std::pair<Flip, Orientation>> flip_neighbors(
    const Hypergraph& h, const Orientation& o) {
  validate_orientation(h, o);
  if (!detail::is_acyclic_unchecked(h, o.heads))
    throw ValidationError("flip neighbors: orientation is not acyclic");
  std::vector<Flip> moves;
  candidate_moves(h, o.heads, {}, moves);
  std::vector<std::pair<Flip, Orientation>> result;
  for (const Flip& mv : moves) {
    Orientation next = o;
    for (int ei : h.edges_containing_pair(mv.from, mv.to))
      if (next.heads[ei] == mv.from) next.heads[ei] = mv.to;
    if (detail::is_acyclic_unchecked(h, next.heads))
      result.emplace_back(mv, std::move(next));
  }
  return result;
}

DistanceReport exact_distance(const Hypergraph& h, const Orientation& h1,
                              const Orientation& h2,
                              const SearchOptions& options) {
  check_inputs(h, h1, h2);
  std::vector<char> banned;
  if (!options.forbidden_vertices.empty()) {
    banned.assign(h.vertex_count(), 0);
    for (Vertex v : options.forbidden_vertices) {
      if (v < 0 || v >= h.vertex_count())
        throw ValidationError("flip search: forbidden vertex out of range");
      banned[v] = 1;
    }
  }

  DistanceReport report;
  report.method = DistanceMethod::ExactBfs;
  DistanceBounds bounds = distance_bounds(h, h1, h2);
  report.lower_bound = bounds.lower;
  report.sequence.start = h1;
  report.sequence.end = h2;
  if (h1.heads == h2.heads) {
    report.states_explored = 1;
    return report;
  }

  StateCodec codec(h);
  AcyclicChecker checker(h);
  const std::string s1 = codec.encode(h1.heads);
  const std::string s2 = codec.encode(h2.heads);

  StateMap fwd, bwd;
  fwd.emplace(s1, SearchNode{});
  bwd.emplace(s2, SearchNode{});
  if (fwd.size() + bwd.size() > options.max_states)
    throw CapacityError("flip search: state cap exceeded");
  std::vector<const std::string*> fFront{&fwd.find(s1)->first};
  std::vector<const std::string*> bFront{&bwd.find(s2)->first};
  std::uint32_t fDepth = 0, bDepth = 0;

  const std::uint64_t no_meet = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best_sum = no_meet;
  const std::string* best_state = nullptr;

  std::vector<Vertex> heads;
  std::vector<Flip> moves;
  std::vector<const std::string*> next;

  auto note_meet = [&](const std::string* state, std::uint64_t sum) {
    if (sum < best_sum || (sum == best_sum && *state < *best_state)) {
      best_sum = sum;
      best_state = state;
    }
  };

  auto expand = [&](StateMap& own, StateMap& other,
                    std::vector<const std::string*>& frontier,
                    std::uint32_t depth) {
    next.clear();
    for (const std::string* sp : frontier) {
      codec.decode(*sp, heads);
      candidate_moves(h, heads, banned, moves);
      for (const Flip& mv : moves) {
        std::string t = apply_move(h, *sp, mv);
        if (!checker.acyclic(t)) continue;
        auto [it, inserted] =
            own.try_emplace(std::move(t), SearchNode{depth + 1, sp, mv});
        if (!inserted) continue;
        next.push_back(&it->first);
        if (auto jt = other.find(it->first); jt != other.end())
          note_meet(&it->first, std::uint64_t{depth + 1} + jt->second.dist);
        if (fwd.size() + bwd.size() > options.max_states)
          throw CapacityError("flip search: state cap exceeded");
      }
    }
    frontier.swap(next);
  };

  while (true) {
    if (best_sum != no_meet && best_sum <= std::uint64_t{fDepth} + bDepth)
      break;
    if (fFront.empty() || bFront.empty())
      throw UnreachableError(
          "flip search: target not reachable under the given restrictions");
    if (fFront.size() <= bFront.size()) {
      expand(fwd, bwd, fFront, fDepth);
      ++fDepth;
    } else {
      expand(bwd, fwd, bFront, bDepth);
      ++bDepth;
    }
  }

  report.length = static_cast<long long>(best_sum);
  report.states_explored = fwd.size() + bwd.size();
  if (options.record_sequence) {
    std::vector<Flip> forward_part;
    for (const SearchNode* node = &fwd.find(*best_state)->second;
         node->parent != nullptr;
         node = &fwd.find(*node->parent)->second)
      forward_part.push_back(node->via);
    std::reverse(forward_part.begin(), forward_part.end());
    report.sequence.flips = std::move(forward_part);
    const std::string* cur = best_state;
    for (const SearchNode* node = &bwd.find(*cur)->second;
         node->parent != nullptr; node = &bwd.find(*cur)->second) {
      report.sequence.flips.push_back(Flip{node->via.to, node->via.from});
      cur = node->parent;
    }
  }
  return report;
}

bool replay_is_valid(const Hypergraph& h, const FlipSequence& seq,
                     std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(seq.start.heads.size()) != h.edge_count())
    return fail("start orientation size mismatch");
  if (static_cast<int>(seq.end.heads.size()) != h.edge_count())
    return fail("end orientation size mismatch");
  for (int i = 0; i < h.edge_count(); ++i)
    if (!h.edge_contains(i, seq.start.heads[i]))
      return fail("start head outside its edge");
  if (!detail::is_acyclic_unchecked(h, seq.start.heads))
    return fail("start orientation is not acyclic");
  Orientation cur = seq.start;
  for (std::size_t k = 0; k < seq.flips.size(); ++k) {
    const Flip& f = seq.flips[k];
    if (f.from == f.to || f.from < 0 || f.from >= h.vertex_count() ||
        f.to < 0 || f.to >= h.vertex_count())
      return fail("flip " + std::to_string(k) + " is malformed");
    FlipStatus st = flip_status(h, cur, f.from, f.to);
    if (st == FlipStatus::Vacuous)
      return fail("flip " + std::to_string(k) + " changes no edge");
    if (st == FlipStatus::Blocked)
      return fail("flip " + std::to_string(k) + " creates a cycle");
    cur = apply_flip(h, cur, f.from, f.to);
  }
  if (cur.heads != seq.end.heads)
    return fail("replay does not end at the recorded final orientation");
  return true;
}

}  // namespace polyskel
