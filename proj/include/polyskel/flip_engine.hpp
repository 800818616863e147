#ifndef POLYSKEL_FLIP_ENGINE_HPP
#define POLYSKEL_FLIP_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyskel/hypergraph.hpp"

namespace polyskel {

// A walk in the flip graph: applying flips[k] to the k-th orientation yields
// the next one, starting from `start` and ending at `end`.
struct FlipSequence {
  Orientation start;
  Orientation end;
  std::vector<Flip> flips;
  std::size_t length() const { return flips.size(); }
};

enum class DistanceMethod { ExactBfs, CodegreeApprox };

struct DistanceReport {
  long long length = 0;
  long long lower_bound = 0;  // ceil(diff / max codegree), 0 when identical
  DistanceMethod method = DistanceMethod::ExactBfs;
  std::uint64_t states_explored = 0;
  FlipSequence sequence;
};

struct SearchOptions {
  // Flips touching any of these vertices are not taken.
  std::vector<Vertex> forbidden_vertices;
  // Hard cap on distinct states stored across both search directions.
  std::uint64_t max_states = 50'000'000;
  // When false the report carries an empty flip list (length is still exact).
  bool record_sequence = true;
};

// Number of edges whose heads differ.
long long diff_count(const Hypergraph& h, const Orientation& h1,
                     const Orientation& h2);

struct DistanceBounds {
  long long lower = 0;
  long long upper = 0;
};

// lower = ceil(diff / max codegree) (diff itself when no pair co-occurs in
// two edges), upper = diff. Both zero when the orientations agree.
DistanceBounds distance_bounds(const Hypergraph& h, const Orientation& h1,
                               const Orientation& h2);

// Smallest-index edge e with h1.heads[e] != h2.heads[e] such that the flip
// (h1.heads[e], h2.heads[e]) is flippable at h1. Requires both orientations
// acyclic; a result is guaranteed whenever they differ.
std::optional<std::pair<int, Flip>> find_flippable_difference(
    const Hypergraph& h, const Orientation& h1, const Orientation& h2);

// Repeatedly applies a flippable difference until h2 is reached. The number
// of differing edges strictly decreases each step, so the result length is
// at least diff/max_codegree and at most diff; it is exact when no two edges
// share more than one vertex.
FlipSequence approx_flip_sequence(const Hypergraph& h, const Orientation& h1,
                                  const Orientation& h2);

// Exact flip distance by bidirectional breadth-first search over acyclic
// orientations. Deterministic: lengths and witnesses depend only on the
// inputs. Throws CapacityError past options.max_states and UnreachableError
// when forbidden vertices disconnect h2 from h1.
DistanceReport exact_distance(const Hypergraph& h, const Orientation& h1,
                              const Orientation& h2,
                              const SearchOptions& options = {});

// Flippable moves out of o: deduplicated (from, to) pairs sorted
// lexicographically, each with the resulting orientation.
std::vector<std::pair<Flip, Orientation>> flip_neighbors(
    const Hypergraph& h, const Orientation& o);

// Checks start/end consistency, acyclicity of every intermediate state, and
// that no flip is vacuous. On failure fills *why when provided.
bool replay_is_valid(const Hypergraph& h, const FlipSequence& seq,
                     std::string* why = nullptr);

}  // namespace polyskel

#endif
