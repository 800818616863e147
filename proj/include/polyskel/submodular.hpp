#ifndef POLYSKEL_SUBMODULAR_HPP
#define POLYSKEL_SUBMODULAR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyskel/graph.hpp"
#include "polyskel/hypergraph.hpp"

namespace polyskel {

// Set function on subsets of {0..n-1} encoded as bitmasks. Ground sets are
// limited to 63 elements so every subset fits in one word.
struct SubmodularOracle {
  int n = 0;
  std::string label;
  std::function<long long(std::uint64_t)> f;

  std::uint64_t full_mask() const {
    return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  }

  // Evaluates f after checking the mask stays inside the ground set.
  long long value(std::uint64_t mask) const;
};

// Matroid rank functions are submodular oracles with unit increments.
using RankOracle = SubmodularOracle;

// f(U) = number of edges meeting U. Requires at most 63 vertices.
SubmodularOracle hypergraph_cut_count_oracle(const Hypergraph& h);

// All intervals {i, ..., j} with j > i inside {0..n-1}, ordered by length
// then by left endpoint.
Hypergraph interval_hypergraph(int n);

// All vertex sets inducing a connected subgraph of g (singletons included),
// ordered by size then by bitmask value. Requires at most 16 vertices.
Hypergraph building_set_hypergraph(const Graph& g);

struct SubmodularityViolation {
  std::uint64_t set_a = 0;
  std::uint64_t set_b = 0;
  long long lhs = 0;  // f(A) + f(B)
  long long rhs = 0;  // f(A | B) + f(A & B)
};

// Exhaustive pairwise check; requires n <= 12. Returns the first violation
// in lexicographic (set_a, set_b) order, if any.
std::optional<SubmodularityViolation> check_submodular(
    const SubmodularOracle& oracle);

// Seeded random spot check over `samples` mask pairs.
std::optional<SubmodularityViolation> check_submodular_sampled(
    const SubmodularOracle& oracle, std::uint64_t samples, std::uint64_t seed);

bool is_normalized(const SubmodularOracle& oracle);  // f(empty set) == 0

// Greedy point of the base polytope for a visit order: the k-th visited
// element gets the marginal value of adding it to the previously visited set.
// `order` must be a permutation of 0..n-1.
std::vector<long long> greedy_vertex(const SubmodularOracle& oracle,
                                     const std::vector<int>& order);

// Coordinate v counts the edges whose head is v.
std::vector<long long> head_count_vector(const Hypergraph& h,
                                         const Orientation& o);

// Inverse of head_count_vector on acyclic orientations: peels vertices whose
// remaining incidence count matches their coordinate. Throws ValidationError
// when x is not realized by any acyclic orientation.
Orientation orientation_of_head_counts(const Hypergraph& h,
                                       const std::vector<long long>& x);

struct CorrespondenceReport {
  bool ok = false;
  std::uint64_t orientation_count = 0;
  std::uint64_t greedy_point_count = 0;
  std::string detail;
};

// For small hypergraphs (n <= 8), verifies that head-count vectors of acyclic
// orientations are pairwise distinct, coincide as a set with the greedy
// points over all visit orders, and round-trip through
// orientation_of_head_counts.
CorrespondenceReport check_vertex_correspondence(
    const Hypergraph& h, std::uint64_t max_combinations = 10'000'000);

}  // namespace polyskel

#endif
