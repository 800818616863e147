#ifndef POLYSKEL_SPECIAL_CASES_HPP
#define POLYSKEL_SPECIAL_CASES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyskel/flip_engine.hpp"
#include "polyskel/graph.hpp"
#include "polyskel/submodular.hpp"

namespace polyskel {

// Rank oracle of the uniform matroid U(k, n).
RankOracle uniform_matroid(int n, int k);

// Rank oracle of the graphic matroid of g; ground set elements are edge
// indices. Requires at most 63 edges.
RankOracle graphic_matroid(const Graph& g);

// Whether `base` is a basis of the matroid with this rank oracle.
bool is_base(const RankOracle& oracle, std::uint64_t base);

// Walk from base_a to base_b exchanging one element per step: each step adds
// the smallest feasible element of base_b \ current and removes the smallest
// compatible element of current \ base_b. The result lists every visited
// base, so its length is |base_a \ base_b| + 1. Throws ValidationError when
// the inputs are not bases or the oracle violates the exchange property.
std::vector<std::uint64_t> matroid_exchange_path(const RankOracle& oracle,
                                                 std::uint64_t base_a,
                                                 std::uint64_t base_b);

// All bases, ascending as masks. Requires n <= 24.
std::vector<std::uint64_t> enumerate_bases(const RankOracle& oracle);

struct RankAxiomViolation {
  std::uint64_t set = 0;
  int element = -1;
  std::string what;
};

// Checks f(empty set) == 0 and that every marginal f(S+e) - f(S) is 0 or 1.
// Exhaustive for n <= 12; larger oracles are spot-checked and need a seed
// (samples defaults to 100000 when 0). Submodularity is checked separately.
std::optional<RankAxiomViolation> check_rank_axioms(
    const RankOracle& oracle, std::uint64_t samples = 0,
    const std::uint64_t* seed = nullptr);

// Recovers the simple graph whose cut-count oracle this is: u,v are adjacent
// iff f({u}) + f({v}) - f({u,v}) == 1. Any other marginal is rejected.
Graph reconstruct_graph(const SubmodularOracle& oracle);

// Orientation of g whose in-degree vector is d, when one exists; unique for
// acyclic targets. Peels in-degree-zero vertices smallest-first.
Orientation orientation_from_indegrees(const Graph& g,
                                       const std::vector<int>& d);

// Transforms one acyclic edge orientation into another by reversing one
// disagreeing edge at a time, keeping every intermediate orientation acyclic.
// The sequence length always equals the number of disagreeing edges.
FlipSequence zonotope_flip_sequence(const Graph& g, const Orientation& a,
                                    const Orientation& b);

}  // namespace polyskel

#endif
