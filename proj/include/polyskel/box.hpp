#ifndef POLYSKEL_BOX_HPP
#define POLYSKEL_BOX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "polyskel/submodular.hpp"

namespace polyskel {

// Positive supplies and demands with equal totals; the index sets of a
// transportation problem whose plans we count by support size.
class PcfctInstance {
 public:
  PcfctInstance() = default;
  PcfctInstance(std::vector<long long> supplies,
                std::vector<long long> demands);

  int supply_count() const { return static_cast<int>(supplies_.size()); }
  int demand_count() const { return static_cast<int>(demands_.size()); }
  const std::vector<long long>& supplies() const { return supplies_; }
  const std::vector<long long>& demands() const { return demands_; }
  long long total() const { return total_; }

 private:
  std::vector<long long> supplies_;
  std::vector<long long> demands_;
  long long total_ = 0;
};

// Points with coordinatewise bounds l = min(a,b), u = max(a,b) and fixed
// coordinate sum. Supply coordinates start at their upper bound (a_i > b_i),
// demand coordinates at their lower bound (a_i < b_i); coordinates with
// a_i = b_i are frozen and never move.
class BoxInstance {
 public:
  BoxInstance(std::vector<long long> a, std::vector<long long> b);

  int size() const { return static_cast<int>(a_.size()); }
  const std::vector<long long>& start() const { return a_; }
  const std::vector<long long>& goal() const { return b_; }
  const std::vector<long long>& lower() const { return lower_; }
  const std::vector<long long>& upper() const { return upper_; }
  long long total() const { return total_; }

  const std::vector<int>& supply_coords() const { return supply_; }
  const std::vector<int>& demand_coords() const { return demand_; }
  const std::vector<int>& frozen_coords() const { return frozen_; }

  // Supplies a_i - b_i and demands b_i - a_i over the active coordinates,
  // indexed by position in supply_coords() / demand_coords().
  const PcfctInstance& pcfct() const { return pcfct_; }

  bool is_vertex(const std::vector<long long>& x) const;
  void validate_vertex(const std::vector<long long>& x) const;

 private:
  std::vector<long long> a_, b_, lower_, upper_;
  long long total_ = 0;
  std::vector<int> supply_, demand_, frozen_;
  PcfctInstance pcfct_;
};

// One polytope edge: move `amount` from coordinate `from` to `to`.
struct BoxMove {
  int from = -1;
  int to = -1;
  long long amount = 0;
  friend bool operator==(const BoxMove&, const BoxMove&) = default;
};

// Walk along polytope edges; moves[k] leads from vertices[k] to
// vertices[k+1].
struct BoxPath {
  std::vector<std::vector<long long>> vertices;
  std::vector<BoxMove> moves;
  std::size_t length() const { return moves.size(); }
};

// Blocks hold positions into PcfctInstance supplies/demands; each block's
// supply sum equals its demand sum.
struct SameSumBlock {
  std::vector<int> supply;
  std::vector<int> demand;
};

struct SameSumPartition {
  std::vector<SameSumBlock> blocks;
};

// Throws ValidationError unless the blocks exactly cover the instance's
// index sets and every block has matching positive sums.
void validate_partition(const PcfctInstance& p, const SameSumPartition& part);

// A partition of the supply and demand indices into same-sum blocks of
// maximum cardinality, by dynamic programming over index subsets. Requires
// supply_count + demand_count <= max_entries (default 24, hard cap).
SameSumPartition max_same_sum_partition(const PcfctInstance& p,
                                        int max_entries = 24);

// Transport plan supported on staircases inside each block (northwest-corner
// filling per block, indices ascending). For blocks that cannot be split
// further the support size is exactly supplies + demands - blocks.
std::vector<std::vector<long long>> transport_plan_from_partition(
    const PcfctInstance& p, const SameSumPartition& part);

bool is_transport_plan(const PcfctInstance& p,
                       const std::vector<std::vector<long long>>& plan);

long long nonzero_count(const std::vector<std::vector<long long>>& plan);

// Edge neighbors of vertex x, ordered by (from, to).
std::vector<std::pair<BoxMove, std::vector<long long>>> box_flip_neighbors(
    const BoxInstance& inst, const std::vector<long long>& x);

// Walk from start to goal of length supplies + demands - blocks, built
// block by block; a set of positional invariants is verified after every
// move and a violation throws std::logic_error.
BoxPath shortest_box_path(const BoxInstance& inst,
                          const SameSumPartition& part);

// Same as shortest_box_path(inst, max_same_sum_partition(inst.pcfct())).
BoxPath shortest_box_path(const BoxInstance& inst);

// Validates that `path` is a walk along polytope edges from start to goal,
// then reads off the same-sum partition whose blocks are the connected
// components that the moves draw on the active coordinates. For a path of
// minimum length the partition has the maximum number of blocks.
SameSumPartition partition_from_path(const BoxInstance& inst,
                                     const BoxPath& path);

// Breadth-first search over polytope vertices; exact reference distance.
BoxPath box_shortest_path_bfs(const BoxInstance& inst,
                              std::uint64_t max_states = 10'000'000);

// f(U) = min(total - sum of lower bounds outside U, sum of upper bounds
// inside U); the polytope is its base polytope slice.
SubmodularOracle box_submodular_oracle(const BoxInstance& inst);

}  // namespace polyskel

#endif
