#include "polyskel/box.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

namespace polyskel {

PcfctInstance::PcfctInstance(std::vector<long long> supplies,
                             std::vector<long long> demands)
    : supplies_(std::move(supplies)), demands_(std::move(demands)) {
  long long s = 0, d = 0;
  for (long long v : supplies_) {
    if (v <= 0)
      throw ValidationError("transport counts: supplies must be positive");
    s += v;
  }
  for (long long v : demands_) {
    if (v <= 0)
      throw ValidationError("transport counts: demands must be positive");
    d += v;
  }
  if (s != d)
    throw ValidationError("transport counts: supply and demand totals differ");
  total_ = s;
}

BoxInstance::BoxInstance(std::vector<long long> a, std::vector<long long> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size())
    throw ValidationError("box: endpoint dimension mismatch");
  long long ta = 0, tb = 0;
  for (long long v : a_) ta += v;
  for (long long v : b_) tb += v;
  if (ta != tb)
    throw ValidationError("box: endpoints have different coordinate sums");
  total_ = ta;
  lower_.resize(a_.size());
  upper_.resize(a_.size());
  std::vector<long long> sup_vals, dem_vals;
  for (int c = 0; c < size(); ++c) {
    lower_[c] = std::min(a_[c], b_[c]);
    upper_[c] = std::max(a_[c], b_[c]);
    if (a_[c] > b_[c]) {
      supply_.push_back(c);
      sup_vals.push_back(a_[c] - b_[c]);
    } else if (a_[c] < b_[c]) {
      demand_.push_back(c);
      dem_vals.push_back(b_[c] - a_[c]);
    } else {
      frozen_.push_back(c);
    }
  }
  pcfct_ = PcfctInstance(std::move(sup_vals), std::move(dem_vals));
}

namespace {

const char* vertex_flaw(const BoxInstance& inst,
                        const std::vector<long long>& x) {
  if (static_cast<int>(x.size()) != inst.size()) return "dimension mismatch";
  long long sum = 0;
  int floating = 0;
  for (int c = 0; c < inst.size(); ++c) {
    if (x[c] < inst.lower()[c] || x[c] > inst.upper()[c])
      return "coordinate out of bounds";
    if (x[c] != inst.lower()[c] && x[c] != inst.upper()[c]) ++floating;
    sum += x[c];
  }
  if (sum != inst.total()) return "wrong coordinate sum";
  if (floating > 1) return "more than one coordinate strictly inside";
  return nullptr;
}

}  // namespace

bool BoxInstance::is_vertex(const std::vector<long long>& x) const {
  return vertex_flaw(*this, x) == nullptr;
}

void BoxInstance::validate_vertex(const std::vector<long long>& x) const {
  if (const char* flaw = vertex_flaw(*this, x))
    throw ValidationError(std::string("box vertex: ") + flaw);
}

void validate_partition(const PcfctInstance& p, const SameSumPartition& part) {
  std::vector<char> seen_s(p.supply_count(), 0), seen_d(p.demand_count(), 0);
  for (const auto& blk : part.blocks) {
    if (blk.supply.empty() || blk.demand.empty())
      throw ValidationError("partition: block must touch both sides");
    long long s = 0, d = 0;
    for (int k : blk.supply) {
      if (k < 0 || k >= p.supply_count())
        throw ValidationError("partition: supply index out of range");
      if (seen_s[k]++)
        throw ValidationError("partition: supply index repeated");
      s += p.supplies()[k];
    }
    for (int k : blk.demand) {
      if (k < 0 || k >= p.demand_count())
        throw ValidationError("partition: demand index out of range");
      if (seen_d[k]++)
        throw ValidationError("partition: demand index repeated");
      d += p.demands()[k];
    }
    if (s != d) throw ValidationError("partition: block sums differ");
  }
  for (char c : seen_s)
    if (!c) throw ValidationError("partition: supply index missing");
  for (char c : seen_d)
    if (!c) throw ValidationError("partition: demand index missing");
}

SameSumPartition max_same_sum_partition(const PcfctInstance& p,
                                        int max_entries) {
  const int ns = p.supply_count();
  const int nt = p.demand_count();
  const int k = ns + nt;
  if (k > std::min(max_entries, 24))
    throw CapacityError(
        "same-sum partition: too many entries for exact search");
  if (k == 0) return {};

  std::vector<long long> vals(k);
  for (int i = 0; i < ns; ++i) vals[i] = p.supplies()[i];
  for (int j = 0; j < nt; ++j) vals[ns + j] = -p.demands()[j];

  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<long long> sums(full + 1, 0);
  for (std::size_t mask = 1; mask <= full; ++mask)
    sums[mask] =
        sums[mask & (mask - 1)] + vals[std::countr_zero(mask)];

  // dp[mask] = most blocks closed so far; a block closes exactly when the
  // running signed sum returns to zero, and each block starts with the
  // smallest index it will contain.
  std::vector<std::int16_t> dp(full + 1, -1);
  std::vector<std::int8_t> prev(full + 1, -1);
  dp[0] = 0;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (dp[mask] < 0) continue;
    std::size_t missing = full & ~mask;
    if (sums[mask] == 0) missing &= ~missing + 1;
    for (std::size_t scan = missing; scan;) {
      int e = std::countr_zero(scan);
      scan &= scan - 1;
      std::size_t nm = mask | (std::size_t{1} << e);
      std::int16_t nd =
          static_cast<std::int16_t>(dp[mask] + (sums[nm] == 0 ? 1 : 0));
      if (nd > dp[nm]) {
        dp[nm] = nd;
        prev[nm] = static_cast<std::int8_t>(e);
      }
    }
  }
  if (dp[full] < 0)
    throw std::logic_error("same-sum partition: search failed");

  SameSumPartition part;
  std::vector<int> group;
  std::size_t mask = full;
  while (mask) {
    int e = prev[mask];
    group.push_back(e);
    mask &= ~(std::size_t{1} << e);
    if (sums[mask] == 0) {
      SameSumBlock blk;
      for (int idx : group) {
        if (idx < ns)
          blk.supply.push_back(idx);
        else
          blk.demand.push_back(idx - ns);
      }
      std::sort(blk.supply.begin(), blk.supply.end());
      std::sort(blk.demand.begin(), blk.demand.end());
      part.blocks.push_back(std::move(blk));
      group.clear();
    }
  }
  std::reverse(part.blocks.begin(), part.blocks.end());
  validate_partition(p, part);
  return part;
}

std::vector<std::vector<long long>> transport_plan_from_partition(
    const PcfctInstance& p, const SameSumPartition& part) {
  validate_partition(p, part);
  std::vector<std::vector<long long>> plan(
      p.supply_count(), std::vector<long long>(p.demand_count(), 0));
  for (const auto& blk : part.blocks) {
    auto sup = blk.supply;
    auto dem = blk.demand;
    std::sort(sup.begin(), sup.end());
    std::sort(dem.begin(), dem.end());
    std::size_t si = 0, tj = 0;
    long long r = p.supplies()[sup[0]];
    long long c = p.demands()[dem[0]];
    while (true) {
      long long q = std::min(r, c);
      if (q > 0) plan[sup[si]][dem[tj]] = q;
      r -= q;
      c -= q;
      bool last_s = si + 1 == sup.size();
      bool last_t = tj + 1 == dem.size();
      if (r == 0 && c == 0 && last_s && last_t) break;
      if (r == 0 && !last_s) {
        ++si;
        r = p.supplies()[sup[si]];
      } else if (c == 0 && !last_t) {
        ++tj;
        c = p.demands()[dem[tj]];
      } else {
        throw std::logic_error("transport plan: block sums out of balance");
      }
    }
  }
  return plan;
}

bool is_transport_plan(const PcfctInstance& p,
                       const std::vector<std::vector<long long>>& plan) {
  if (static_cast<int>(plan.size()) != p.supply_count()) return false;
  std::vector<long long> col(p.demand_count(), 0);
  for (int i = 0; i < p.supply_count(); ++i) {
    if (static_cast<int>(plan[i].size()) != p.demand_count()) return false;
    long long row = 0;
    for (int j = 0; j < p.demand_count(); ++j) {
      if (plan[i][j] < 0) return false;
      row += plan[i][j];
      col[j] += plan[i][j];
    }
    if (row != p.supplies()[i]) return false;
  }
  for (int j = 0; j < p.demand_count(); ++j)
    if (col[j] != p.demands()[j]) return false;
  return true;
}

long long nonzero_count(const std::vector<std::vector<long long>>& plan) {
  long long count = 0;
  for (const auto& row : plan)
    for (long long v : row)
      if (v != 0) ++count;
  return count;
}

std::vector<std::pair<BoxMove, std::vector<long long>>> box_flip_neighbors(
    const BoxInstance& inst, const std::vector<long long>& x) {
  inst.validate_vertex(x);
  const auto& l = inst.lower();
  const auto& u = inst.upper();
  int floating = -1;
  for (int c = 0; c < inst.size(); ++c)
    if (x[c] != l[c] && x[c] != u[c]) floating = c;
  std::vector<std::pair<BoxMove, std::vector<long long>>> result;
  for (int i = 0; i < inst.size(); ++i) {
    if (x[i] <= l[i]) continue;
    for (int j = 0; j < inst.size(); ++j) {
      if (j == i || x[j] >= u[j]) continue;
      if (floating >= 0 && floating != i && floating != j) continue;
      long long amount = std::min(x[i] - l[i], u[j] - x[j]);
      auto y = x;
      y[i] -= amount;
      y[j] += amount;
      result.emplace_back(BoxMove{i, j, amount}, std::move(y));
    }
  }
  return result;
}

BoxPath shortest_box_path(const BoxInstance& inst,
                          const SameSumPartition& part) {
  validate_partition(inst.pcfct(), part);
  const auto& l = inst.lower();
  const auto& u = inst.upper();
  const int m = static_cast<int>(part.blocks.size());

  std::vector<std::vector<int>> sup(m), dem(m);
  std::vector<int> sup_block(inst.size(), -1), dem_block(inst.size(), -1);
  for (int b = 0; b < m; ++b) {
    for (int k : part.blocks[b].supply)
      sup[b].push_back(inst.supply_coords()[k]);
    for (int k : part.blocks[b].demand)
      dem[b].push_back(inst.demand_coords()[k]);
    std::sort(sup[b].begin(), sup[b].end());
    std::sort(dem[b].begin(), dem[b].end());
    for (int c : sup[b]) sup_block[c] = b;
    for (int c : dem[b]) dem_block[c] = b;
  }

  std::vector<long long> x = inst.start();
  std::set<int> X(inst.supply_coords().begin(), inst.supply_coords().end());
  std::set<int> Y(inst.demand_coords().begin(), inst.demand_coords().end());
  BoxPath path;
  path.vertices.push_back(x);

  auto violate = [](const std::string& what) {
    throw std::logic_error("box path invariant violated: " + what);
  };
  // The construction keeps, after every move: x is a vertex; the tracked
  // sets match the coordinates strictly inside their start bound; tracked
  // coordinates of finished blocks are gone; every tracked coordinate other
  // than the current one still sits at its start bound; and within each
  // block the tracked supply surplus equals the tracked demand deficit.
  auto check_invariants = [&](int v, int cur) {
    if (!inst.is_vertex(x)) violate("point is not a vertex");
    for (int c = 0; c < inst.size(); ++c) {
      if (sup_block[c] >= 0 && (x[c] > l[c]) != (X.count(c) > 0))
        violate("supply tracking set mismatch");
      if (dem_block[c] >= 0 && (x[c] < u[c]) != (Y.count(c) > 0))
        violate("demand tracking set mismatch");
    }
    for (int c : X) {
      if (sup_block[c] < cur) violate("finished block still tracked");
      if (c != v && x[c] != u[c]) violate("pending supply left its bound");
    }
    for (int c : Y) {
      if (dem_block[c] < cur) violate("finished block still tracked");
      if (c != v && x[c] != l[c]) violate("pending demand left its bound");
    }
    if (!X.empty() || !Y.empty()) {
      bool placed = v >= 0 && ((X.count(v) > 0 && sup_block[v] == cur) ||
                               (Y.count(v) > 0 && dem_block[v] == cur));
      if (!placed) violate("current coordinate outside the current block");
    }
    for (int b = 0; b < m; ++b) {
      long long lhs = 0, rhs = 0;
      for (int c : sup[b])
        if (X.count(c)) lhs += x[c] - l[c];
      for (int c : dem[b])
        if (Y.count(c)) rhs += u[c] - x[c];
      if (lhs != rhs) violate("block surplus/deficit mismatch");
    }
  };

  int v = m > 0 ? sup[0][0] : -1;
  check_invariants(v, 0);
  for (int cur = 0; cur < m; ++cur) {
    while (true) {
      int i = -1, j = -1;
      if (X.count(v) > 0 && sup_block[v] == cur) {
        i = v;
        for (int c : dem[cur])
          if (Y.count(c)) {
            j = c;
            break;
          }
      } else if (Y.count(v) > 0 && dem_block[v] == cur) {
        j = v;
        for (int c : sup[cur])
          if (X.count(c)) {
            i = c;
            break;
          }
      }
      if (i < 0 || j < 0) violate("no move available inside the block");
      long long amount = std::min(x[i] - l[i], u[j] - x[j]);
      if (amount <= 0) violate("empty move");
      x[i] -= amount;
      x[j] += amount;
      path.moves.push_back(BoxMove{i, j, amount});
      path.vertices.push_back(x);
      bool drained = x[i] == l[i];
      bool filled = x[j] == u[j];
      if (drained) X.erase(i);
      if (filled) Y.erase(j);
      if (drained && filled) {
        for (int c : sup[cur])
          if (X.count(c)) violate("supply left in a finished block");
        for (int c : dem[cur])
          if (Y.count(c)) violate("demand left in a finished block");
        v = cur + 1 < m ? sup[cur + 1][0] : -1;
        check_invariants(v, cur + 1);
        break;
      }
      v = drained ? j : i;
      check_invariants(v, cur);
    }
  }
  if (x != inst.goal())
    throw std::logic_error("box path: walk did not reach the goal");
  std::size_t expected = inst.supply_coords().size() +
                         inst.demand_coords().size() -
                         static_cast<std::size_t>(m);
  if (path.length() != expected)
    throw std::logic_error("box path: unexpected length");
  return path;
}

BoxPath shortest_box_path(const BoxInstance& inst) {
  return shortest_box_path(inst, max_same_sum_partition(inst.pcfct()));
}

SameSumPartition partition_from_path(const BoxInstance& inst,
                                     const BoxPath& path) {
  const auto& l = inst.lower();
  const auto& u = inst.upper();
  if (path.vertices.empty())
    throw ValidationError("path: no vertices");
  if (path.vertices.front() != inst.start())
    throw ValidationError("path: does not start at the start vertex");
  if (path.vertices.back() != inst.goal())
    throw ValidationError("path: does not end at the goal vertex");
  if (path.moves.size() + 1 != path.vertices.size())
    throw ValidationError("path: move and vertex counts disagree");
  for (const auto& pt : path.vertices) inst.validate_vertex(pt);
  for (std::size_t k = 0; k < path.moves.size(); ++k) {
    const BoxMove& mv = path.moves[k];
    const auto& from_pt = path.vertices[k];
    const auto& to_pt = path.vertices[k + 1];
    if (mv.from < 0 || mv.from >= inst.size() || mv.to < 0 ||
        mv.to >= inst.size() || mv.from == mv.to)
      throw ValidationError("path: malformed move");
    long long slack =
        std::min(from_pt[mv.from] - l[mv.from], u[mv.to] - from_pt[mv.to]);
    if (mv.amount <= 0 || mv.amount != slack)
      throw ValidationError("path: move amount is not the full slack");
    for (int c = 0; c < inst.size(); ++c) {
      long long expect = from_pt[c];
      if (c == mv.from) expect -= mv.amount;
      if (c == mv.to) expect += mv.amount;
      if (to_pt[c] != expect)
        throw ValidationError("path: vertices do not follow the move");
      if (c != mv.from && c != mv.to && from_pt[c] != l[c] &&
          from_pt[c] != u[c])
        throw ValidationError("path: spectator coordinate off its bound");
    }
  }

  std::vector<int> parent(inst.size());
  for (int c = 0; c < inst.size(); ++c) parent[c] = c;
  auto find = [&](int c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  for (const BoxMove& mv : path.moves) parent[find(mv.from)] = find(mv.to);

  std::vector<int> sup_local(inst.size(), -1), dem_local(inst.size(), -1);
  for (std::size_t k = 0; k < inst.supply_coords().size(); ++k)
    sup_local[inst.supply_coords()[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < inst.demand_coords().size(); ++k)
    dem_local[inst.demand_coords()[k]] = static_cast<int>(k);

  std::map<int, SameSumBlock> by_root;
  for (int c = 0; c < inst.size(); ++c) {
    if (sup_local[c] >= 0)
      by_root[find(c)].supply.push_back(sup_local[c]);
    else if (dem_local[c] >= 0)
      by_root[find(c)].demand.push_back(dem_local[c]);
  }
  SameSumPartition part;
  for (auto& [root, blk] : by_root) part.blocks.push_back(std::move(blk));
  validate_partition(inst.pcfct(), part);
  if (path.length() + part.blocks.size() <
      inst.supply_coords().size() + inst.demand_coords().size())
    throw std::logic_error("path partition: impossible component count");
  return part;
}

BoxPath box_shortest_path_bfs(const BoxInstance& inst,
                              std::uint64_t max_states) {
  struct Node {
    const std::vector<long long>* parent = nullptr;
    BoxMove via;
  };
  BoxPath path;
  if (inst.start() == inst.goal()) {
    path.vertices.push_back(inst.start());
    return path;
  }
  std::map<std::vector<long long>, Node> seen;
  seen.emplace(inst.start(), Node{});
  std::vector<const std::vector<long long>*> frontier{&seen.begin()->first};
  std::vector<const std::vector<long long>*> next;
  const std::vector<long long>* found = nullptr;
  while (!frontier.empty() && !found) {
    next.clear();
    for (const auto* pt : frontier) {
      for (auto& [mv, y] : box_flip_neighbors(inst, *pt)) {
        auto [it, inserted] = seen.try_emplace(std::move(y), Node{pt, mv});
        if (!inserted) continue;
        if (seen.size() > max_states)
          throw CapacityError("box search: state cap exceeded");
        if (it->first == inst.goal()) {
          found = &it->first;
          break;
        }
        next.push_back(&it->first);
      }
      if (found) break;
    }
    frontier.swap(next);
  }
  if (!found)
    throw std::logic_error("box search: goal not reached");
  std::vector<const std::vector<long long>*> chain;
  std::vector<BoxMove> moves;
  for (const auto* cur = found; cur != nullptr;) {
    chain.push_back(cur);
    const Node& node = seen.find(*cur)->second;
    if (node.parent != nullptr) moves.push_back(node.via);
    cur = node.parent;
  }
  std::reverse(chain.begin(), chain.end());
  std::reverse(moves.begin(), moves.end());
  for (const auto* pt : chain) path.vertices.push_back(*pt);
  path.moves = std::move(moves);
  return path;
}

SubmodularOracle box_submodular_oracle(const BoxInstance& inst) {
  if (inst.size() > 63)
    throw ValidationError("box oracle: more than 63 coordinates");
  SubmodularOracle oracle;
  oracle.n = inst.size();
  oracle.label = "box";
  long long lower_total = 0;
  for (long long v : inst.lower()) lower_total += v;
  oracle.f = [lower = inst.lower(), upper = inst.upper(),
              total = inst.total(),
              lower_total](std::uint64_t mask) {
    long long inside_upper = 0, inside_lower = 0;
    for (std::size_t c = 0; c < lower.size(); ++c)
      if (mask & (std::uint64_t{1} << c)) {
        inside_upper += upper[c];
        inside_lower += lower[c];
      }
    return std::min(total - (lower_total - inside_lower), inside_upper);
  };
  return oracle;
}

}  // namespace polyskel
