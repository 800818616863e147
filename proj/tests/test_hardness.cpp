#include <map>
#include <set>

#include "doctest.h"
#include "polyskel/flip_engine.hpp"
#include "polyskel/hardness.hpp"

using namespace polyskel;

namespace {

Graph k2() { return Graph(2, {{0, 1}}); }

Graph p3() { return Graph(3, {{0, 1}, {1, 2}}); }

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

}  // namespace

TEST_CASE("star gadget shape") {
  StarGadget star = build_star_gadget();
  CHECK(star.h.vertex_count() == 7);
  CHECK(star.h.edge_count() == 21);
  int pairs = 0, triples = 0;
  for (const auto& e : star.h.edges()) {
    if (e.size() == 2) ++pairs;
    if (e.size() == 3) ++triples;
    CHECK(e.front() == 0);
  }
  CHECK(pairs == 6);
  CHECK(triples == 15);
  CHECK(star.h.max_codegree() == 6);

  CHECK(is_acyclic(star.h, star.min_heads));
  CHECK(is_acyclic(star.h, star.max_heads));
  CHECK(diff_count(star.h, star.min_heads, star.max_heads) == 15);
  for (int e = 0; e < star.h.edge_count(); ++e) {
    if (star.h.edge(e).size() == 2)
      CHECK(star.min_heads.heads[e] == star.max_heads.heads[e]);
    else
      CHECK(star.min_heads.heads[e] < star.max_heads.heads[e]);
  }
}

TEST_CASE("twelve scheduled flips move between the gadget states") {
  StarGadget star = build_star_gadget();
  std::vector<Flip> schedule = star_gadget_schedule();
  REQUIRE(schedule.size() == 12);
  for (int i = 0; i < 6; ++i) {
    CHECK(schedule[i] == Flip{6 - i, 0});
    CHECK(schedule[6 + i] == Flip{0, 6 - i});
  }
  FlipSequence seq;
  seq.start = star.min_heads;
  seq.end = star.max_heads;
  seq.flips = schedule;
  CHECK(replay_is_valid(star.h, seq));
}

TEST_CASE("gadget state space is the brooms") {
  StarGadget star = build_star_gadget();
  std::set<std::vector<Vertex>> seen{star.min_heads.heads};
  std::vector<Orientation> frontier{star.min_heads};
  while (!frontier.empty()) {
    std::vector<Orientation> next;
    for (const Orientation& o : frontier)
      for (const auto& [flip, nbr] : flip_neighbors(star.h, o))
        if (seen.insert(nbr.heads).second) next.push_back(nbr);
    frontier = std::move(next);
  }
  CHECK(seen.size() == 1957);
  CHECK(seen.count(star.max_heads.heads) == 1);
}

TEST_CASE("reduction instance layout") {
  ReductionInstance inst = build_reduction(k2());
  CHECK(inst.h.vertex_count() == 11);
  CHECK(inst.h.edge_count() == 31);
  CHECK(is_acyclic(inst.h, inst.start));
  CHECK(is_acyclic(inst.h, inst.goal));
  CHECK(inst.vertex_minus(1) == 2);
  CHECK(inst.vertex_plus(1) == 3);
  CHECK(inst.gadget_center(0) == 4);
  CHECK(inst.gadget_leaf(0, 6) == 10);

  auto names = inst.vertex_names();
  REQUIRE(names.size() == 11);
  CHECK(names[0] == "v0-");
  CHECK(names[1] == "v0+");
  CHECK(names[2] == "v1-");
  CHECK(names[4] == "e0.c");
  CHECK(names[5] == "e0.w1");
  CHECK(names[10] == "e0.w6");

  ReductionInstance path = build_reduction(p3());
  CHECK(path.h.vertex_count() == 2 * 3 + 7 * 2);
  CHECK(path.h.edge_count() == 3 + 29 * 2);
  CHECK(is_acyclic(path.h, path.start));
  CHECK(is_acyclic(path.h, path.goal));

  int disagreements = 0;
  for (int e = 0; e < path.h.edge_count(); ++e)
    if (path.start.heads[e] != path.goal.heads[e]) {
      ++disagreements;
      CHECK(path.h.edge(e).size() == 3);
    }
  CHECK(disagreements == 15 * 2);
}

TEST_CASE("exact vertex covers") {
  CHECK(min_vertex_cover(k2()).size() == 1);
  CHECK(min_vertex_cover(p3()) == std::vector<int>{1});
  CHECK(min_vertex_cover(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})).size() ==
        2);
  CHECK(min_vertex_cover(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) ==
        std::vector<int>{0});
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(min_vertex_cover(k4).size() == 3);
  CHECK(min_vertex_cover(petersen()).size() == 6);
  CHECK(min_vertex_cover(Graph(3, {})).empty());
  CHECK_THROWS_AS(min_vertex_cover(Graph(21, {{0, 1}})), CapacityError);

  for (const Graph& g : {p3(), k4, petersen()}) {
    auto cover = min_vertex_cover(g);
    std::set<int> in(cover.begin(), cover.end());
    for (auto [u, v] : g.edges()) CHECK((in.count(u) || in.count(v)));
  }
}

TEST_CASE("cover size prices the flip distance") {
  ReductionBound b2 = reduction_distance(k2());
  CHECK(b2.cover.size() == 1);
  CHECK(b2.distance == 14);
  CHECK(reduction_distance(p3()).distance == 2 * 1 + 12 * 2);
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(reduction_distance(c4).distance == 2 * 2 + 12 * 4);
}

TEST_CASE("witness walks realize the predicted length") {
  for (const Graph& g : {k2(), p3()}) {
    ReductionInstance inst = build_reduction(g);
    ReductionBound bound = reduction_distance(g);
    FlipSequence seq = witness_sequence(inst, bound.cover);
    CHECK(static_cast<long long>(seq.length()) == bound.distance);
    CHECK(seq.start == inst.start);
    CHECK(seq.end == inst.goal);
    CHECK(replay_is_valid(inst.h, seq));
  }

  ReductionInstance inst = build_reduction(p3());
  CHECK_THROWS_AS(witness_sequence(inst, {0}), ValidationError);
  FlipSequence bigger = witness_sequence(inst, {0, 1, 2});
  CHECK(bigger.length() == 2 * 3 + 12 * 2);
  CHECK(replay_is_valid(inst.h, bigger));
}

TEST_CASE("search confirms the formula on the one-edge graph") {
  ReductionInstance inst = build_reduction(k2());
  DistanceReport rep = exact_distance(inst.h, inst.start, inst.goal);
  CHECK(rep.length == 14);
  CHECK(replay_is_valid(inst.h, rep.sequence));
}
