#include <bit>
#include <set>

#include "doctest.h"
#include "polyskel/submodular.hpp"

using namespace polyskel;

namespace {

Hypergraph mixed() {
  return Hypergraph(3, {{0, 1}, {1, 2}, {0, 1, 2}});
}

SubmodularOracle squared_cardinality(int n) {
  SubmodularOracle o;
  o.n = n;
  o.label = "popcount^2";
  o.f = [](std::uint64_t mask) {
    long long c = std::popcount(mask);
    return c * c;
  };
  return o;
}

}  // namespace

TEST_CASE("oracle evaluation guards the ground set") {
  SubmodularOracle o = hypergraph_cut_count_oracle(mixed());
  CHECK(o.n == 3);
  CHECK(o.full_mask() == 0b111);
  CHECK_THROWS_AS(o.value(0b1000), ValidationError);
}

TEST_CASE("edges-met oracle values") {
  SubmodularOracle o = hypergraph_cut_count_oracle(mixed());
  CHECK(o.value(0) == 0);
  CHECK(o.value(0b001) == 2);
  CHECK(o.value(0b010) == 3);
  CHECK(o.value(0b100) == 2);
  CHECK(o.value(0b101) == 3);
  CHECK(o.value(0b111) == 3);
  CHECK(is_normalized(o));
}

TEST_CASE("interval hypergraphs") {
  CHECK_THROWS_AS(interval_hypergraph(0), ValidationError);
  CHECK(interval_hypergraph(1).edge_count() == 0);
  CHECK(interval_hypergraph(2).edge_count() == 1);

  Hypergraph h = interval_hypergraph(4);
  REQUIRE(h.edge_count() == 6);
  CHECK(h.edge(0) == std::vector<Vertex>{0, 1});
  CHECK(h.edge(1) == std::vector<Vertex>{1, 2});
  CHECK(h.edge(2) == std::vector<Vertex>{2, 3});
  CHECK(h.edge(3) == std::vector<Vertex>{0, 1, 2});
  CHECK(h.edge(4) == std::vector<Vertex>{1, 2, 3});
  CHECK(h.edge(5) == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("building sets collect connected vertex sets") {
  Graph p3(3, {{0, 1}, {1, 2}});
  Hypergraph h = building_set_hypergraph(p3);
  REQUIRE(h.edge_count() == 6);
  CHECK(h.edge(0) == std::vector<Vertex>{0});
  CHECK(h.edge(1) == std::vector<Vertex>{1});
  CHECK(h.edge(2) == std::vector<Vertex>{2});
  CHECK(h.edge(3) == std::vector<Vertex>{0, 1});
  CHECK(h.edge(4) == std::vector<Vertex>{1, 2});
  CHECK(h.edge(5) == std::vector<Vertex>{0, 1, 2});

  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(building_set_hypergraph(c4).edge_count() == 13);
  CHECK_THROWS_AS(
      building_set_hypergraph(Graph(17, {{0, 1}})), CapacityError);
}

TEST_CASE("submodularity checks find planted violations") {
  CHECK_FALSE(check_submodular(hypergraph_cut_count_oracle(mixed())));

  auto violation = check_submodular(squared_cardinality(3));
  REQUIRE(violation.has_value());
  CHECK(violation->set_a == 0b01);
  CHECK(violation->set_b == 0b10);
  CHECK(violation->lhs == 2);
  CHECK(violation->rhs == 4);

  CHECK_THROWS_AS(check_submodular(squared_cardinality(13)), CapacityError);

  CHECK_FALSE(check_submodular_sampled(hypergraph_cut_count_oracle(mixed()),
                                       2000, 7));
  CHECK(check_submodular_sampled(squared_cardinality(10), 2000, 7));
}

TEST_CASE("greedy vertices from visit orders") {
  SubmodularOracle o =
      hypergraph_cut_count_oracle(Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(greedy_vertex(o, {0, 1, 2}) == std::vector<long long>{2, 1, 0});
  CHECK(greedy_vertex(o, {2, 1, 0}) == std::vector<long long>{0, 1, 2});
  CHECK(greedy_vertex(o, {1, 0, 2}) == std::vector<long long>{1, 2, 0});
  CHECK_THROWS_AS(greedy_vertex(o, {0, 1}), ValidationError);
  CHECK_THROWS_AS(greedy_vertex(o, {0, 1, 1}), ValidationError);
}

TEST_CASE("head counts and their inverse") {
  Hypergraph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  Orientation o{{1, 2, 2}};
  CHECK(head_count_vector(k3, o) == std::vector<long long>{0, 1, 2});
  CHECK(orientation_of_head_counts(k3, {0, 1, 2}) == o);
  CHECK_THROWS_AS(orientation_of_head_counts(k3, {1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(orientation_of_head_counts(k3, {0, 1}), ValidationError);
  CHECK_THROWS_AS(orientation_of_head_counts(k3, {3, 0, 0}), ValidationError);

  for (const Orientation& a : enumerate_acyclic_orientations(mixed()))
    CHECK(orientation_of_head_counts(mixed(), head_count_vector(mixed(), a)) ==
          a);
}

TEST_CASE("orientations and greedy points coincide on small instances") {
  CorrespondenceReport tri = check_vertex_correspondence(
      Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(tri.ok);
  CHECK(tri.orientation_count == 6);
  CHECK(tri.greedy_point_count == 6);

  CorrespondenceReport iv = check_vertex_correspondence(interval_hypergraph(4));
  CHECK(iv.ok);
  CHECK(iv.orientation_count == 14);

  CHECK_THROWS_AS(check_vertex_correspondence(interval_hypergraph(9)),
                  CapacityError);
}
