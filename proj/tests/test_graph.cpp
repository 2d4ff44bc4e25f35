#include <doctest.h>

#include <gnorm/errors.hpp>
#include <gnorm/graph.hpp>

#include "oracle.hpp"

using namespace gnorm;

namespace {

BipartiteGraph pendant_c4() {
  BipartiteGraph g;
  g.x_size = 3;
  g.y_size = 2;
  g.edges = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}};
  return g;
}

bool independent_in(const BipartiteGraph& g, const std::vector<int>& vertices) {
  for (const auto& [u, v] : g.edges) {
    bool has_u = std::count(vertices.begin(), vertices.end(), u);
    bool has_v = std::count(vertices.begin(), vertices.end(), g.x_size + v);
    if (has_u && has_v) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("complete bipartite graphs") {
  BipartiteGraph g = make_complete_bipartite(2, 3);
  CHECK(g.x_size == 2);
  CHECK(g.y_size == 3);
  CHECK(g.n() == 5);
  CHECK(g.m() == 6);
  CHECK(x_degrees(g) == std::vector<int>{3, 3});
  CHECK(y_degrees(g) == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(make_complete_bipartite(0, 1), std::invalid_argument);
}

TEST_CASE("even cycles") {
  BipartiteGraph c4 = make_even_cycle(2);
  CHECK(c4.x_size == 2);
  CHECK(c4.y_size == 2);
  CHECK(c4.m() == 4);
  CHECK(c4 == make_complete_bipartite(2, 2));

  BipartiteGraph doubled = make_even_cycle(1);
  CHECK(doubled.n() == 2);
  CHECK(doubled.m() == 2);
  CHECK(doubled.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 0}});

  BipartiteGraph c6 = make_even_cycle(3);
  CHECK(c6.m() == 6);
  CHECK(x_degrees(c6) == std::vector<int>{2, 2, 2});
  CHECK(y_degrees(c6) == std::vector<int>{2, 2, 2});
  CHECK_FALSE(oracle::isomorphic(c6, make_complete_bipartite(3, 3)));
}

TEST_CASE("hypercubes") {
  BipartiteGraph q1 = make_hypercube(1);
  CHECK(q1.n() == 2);
  CHECK(q1.m() == 1);

  CHECK(oracle::isomorphic(make_hypercube(2), make_even_cycle(2)));

  BipartiteGraph q3 = make_hypercube(3);
  CHECK(q3.x_size == 4);
  CHECK(q3.y_size == 4);
  CHECK(q3.m() == 12);
  CHECK(x_degrees(q3) == std::vector<int>{3, 3, 3, 3});
  CHECK(y_degrees(q3) == std::vector<int>{3, 3, 3, 3});
  CHECK(q3.x_labels == std::vector<std::string>{"000", "011", "101", "110"});
  CHECK(q3.y_labels == std::vector<std::string>{"001", "010", "100", "111"});

  BipartiteGraph q4 = make_hypercube(4);
  CHECK(q4.x_size == 8);
  CHECK(q4.y_size == 8);
  CHECK(q4.m() == 32);
}

TEST_CASE("paths alternate sides starting in X") {
  BipartiteGraph p1 = make_path(1);
  CHECK(p1.x_size == 1);
  CHECK(p1.y_size == 1);
  CHECK(p1.m() == 1);

  BipartiteGraph p2 = make_path(2);
  CHECK(p2.x_size == 2);
  CHECK(p2.y_size == 1);
  CHECK(p2.edges == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}});

  BipartiteGraph p3 = make_path(3);
  CHECK(p3.x_size == 2);
  CHECK(p3.y_size == 2);
  CHECK(p3.edges == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(x_degrees(p3) == std::vector<int>{1, 2});
  CHECK(y_degrees(p3) == std::vector<int>{2, 1});
}

TEST_CASE("biproduct multiplies sides and edge multisets") {
  BipartiteGraph a = make_path(1);
  BipartiteGraph b = make_complete_bipartite(1, 2);
  BipartiteGraph p = biproduct(a, b);
  CHECK(p.x_size == 1);
  CHECK(p.y_size == 2);
  CHECK(p.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});

  BipartiteGraph c4 = make_even_cycle(2);
  BipartiteGraph q = biproduct(c4, c4);
  CHECK(q.x_size == 4);
  CHECK(q.y_size == 4);
  CHECK(q.m() == 16);

  // Doubled edge times doubled edge: multiplicities multiply.
  BipartiteGraph d = biproduct(make_even_cycle(1), make_even_cycle(1));
  CHECK(d.n() == 2);
  CHECK(d.m() == 4);
  CHECK(d.edges == std::vector<std::pair<int, int>>(4, {0, 0}));
}

TEST_CASE("edge powers repeat instances") {
  BipartiteGraph g = edge_power(make_path(2), 3);
  CHECK(g.m() == 6);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 0}});
}

TEST_CASE("induced subgraphs") {
  BipartiteGraph g = pendant_c4();
  CHECK(induced_subgraph(g, {0, 1}, {0, 1}) == make_even_cycle(2));
  CHECK(induced_subgraph(g, {2}, {0}).m() == 1);
  CHECK(induced_subgraph(g, {2}, {1}).m() == 0);
  CHECK_THROWS_AS(induced_subgraph(g, {3}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 0}, {0}), std::invalid_argument);

  int count = 0;
  for_each_induced_subgraph(g, [&](const BipartiteGraph&, const std::vector<int>&,
                                   const std::vector<int>&) { ++count; });
  CHECK(count == 31);  // 2^5 - 1 nonempty vertex subsets
  CHECK(induced_subgraphs(g).size() == 31);

  BipartiteGraph big;
  big.x_size = 13;
  big.y_size = 12;
  CHECK_THROWS_AS(for_each_induced_subgraph(
                      big, [](const BipartiteGraph&, const std::vector<int>&,
                              const std::vector<int>&) {}),
                  guard_error);
}

TEST_CASE("maximum independent sets") {
  // Bipartite graphs: independence number is n minus the size of a maximum
  // matching, checked here against hand values.
  struct Case {
    BipartiteGraph g;
    int alpha;
  };
  const Case cases[] = {
      {make_even_cycle(2), 2},  {make_even_cycle(3), 3},       {make_hypercube(3), 4},
      {make_complete_bipartite(3, 3), 3}, {make_complete_bipartite(1, 5), 5}, {pendant_c4(), 3},
  };
  for (const auto& [g, alpha] : cases) {
    IndependentSet is = max_independent_set(g);
    CHECK(is.size == alpha);
    CHECK(static_cast<int>(is.vertices.size()) == alpha);
    CHECK(std::is_sorted(is.vertices.begin(), is.vertices.end()));
    CHECK(independent_in(g, is.vertices));
  }

  BipartiteGraph big;
  big.x_size = 13;
  big.y_size = 12;
  CHECK_THROWS_AS(max_independent_set(big), guard_error);
}

TEST_CASE("validation rejects malformed graphs") {
  BipartiteGraph g;
  g.x_size = 2;
  g.y_size = 2;
  g.edges = {{0, 2}};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.edges = {{-1, 0}};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.edges.clear();
  g.x_labels = {"only one"};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.x_labels.clear();
  g.x_size = 0;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);

  GeneralGraph t;
  t.v_size = 3;
  t.edges = {{0, 0}};
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  t.edges = {{2, 1}, {0, 1}};
  t.canonicalize();
  CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  t.validate();
}

TEST_CASE("canonical form sorts edges and ignores labels in equality") {
  BipartiteGraph a;
  a.x_size = 2;
  a.y_size = 2;
  a.edges = {{1, 1}, {0, 0}, {1, 0}, {0, 1}};
  a.canonicalize();
  CHECK(a == make_even_cycle(2));
  a.x_labels = {"u", "v"};
  CHECK(a == make_even_cycle(2));
}
