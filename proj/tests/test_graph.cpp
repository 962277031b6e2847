#include <doctest.h>

#include <algorithm>

#include "error.hpp"
#include "graph.hpp"

using namespace stoc;

TEST_CASE("recovery set factories") {
  const auto iv = interval_set(2, 2);
  CHECK(iv.dim == 1);
  CHECK(iv.offsets.size() == 4);
  CHECK(iv.max_abs() == 2);

  const auto pr = pair_set(6, 4);
  REQUIRE(pr.offsets.size() == 2);
  CHECK(pr.offsets[0] == std::array<int, 2>{-6, 0});
  CHECK(pr.offsets[1] == std::array<int, 2>{4, 0});
  CHECK(pr.max_abs() == 6);

  CHECK(l1_ball_set(1).offsets.size() == 4);
  CHECK(l1_ball_set(2).offsets.size() == 12);
  CHECK(linf_ball_set(1).offsets.size() == 8);
  CHECK(rect_set(2, 1, 1, 2).offsets.size() == 15);
  CHECK(axial_set(1, 1, 1, 1).offsets.size() == 4);

  CHECK_THROWS_AS(interval_set(0, 0), error);
  CHECK_THROWS_AS(pair_set(0, 1), error);
  CHECK_THROWS_AS(rect_set(1, 1, 0, 1), error);
  CHECK_THROWS_AS(axial_set(1, 0, 1, 1), error);
}

TEST_CASE("builtin graphs") {
  const auto c5 = cycle_graph(5);
  CHECK(c5.n == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.has_edge(0, 1));
  CHECK(c5.has_edge(0, 4));
  CHECK_FALSE(c5.has_edge(0, 2));
  CHECK(is_triangle_free(c5));

  CHECK(find_triangle(cycle_graph(3)).has_value());

  const auto p4 = path_graph(4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.adj[0].size() == 1);
  CHECK(p4.adj[1].size() == 2);

  CHECK(complete_graph(4).edge_count() == 6);

  const auto cube = cube_graph();
  CHECK(cube.n == 8);
  CHECK(cube.edge_count() == 12);
  for (const auto& row : cube.adj) CHECK(row.size() == 3);
  CHECK(is_triangle_free(cube));

  const auto t3 = torus_rowcol_graph(3);
  CHECK(t3.n == 9);
  CHECK(t3.edge_count() == 18);
  for (const auto& row : t3.adj) CHECK(row.size() == 4);
  CHECK_FALSE(is_triangle_free(t3));
}

TEST_CASE("edge list and products") {
  const auto prod = cartesian_product(complete_graph(2), complete_graph(2));
  CHECK(prod.n == 4);
  CHECK(prod.edge_count() == 4);
  for (const auto& row : prod.adj) CHECK(row.size() == 2);

  const auto edges = edge_list(prod);
  CHECK(edges.size() == 4);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  for (const auto& e : edges) CHECK(e[0] < e[1]);

  const auto sub = induced_subgraph(cycle_graph(5), {0, 1, 2});
  CHECK(sub.n == 3);
  CHECK(sub.edge_count() == 2);
}

TEST_CASE("directed graphs") {
  const graph d = graph_from_edges(3, {{0, 1}, {1, 2}}, true);
  CHECK(d.directed);
  CHECK(d.has_edge(0, 1));
  CHECK_FALSE(d.has_edge(1, 0));
  const auto in = in_neighbors(d);
  CHECK(in[1] == std::vector<int>{0});
  CHECK(in[0].empty());

  const graph cyc = graph_from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, true);
  const auto bad = is_dag(cyc, {0, 1, 2});
  CHECK_FALSE(bad.ok);
  CHECK(bad.cycle.size() >= 2);

  const graph dag = graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}}, true);
  const auto good = is_dag(dag, {0, 1, 2});
  CHECK(good.ok);
  REQUIRE(good.order.size() == 3);
  std::vector<int> pos(3);
  for (int i = 0; i < 3; ++i) pos[good.order[i]] = i;
  CHECK(pos[0] < pos[1]);
  CHECK(pos[1] < pos[2]);

  // Dropping a cycle vertex leaves an acyclic subset.
  CHECK(is_dag(cyc, {0, 1}).ok);
}

TEST_CASE("windows in one dimension") {
  const auto w = make_window_graph(interval_set(1, 1), 6);
  CHECK(w.g.n == 6);
  CHECK(w.g.directed);
  CHECK(w.side == 6);
  CHECK(w.interior == std::vector<int>{1, 2, 3, 4});
  CHECK(w.boundary == std::vector<int>{0, 5});
  CHECK(w.g.adj[2] == std::vector<int>{1, 3});
  CHECK(w.g.adj[0] == std::vector<int>{1});

  const auto w2 = make_window_graph(interval_set(2, 2), 5);
  CHECK(w2.interior == std::vector<int>{2});

  CHECK_THROWS_AS(make_window_graph(interval_set(2, 2), 4), error);
}

TEST_CASE("windows in two dimensions") {
  const auto w = make_window_graph(l1_ball_set(1), 5);
  CHECK(w.g.n == 25);
  CHECK(w.g.labels.size() == 25);
  CHECK(w.interior.size() == 9);
  CHECK(w.boundary.size() == 16);
  // Center cell sees its four l1 neighbors.
  const int c = 2 * 5 + 2;
  CHECK(w.g.adj[c].size() == 4);
  CHECK(w.g.has_edge(c, c - 5));
  CHECK(w.g.has_edge(c, c + 1));
  CHECK_FALSE(w.g.has_edge(c, c - 6));

  CHECK_THROWS_AS(make_window_graph(l1_ball_set(1), 70), error);
  const auto wide = make_window_graph(l1_ball_set(1), 70, 128);
  CHECK(wide.g.n == 4900);
}

TEST_CASE("asymmetric window orientation") {
  const auto w = make_window_graph(pair_set(2, 1), 6);
  CHECK(w.g.has_edge(3, 1));
  CHECK(w.g.has_edge(3, 4));
  CHECK_FALSE(w.g.has_edge(3, 2));
  CHECK_FALSE(w.g.has_edge(3, 5));
  CHECK(w.interior == std::vector<int>{2, 3, 4});
}
