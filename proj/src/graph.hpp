#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace stoc {

// Offsets never contain the origin.  One-dimensional sets use offset[1] == 0.
struct recovery_set {
  int dim = 1;
  std::vector<std::array<int, 2>> offsets;
  std::string desc;

  int max_abs() const;
};

recovery_set interval_set(int l, int r);
recovery_set pair_set(int l, int r);
recovery_set l1_ball_set(int radius);
recovery_set linf_ball_set(int radius);
// Box [-l,r] x [-b,a] minus the origin, 0 <= r < l and 0 <= b < a.
recovery_set rect_set(int l, int r, int b, int a);
// Horizontal arm [-l,r], vertical arm [-b,a].
recovery_set axial_set(int l, int r, int b, int a);

// Out-neighbor lists are sorted and duplicate free; no self loops.
// Undirected graphs store both directions of every edge.
struct graph {
  int n = 0;
  bool directed = false;
  std::vector<std::vector<int>> adj;
  std::vector<std::array<int, 2>> labels;

  bool has_labels() const { return !labels.empty(); }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;
};

graph graph_from_edges(int n, const std::vector<std::array<int, 2>>& edges,
                       bool directed,
                       std::vector<std::array<int, 2>> labels = {});

// Canonical edge list: directed as stored, undirected with u < v once,
// sorted lexicographically.
std::vector<std::array<int, 2>> edge_list(const graph& g);

std::vector<std::vector<int>> in_neighbors(const graph& g);

// Cells of [n] or [n]^2 with v -> u whenever u - v lies in the recovery set
// and u stays inside the window.  Boundary cells are those whose full
// recovery neighborhood does not fit in the window.
struct window_graph_t {
  graph g;
  recovery_set r;
  int side = 0;
  std::vector<int> interior;
  std::vector<int> boundary;
};

inline constexpr int window_side_cap_1d = 4096;
inline constexpr int window_side_cap_2d = 64;

// side_cap == 0 selects the dimension default.  Requires side > 2 * max |offset|.
window_graph_t make_window_graph(const recovery_set& r, int side,
                                 int side_cap = 0);

graph cycle_graph(int n);
graph path_graph(int n);
graph complete_graph(int n);
// K_2 x K_2 x K_2.
graph cube_graph();

// n^2 cells, edge when the coordinate pairs differ in exactly one position.
graph torus_rowcol_graph(int n);

// Undirected factors only.  Vertex (v1, v2) has id v1 * g2.n + v2.
graph cartesian_product(const graph& g1, const graph& g2);

graph induced_subgraph(const graph& g, const std::vector<int>& verts);

struct dag_check {
  bool ok = false;
  std::vector<int> order;  // topological order of S when ok
  std::vector<int> cycle;  // a directed cycle inside S otherwise
};

// An undirected edge inside S counts as a two-cycle.
dag_check is_dag(const graph& g, const std::vector<int>& s);

// Inspects the symmetrized adjacency.  Returns a triangle if one exists.
std::optional<std::array<int, 3>> find_triangle(const graph& g);

inline bool is_triangle_free(const graph& g) { return !find_triangle(g); }

}  // namespace stoc
