#pragma once

#include <cstdint>
#include <vector>

#include "code.hpp"
#include "design.hpp"
#include "graph.hpp"
#include "sampling.hpp"

namespace stoc {

// Proper vertex coloring; colors are 0-based and contiguous.
struct coloring_t {
  int colors = 0;
  std::vector<int> color;
};

// Saturation-degree greedy, ties broken by smallest vertex id.
coloring_t greedy_coloring(const graph& g);

// Color t mod (l + r + 1) along a one-dimensional window.
coloring_t window_mod_coloring(int side, int l, int r);

bool coloring_is_proper(const graph& g, const coloring_t& c);

// Vertex (t, u) of the product has id t * s + u and holds column u of the
// matrix assigned to t's color.  (t, u) ~ (t', u') when t ~ t' in the base
// and the two columns share a symbol.
struct interleaved_graph_t {
  graph base;
  partition_family family;
  coloring_t coloring;
  std::vector<int> color_to_matrix;
  graph g;

  int s() const { return family.s; }
  int k() const { return family.k; }
  int vertex_id(int t, int u) const { return t * family.s + u; }
  int matrix_of(int t) const { return color_to_matrix[coloring.color[t]]; }
};

interleaved_graph_t build_interleaved_graph(const graph& base,
                                            const partition_family& family,
                                            const coloring_t& coloring);

// Word on the product graph built from k * s seed words: the copy of seed
// word `tuple[x - 1]` supplies every position holding symbol x.  Vertex
// (t, u) stores the column-u symbols of its matrix evaluated at t.
std::vector<std::uint8_t> interleave_tuple(const interleaved_graph_t& ig,
                                           const code_t& seed,
                                           const std::vector<std::size_t>& tuple);

// All seed tuples, or a reproducible sample of them.
code_t interleaved_code(const interleaved_graph_t& ig, const code_t& seed,
                        const build_mode& mode = {},
                        std::size_t word_cap = code_word_cap);

// Every product vertex above a base vertex of S.
std::vector<int> lift_set(const interleaved_graph_t& ig,
                          const std::vector<int>& s);

// Product vertices that jointly hold the row-j symbol of `vertex`: one
// neighbor above each base neighbor of t.  Rows partition the product
// neighborhood.
std::vector<int> partial_recovery_neighbors(const interleaved_graph_t& ig,
                                            int vertex, int row);

}  // namespace stoc
