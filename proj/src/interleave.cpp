#include "interleave.hpp"

#include <algorithm>

#include "error.hpp"

namespace stoc {

coloring_t greedy_coloring(const graph& g) {
  coloring_t c;
  c.color.assign(g.n, -1);
  std::vector<std::vector<char>> nbr_colors(g.n);
  std::vector<int> saturation(g.n, 0);
  for (int step = 0; step < g.n; ++step) {
    int pick = -1;
    for (int v = 0; v < g.n; ++v) {
      if (c.color[v] != -1) continue;
      if (pick == -1 || saturation[v] > saturation[pick]) pick = v;
    }
    int col = 0;
    auto& seen = nbr_colors[pick];
    while (col < static_cast<int>(seen.size()) && seen[col]) ++col;
    c.color[pick] = col;
    c.colors = std::max(c.colors, col + 1);
    for (int u : g.adj[pick]) {
      if (c.color[u] != -1) continue;
      auto& s = nbr_colors[u];
      if (col >= static_cast<int>(s.size())) s.resize(col + 1, 0);
      if (!s[col]) {
        s[col] = 1;
        ++saturation[u];
      }
    }
    if (!g.directed) continue;
    // Directed graphs saturate along in-edges too.
    for (int u = 0; u < g.n; ++u) {
      if (c.color[u] != -1 || !g.has_edge(u, pick)) continue;
      auto& s = nbr_colors[u];
      if (col >= static_cast<int>(s.size())) s.resize(col + 1, 0);
      if (!s[col]) {
        s[col] = 1;
        ++saturation[u];
      }
    }
  }
  return c;
}

coloring_t window_mod_coloring(int side, int l, int r) {
  if (side < 1 || l < 0 || r < 0 || l + r < 1)
    fail(errc::invalid_argument, "bad window coloring parameters");
  coloring_t c;
  const int period = l + r + 1;
  c.colors = std::min(side, period);
  for (int t = 0; t < side; ++t) c.color.push_back(t % period);
  return c;
}

bool coloring_is_proper(const graph& g, const coloring_t& c) {
  if (static_cast<int>(c.color.size()) != g.n) return false;
  for (int v = 0; v < g.n; ++v) {
    if (c.color[v] < 0 || c.color[v] >= c.colors) return false;
    for (int u : g.adj[v])
      if (c.color[u] == c.color[v]) return false;
  }
  return true;
}

interleaved_graph_t build_interleaved_graph(const graph& base,
                                            const partition_family& family,
                                            const coloring_t& coloring) {
  const auto fam_check = verify_family(family);
  if (!fam_check.ok)
    fail(errc::invalid_argument, "bad partition family: " + fam_check.reason);
  if (!coloring_is_proper(base, coloring))
    fail(errc::invalid_argument, "coloring is not proper");
  if (coloring.colors > static_cast<int>(family.matrices.size()))
    fail(errc::invalid_argument, "more colors than matrices");

  interleaved_graph_t ig;
  ig.base = base;
  ig.family = family;
  ig.coloring = coloring;
  for (int c = 0; c < coloring.colors; ++c) ig.color_to_matrix.push_back(c);

  const int s = family.s, k = family.k;
  const int symbols = k * s;
  // col_of[m][x] = column of symbol x in matrix m.
  std::vector<std::vector<int>> col_of(family.matrices.size(),
                                       std::vector<int>(symbols + 1, -1));
  for (std::size_t m = 0; m < family.matrices.size(); ++m)
    for (int row = 0; row < k; ++row)
      for (int col = 0; col < s; ++col)
        col_of[m][family.matrices[m][row][col]] = col;

  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 2>> labels(base.n * s);
  for (int t = 0; t < base.n; ++t)
    for (int u = 0; u < s; ++u) labels[ig.vertex_id(t, u)] = {t, u};
  for (int t = 0; t < base.n; ++t) {
    const int mt = ig.matrix_of(t);
    for (int t2 : base.adj[t]) {
      if (!base.directed && t2 < t) continue;
      const int m2 = ig.matrix_of(t2);
      for (int u = 0; u < s; ++u)
        for (int row = 0; row < k; ++row) {
          const int u2 = col_of[m2][family.matrices[mt][row][u]];
          edges.push_back({ig.vertex_id(t, u), ig.vertex_id(t2, u2)});
        }
    }
  }
  ig.g = graph_from_edges(base.n * s, edges, base.directed, std::move(labels));
  return ig;
}

std::vector<std::uint8_t> interleave_tuple(const interleaved_graph_t& ig,
                                           const code_t& seed,
                                           const std::vector<std::size_t>& tuple) {
  const int s = ig.s(), k = ig.k();
  if (seed.n != ig.base.n)
    fail(errc::invalid_argument, "seed length differs from base vertex count");
  if (tuple.size() != static_cast<std::size_t>(k) * s)
    fail(errc::invalid_argument, "tuple needs k * s seed words");
  for (std::size_t w : tuple)
    if (w >= seed.size()) fail(errc::invalid_argument, "tuple index out of range");

  const int lvl = seed.level;
  std::vector<std::uint8_t> word(static_cast<std::size_t>(ig.g.n) * k * lvl);
  for (int t = 0; t < ig.base.n; ++t) {
    const auto& m = ig.family.matrices[ig.matrix_of(t)];
    for (int u = 0; u < s; ++u) {
      std::uint8_t* out =
          word.data() + static_cast<std::size_t>(ig.vertex_id(t, u)) * k * lvl;
      for (int row = 0; row < k; ++row) {
        const std::uint8_t* w = seed.word(tuple[m[row][u] - 1]);
        for (int d = 0; d < lvl; ++d) out[row * lvl + d] = w[t * lvl + d];
      }
    }
  }
  return word;
}

code_t interleaved_code(const interleaved_graph_t& ig, const code_t& seed,
                        const build_mode& mode, std::size_t word_cap) {
  const std::size_t ks = static_cast<std::size_t>(ig.k()) * ig.s();
  const std::size_t count = seed.size();
  std::vector<std::uint8_t> digits;
  std::vector<std::size_t> tuple(ks, 0);
  if (mode.kind == build_mode::full) {
    bigint total = 1;
    for (std::size_t i = 0; i < ks; ++i) total *= count;
    if (total > word_cap)
      fail(errc::cap_exceeded, "tuple count exceeds the word cap");
    while (true) {
      const auto word = interleave_tuple(ig, seed, tuple);
      digits.insert(digits.end(), word.begin(), word.end());
      std::size_t pos = 0;
      while (pos < ks && ++tuple[pos] == count) tuple[pos++] = 0;
      if (pos == ks) break;
    }
  } else {
    if (mode.count == 0 || mode.count > word_cap)
      fail(errc::invalid_argument, "bad sample count");
    splitmix64 rng(mode.seed);
    for (std::size_t i = 0; i < mode.count; ++i) {
      for (std::size_t j = 0; j < ks; ++j)
        tuple[j] = static_cast<std::size_t>(rng.below(count));
      const auto word = interleave_tuple(ig, seed, tuple);
      digits.insert(digits.end(), word.begin(), word.end());
    }
  }
  return make_code(seed.q, seed.level * ig.k(), ig.g.n, std::move(digits),
                   word_cap);
}

std::vector<int> lift_set(const interleaved_graph_t& ig,
                          const std::vector<int>& s) {
  std::vector<int> out;
  for (int t : s) {
    if (t < 0 || t >= ig.base.n)
      fail(errc::invalid_argument, "vertex out of range");
    for (int u = 0; u < ig.s(); ++u) out.push_back(ig.vertex_id(t, u));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> partial_recovery_neighbors(const interleaved_graph_t& ig,
                                            int vertex, int row) {
  if (vertex < 0 || vertex >= ig.g.n)
    fail(errc::invalid_argument, "vertex out of range");
  if (row < 0 || row >= ig.k()) fail(errc::invalid_argument, "row out of range");
  const int t = vertex / ig.s(), u = vertex % ig.s();
  const int sym = ig.family.matrices[ig.matrix_of(t)][row][u];
  std::vector<int> out;
  for (int t2 : ig.base.adj[t]) {
    const auto& m2 = ig.family.matrices[ig.matrix_of(t2)];
    for (int col = 0; col < ig.s(); ++col)
      for (int r2 = 0; r2 < ig.k(); ++r2)
        if (m2[r2][col] == sym) out.push_back(ig.vertex_id(t2, col));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stoc
