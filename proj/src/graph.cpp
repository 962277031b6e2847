#include "graph.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace stoc {

int recovery_set::max_abs() const {
  int m = 0;
  for (const auto& o : offsets) m = std::max({m, std::abs(o[0]), std::abs(o[1])});
  return m;
}

namespace {

recovery_set finish(int dim, std::vector<std::array<int, 2>> offsets,
                    std::string desc) {
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  for (const auto& o : offsets)
    if (o[0] == 0 && o[1] == 0)
      fail(errc::invalid_argument, "recovery set contains the origin");
  if (offsets.empty()) fail(errc::invalid_argument, "empty recovery set");
  recovery_set r;
  r.dim = dim;
  r.offsets = std::move(offsets);
  r.desc = std::move(desc);
  return r;
}

}  // namespace

recovery_set interval_set(int l, int r) {
  if (l < 0 || r < 0 || l + r < 1)
    fail(errc::invalid_argument, "interval needs l,r >= 0 and l + r >= 1");
  std::vector<std::array<int, 2>> off;
  for (int d = -l; d <= r; ++d)
    if (d != 0) off.push_back({d, 0});
  return finish(1, std::move(off),
                "interval(" + std::to_string(l) + "," + std::to_string(r) + ")");
}

recovery_set pair_set(int l, int r) {
  if (l < 1 || r < 1) fail(errc::invalid_argument, "pair needs l,r >= 1");
  return finish(1, {{-l, 0}, {r, 0}},
                "pair(" + std::to_string(l) + "," + std::to_string(r) + ")");
}

recovery_set l1_ball_set(int radius) {
  if (radius < 1) fail(errc::invalid_argument, "ball radius must be >= 1");
  std::vector<std::array<int, 2>> off;
  for (int i = -radius; i <= radius; ++i)
    for (int j = -radius; j <= radius; ++j)
      if ((i != 0 || j != 0) && std::abs(i) + std::abs(j) <= radius)
        off.push_back({i, j});
  return finish(2, std::move(off), "ball(l1," + std::to_string(radius) + ")");
}

recovery_set linf_ball_set(int radius) {
  if (radius < 1) fail(errc::invalid_argument, "ball radius must be >= 1");
  std::vector<std::array<int, 2>> off;
  for (int i = -radius; i <= radius; ++i)
    for (int j = -radius; j <= radius; ++j)
      if (i != 0 || j != 0) off.push_back({i, j});
  return finish(2, std::move(off), "ball(linf," + std::to_string(radius) + ")");
}

recovery_set rect_set(int l, int r, int b, int a) {
  if (!(0 <= r && r < l && 0 <= b && b < a))
    fail(errc::invalid_argument, "rect needs 0 <= r < l and 0 <= b < a");
  std::vector<std::array<int, 2>> off;
  for (int i = -l; i <= r; ++i)
    for (int j = -b; j <= a; ++j)
      if (i != 0 || j != 0) off.push_back({i, j});
  return finish(2, std::move(off),
                "rect(" + std::to_string(l) + "," + std::to_string(r) + "," +
                    std::to_string(b) + "," + std::to_string(a) + ")");
}

recovery_set axial_set(int l, int r, int b, int a) {
  if (l < 1 || r < 1 || b < 1 || a < 1)
    fail(errc::invalid_argument, "axial needs l,r,b,a >= 1");
  std::vector<std::array<int, 2>> off;
  for (int i = -l; i <= r; ++i)
    if (i != 0) off.push_back({i, 0});
  for (int j = -b; j <= a; ++j)
    if (j != 0) off.push_back({0, j});
  return finish(2, std::move(off),
                "axial(" + std::to_string(l) + "," + std::to_string(r) + "," +
                    std::to_string(b) + "," + std::to_string(a) + ")");
}

std::size_t graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj) total += row.size();
  return directed ? total : total / 2;
}

bool graph::has_edge(int u, int v) const {
  const auto& row = adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

graph graph_from_edges(int n, const std::vector<std::array<int, 2>>& edges,
                       bool directed, std::vector<std::array<int, 2>> labels) {
  if (n < 0) fail(errc::invalid_argument, "negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    fail(errc::invalid_argument, "label count differs from vertex count");
  graph g;
  g.n = n;
  g.directed = directed;
  g.adj.assign(n, {});
  g.labels = std::move(labels);
  for (const auto& e : edges) {
    const int u = e[0], v = e[1];
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::invalid_argument, "edge endpoint out of range");
    if (u == v) fail(errc::invalid_argument, "self loop rejected");
    g.adj[u].push_back(v);
    if (!directed) g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return g;
}

std::vector<std::array<int, 2>> edge_list(const graph& g) {
  std::vector<std::array<int, 2>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (g.directed || u < v) edges.push_back({u, v});
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::vector<int>> in_neighbors(const graph& g) {
  std::vector<std::vector<int>> rev(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) rev[v].push_back(u);
  for (auto& row : rev) std::sort(row.begin(), row.end());
  return rev;
}

window_graph_t make_window_graph(const recovery_set& r, int side, int side_cap) {
  if (side_cap == 0)
    side_cap = r.dim == 1 ? window_side_cap_1d : window_side_cap_2d;
  if (side > side_cap)
    fail(errc::cap_exceeded, "window side " + std::to_string(side) +
                                 " exceeds cap " + std::to_string(side_cap));
  if (side <= 2 * r.max_abs())
    fail(errc::invalid_argument, "window side must exceed twice the reach");

  window_graph_t w;
  w.r = r;
  w.side = side;
  const int n = r.dim == 1 ? side : side * side;

  auto cell_id = [&](int i, int j) { return r.dim == 1 ? i : i * side + j; };
  auto in_window = [&](int i, int j) {
    if (i < 0 || i >= side) return false;
    return r.dim == 1 ? j == 0 : (j >= 0 && j < side);
  };

  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 2>> labels(n);
  const int jmax = r.dim == 1 ? 1 : side;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < jmax; ++j) {
      const int v = cell_id(i, j);
      labels[v] = {i, j};
      bool full = true;
      for (const auto& o : r.offsets) {
        const int ui = i + o[0], uj = j + o[1];
        if (in_window(ui, uj))
          edges.push_back({v, cell_id(ui, uj)});
        else
          full = false;
      }
      (full ? w.interior : w.boundary).push_back(v);
    }
  }
  w.g = graph_from_edges(n, edges, true, std::move(labels));
  return w;
}

graph cycle_graph(int n) {
  if (n < 3) fail(errc::invalid_argument, "cycle needs n >= 3");
  std::vector<std::array<int, 2>> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return graph_from_edges(n, edges, false);
}

graph path_graph(int n) {
  if (n < 1) fail(errc::invalid_argument, "path needs n >= 1");
  std::vector<std::array<int, 2>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return graph_from_edges(n, edges, false);
}

graph complete_graph(int n) {
  if (n < 1) fail(errc::invalid_argument, "complete graph needs n >= 1");
  std::vector<std::array<int, 2>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return graph_from_edges(n, edges, false);
}

graph cube_graph() {
  const graph k2 = complete_graph(2);
  return cartesian_product(cartesian_product(k2, k2), k2);
}

graph torus_rowcol_graph(int n) {
  if (n < 3) fail(errc::invalid_argument, "torus needs n >= 3");
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 2>> labels(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int v = i * n + j;
      labels[v] = {i, j};
      for (int jj = j + 1; jj < n; ++jj) edges.push_back({v, i * n + jj});
      for (int ii = i + 1; ii < n; ++ii) edges.push_back({v, ii * n + j});
    }
  return graph_from_edges(n * n, edges, false, std::move(labels));
}

graph cartesian_product(const graph& g1, const graph& g2) {
  if (g1.directed || g2.directed)
    fail(errc::invalid_argument, "product factors must be undirected");
  const int n = g1.n * g2.n;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 2>> labels(n);
  for (int v1 = 0; v1 < g1.n; ++v1)
    for (int v2 = 0; v2 < g2.n; ++v2) {
      const int v = v1 * g2.n + v2;
      labels[v] = {v1, v2};
      for (int u1 : g1.adj[v1])
        if (v1 < u1) edges.push_back({v, u1 * g2.n + v2});
      for (int u2 : g2.adj[v2])
        if (v2 < u2) edges.push_back({v, v1 * g2.n + u2});
    }
  return graph_from_edges(n, edges, false, std::move(labels));
}

graph induced_subgraph(const graph& g, const std::vector<int>& verts) {
  std::vector<int> order(verts);
  std::sort(order.begin(), order.end());
  if (std::unique(order.begin(), order.end()) != order.end())
    fail(errc::invalid_argument, "duplicate vertex in selection");
  std::vector<int> pos(g.n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= g.n)
      fail(errc::invalid_argument, "vertex out of range");
    pos[order[i]] = static_cast<int>(i);
  }
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 2>> labels;
  if (g.has_labels())
    for (int v : order) labels.push_back(g.labels[v]);
  for (int v : order)
    for (int u : g.adj[v])
      if (pos[u] >= 0 && (g.directed || v < u))
        edges.push_back({pos[v], pos[u]});
  return graph_from_edges(static_cast<int>(order.size()), edges, g.directed,
                          std::move(labels));
}

dag_check is_dag(const graph& g, const std::vector<int>& s) {
  std::vector<int> order(s);
  std::sort(order.begin(), order.end());
  if (std::unique(order.begin(), order.end()) != order.end())
    fail(errc::invalid_argument, "duplicate vertex in selection");
  std::vector<int> pos(g.n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= g.n)
      fail(errc::invalid_argument, "vertex out of range");
    pos[order[i]] = static_cast<int>(i);
  }
  const int m = static_cast<int>(order.size());

  // Iterative DFS with colors; back edge yields the cycle.
  std::vector<int> color(m, 0), parent(m, -1);
  dag_check result;
  std::vector<int> finish_order;
  for (int root = 0; root < m; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto [v, idx] = stack.back();
      const auto& row = g.adj[order[v]];
      bool pushed = false;
      while (idx < row.size()) {
        const int w = pos[row[idx++]];
        if (w < 0) continue;
        if (color[w] == 1) {
          std::vector<int> cyc{order[w]};
          for (int x = v; x != w; x = parent[x]) cyc.push_back(order[x]);
          std::reverse(cyc.begin() + 1, cyc.end());
          result.ok = false;
          result.cycle = std::move(cyc);
          return result;
        }
        if (color[w] == 0) {
          color[w] = 1;
          parent[w] = v;
          stack.back().second = idx;
          stack.push_back({w, 0});
          pushed = true;
          break;
        }
      }
      if (!pushed) {
        color[v] = 2;
        finish_order.push_back(order[v]);
        stack.pop_back();
      }
    }
  }
  std::reverse(finish_order.begin(), finish_order.end());
  result.ok = true;
  result.order = std::move(finish_order);
  return result;
}

std::optional<std::array<int, 3>> find_triangle(const graph& g) {
  std::vector<std::vector<char>> sym(g.n, std::vector<char>(g.n, 0));
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) sym[u][v] = sym[v][u] = 1;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (!sym[u][v]) continue;
      for (int w = v + 1; w < g.n; ++w)
        if (sym[u][w] && sym[v][w]) return std::array<int, 3>{u, v, w};
    }
  return std::nullopt;
}

}  // namespace stoc
