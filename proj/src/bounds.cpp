#include "bounds.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "error.hpp"

namespace stoc {

namespace {

// Fixed-width bitset rows, one per vertex.
struct bit_rows {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;

  explicit bit_rows(int n_) : n(n_), words((n_ + 63) / 64), bits(std::size_t(n_) * words, 0) {}

  std::uint64_t* row(int v) { return bits.data() + std::size_t(v) * words; }
  const std::uint64_t* row(int v) const { return bits.data() + std::size_t(v) * words; }
  void set(int v, int u) { row(v)[u >> 6] |= std::uint64_t{1} << (u & 63); }
  bool test(int v, int u) const {
    return (row(v)[u >> 6] >> (u & 63)) & 1u;
  }
};

inline bool mask_empty(const std::uint64_t* m, int words) {
  for (int i = 0; i < words; ++i)
    if (m[i]) return false;
  return true;
}

inline int mask_first(const std::uint64_t* m, int words) {
  for (int i = 0; i < words; ++i)
    if (m[i]) return i * 64 + std::countr_zero(m[i]);
  return -1;
}

inline void mask_clear(std::uint64_t* m, int v) {
  m[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

// Branch and bound maximum clique with greedy coloring bound.
struct clique_solver {
  const bit_rows& adj;
  int n, words;
  std::vector<int> best, current;

  explicit clique_solver(const bit_rows& a) : adj(a), n(a.n), words(a.words) {}

  std::vector<int> solve() {
    std::vector<std::uint64_t> p(words, 0);
    for (int v = 0; v < n; ++v) p[v >> 6] |= std::uint64_t{1} << (v & 63);
    expand(p);
    std::sort(best.begin(), best.end());
    return best;
  }

  void expand(std::vector<std::uint64_t>& p) {
    // Color classes in ascending order; candidates processed in reverse.
    std::vector<std::pair<int, int>> order;
    {
      std::vector<std::uint64_t> work = p;
      int color = 0;
      std::vector<std::uint64_t> q(words);
      while (!mask_empty(work.data(), words)) {
        ++color;
        q = work;
        while (true) {
          const int v = mask_first(q.data(), words);
          if (v < 0) break;
          mask_clear(q.data(), v);
          mask_clear(work.data(), v);
          const std::uint64_t* row = adj.row(v);
          for (int i = 0; i < words; ++i) q[i] &= ~row[i];
          order.push_back({v, color});
        }
      }
    }
    std::vector<std::uint64_t> next(words);
    for (std::size_t i = order.size(); i-- > 0;) {
      const auto [v, color] = order[i];
      if (current.size() + color <= best.size()) return;
      const std::uint64_t* row = adj.row(v);
      for (int w = 0; w < words; ++w) next[w] = p[w] & row[w];
      current.push_back(v);
      if (mask_empty(next.data(), words)) {
        if (current.size() > best.size()) best = current;
      } else {
        std::vector<std::uint64_t> saved = next;
        expand(saved);
      }
      current.pop_back();
      mask_clear(p.data(), v);
    }
  }
};

bit_rows symmetric_rows(const graph& g) {
  bit_rows rows(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) {
      rows.set(v, u);
      rows.set(u, v);
    }
  return rows;
}

bit_rows complement_rows(const bit_rows& rows) {
  bit_rows out(rows.n);
  for (int v = 0; v < rows.n; ++v) {
    for (int u = 0; u < rows.n; ++u)
      if (u != v && !rows.test(v, u)) out.set(v, u);
  }
  return out;
}

std::vector<int> max_independent_set(const graph& g) {
  const bit_rows sym = symmetric_rows(g);
  const bit_rows comp = complement_rows(sym);
  clique_solver solver(comp);
  return solver.solve();
}

// Acyclic-subset search over directed graphs.
struct mais_solver {
  const graph& g;
  std::vector<int> best, chosen;
  std::vector<char> in_set;

  explicit mais_solver(const graph& g_) : g(g_), in_set(g_.n, 0) {}

  bool closes_cycle(int v) const {
    // Any new cycle passes through v; follow out-edges inside the set.
    std::vector<int> stack{v};
    std::vector<char> seen(g.n, 0);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int u : g.adj[x]) {
        if (u == v) return true;
        if (!in_set[u] || seen[u]) continue;
        seen[u] = 1;
        stack.push_back(u);
      }
    }
    return false;
  }

  void rec(int idx) {
    if (chosen.size() + (g.n - idx) <= best.size()) return;
    if (idx == g.n) {
      best = chosen;
      return;
    }
    in_set[idx] = 1;
    chosen.push_back(idx);
    if (!closes_cycle(idx)) rec(idx + 1);
    chosen.pop_back();
    in_set[idx] = 0;
    rec(idx + 1);
  }

  std::vector<int> solve() {
    rec(0);
    std::sort(best.begin(), best.end());
    return best;
  }
};

bool fully_symmetric(const graph& g) {
  if (!g.directed) return true;
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v])
      if (!g.has_edge(u, v)) return false;
  return true;
}

// Exact chromatic number via branch and bound, greedy start, clique seed.
struct coloring_solver {
  const bit_rows& adj;
  int n;
  std::vector<int> order;       // branching order
  std::vector<int> color;       // per vertex, -1 unset
  std::vector<int> best_color;
  int best = 0;                 // colors in best_color
  int lower = 1;

  explicit coloring_solver(const bit_rows& a) : adj(a), n(a.n), color(a.n, -1) {}

  int greedy(std::vector<int>& out) {
    out.assign(n, -1);
    int used = 0;
    std::vector<int> sat(n, 0), deg(n, 0);
    std::vector<std::vector<char>> seen(n);
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u) deg[v] += adj.test(v, u);
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (out[v] != -1) continue;
        if (pick == -1 || sat[v] > sat[pick] ||
            (sat[v] == sat[pick] && deg[v] > deg[pick]))
          pick = v;
      }
      int c = 0;
      auto& s = seen[pick];
      while (c < static_cast<int>(s.size()) && s[c]) ++c;
      out[pick] = c;
      used = std::max(used, c + 1);
      for (int u = 0; u < n; ++u) {
        if (!adj.test(pick, u) || out[u] != -1) continue;
        auto& su = seen[u];
        if (c >= static_cast<int>(su.size())) su.resize(c + 1, 0);
        if (!su[c]) {
          su[c] = 1;
          ++sat[u];
        }
      }
    }
    return used;
  }

  void rec(std::size_t idx, int used) {
    if (used >= best) return;
    if (idx == order.size()) {
      best = used;
      best_color = color;
      return;
    }
    const int v = order[idx];
    for (int c = 0; c < std::min(used + 1, best - 1); ++c) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        if (adj.test(v, u) && color[u] == c) ok = false;
      if (!ok) continue;
      color[v] = c;
      rec(idx + 1, std::max(used, c + 1));
      color[v] = -1;
      if (best <= lower) return;
    }
  }

  int solve() {
    std::vector<int> g_colors;
    best = greedy(g_colors);
    best_color = g_colors;
    clique_solver cs(adj);
    lower = static_cast<int>(cs.solve().size());
    if (best > lower) {
      order.resize(n);
      std::iota(order.begin(), order.end(), 0);
      std::vector<int> deg(n, 0);
      for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) deg[v] += adj.test(v, u);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
      });
      std::fill(color.begin(), color.end(), -1);
      rec(0, 0);
    }
    return best;
  }
};

// Blossom algorithm for maximum matching in general graphs.
struct blossom_matcher {
  const graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<char> used, in_blossom;

  explicit blossom_matcher(const graph& g_) : g(g_), n(g_.n) {}

  int lca(int a, int b) {
    std::vector<char> seen(n, 0);
    int cur = a;
    while (true) {
      cur = base[cur];
      seen[cur] = 1;
      if (match[cur] == -1) break;
      cur = parent[match[cur]];
    }
    cur = b;
    while (!seen[base[cur]]) cur = parent[match[cur]];
    return base[cur];
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  int find_path(int root) {
    used.assign(n, 0);
    parent.assign(n, -1);
    base.resize(n);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : g.adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          const int cur_base = lca(v, to);
          in_blossom.assign(n, 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  }

  std::vector<std::array<int, 2>> solve() {
    match.assign(n, -1);
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        const int pv = parent[end], ppv = match[pv];
        match[end] = pv;
        match[pv] = end;
        end = ppv;
      }
    }
    std::vector<std::array<int, 2>> out;
    for (int v = 0; v < n; ++v)
      if (match[v] > v) out.push_back({v, match[v]});
    return out;
  }
};

void require_vertex_cap(int n, int cap, const char* what) {
  if (n > cap)
    fail(errc::cap_exceeded, std::string(what) + ": " + std::to_string(n) +
                                 " vertices exceed cap " + std::to_string(cap));
}

json set_to_json(const std::vector<int>& s) { return json(s); }

}  // namespace

set_result independence_number(const graph& g, const solve_caps& caps) {
  require_vertex_cap(g.n, caps.independence, "independent set search");
  auto set = max_independent_set(g);
  return {bigint(set.size()), std::move(set)};
}

set_result mais(const graph& g, const solve_caps& caps) {
  if (fully_symmetric(g)) return independence_number(g, caps);
  require_vertex_cap(g.n, caps.mais, "acyclic set search");
  mais_solver solver(g);
  auto set = solver.solve();
  return {bigint(set.size()), std::move(set)};
}

cover_result clique_cover_number(const graph& g, const solve_caps& caps) {
  require_vertex_cap(g.n, caps.cover, "clique cover search");
  const bit_rows sym = symmetric_rows(g);
  const bit_rows comp = complement_rows(sym);
  coloring_solver solver(comp);
  const int count = solver.solve();
  std::vector<std::vector<int>> parts(count);
  for (int v = 0; v < g.n; ++v) parts[solver.best_color[v]].push_back(v);
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  parts.erase(std::remove_if(parts.begin(), parts.end(),
                             [](const auto& p) { return p.empty(); }),
              parts.end());
  return {bigint(parts.size()), std::move(parts)};
}

std::vector<std::array<int, 2>> max_matching(const graph& g) {
  if (g.directed) fail(errc::invalid_argument, "matching needs an undirected graph");
  blossom_matcher matcher(g);
  return matcher.solve();
}

set_result anticode_max(const graph& g, int diameter, const solve_caps& caps) {
  require_vertex_cap(g.n, caps.independence, "anticode search");
  if (diameter < 0) fail(errc::invalid_argument, "negative diameter");
  // Pairwise distances by BFS over the symmetrized graph.
  const bit_rows sym = symmetric_rows(g);
  bit_rows close(g.n);
  for (int src = 0; src < g.n; ++src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u = 0; u < g.n; ++u)
        if (sym.test(v, u) && dist[u] == -1) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
    for (int u = 0; u < g.n; ++u)
      if (u != src && dist[u] != -1 && dist[u] <= diameter) close.set(src, u);
  }
  clique_solver solver(close);
  auto set = solver.solve();
  return {bigint(set.size()), std::move(set)};
}

cell_set_result brute_anticode(plane_metric metric, int diameter) {
  if (diameter < 1) fail(errc::invalid_argument, "diameter must be >= 1");
  auto dist = [&](const std::array<int, 2>& a, const std::array<int, 2>& b) {
    const int di = std::abs(a[0] - b[0]), dj = std::abs(a[1] - b[1]);
    return metric == plane_metric::l1 ? di + dj : std::max(di, dj);
  };
  // Translate so one cell sits at the origin; the rest stay within reach.
  std::vector<std::array<int, 2>> cells;
  for (int i = -diameter; i <= diameter; ++i)
    for (int j = -diameter; j <= diameter; ++j)
      if (dist({0, 0}, {i, j}) <= diameter) cells.push_back({i, j});
  const int m = static_cast<int>(cells.size());
  bit_rows close(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && dist(cells[a], cells[b]) <= diameter) close.set(a, b);
  clique_solver solver(close);
  auto picked = solver.solve();
  cell_set_result out;
  out.size = picked.size();
  for (int idx : picked) out.cells.push_back(cells[idx]);
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

namespace {

set_result b_avoiding_dp(const std::vector<int>& avoid, int side) {
  const int w = *std::max_element(avoid.begin(), avoid.end());
  if (w > 16) fail(errc::cap_exceeded, "avoiding-set window wider than 16");
  const std::size_t states = std::size_t{1} << w;
  if (states * (side + 1) > (std::size_t{1} << 25))
    fail(errc::cap_exceeded, "avoiding-set table too large");
  std::uint32_t avoid_mask = 0;
  for (int b : avoid) avoid_mask |= std::uint32_t{1} << (b - 1);
  const std::uint32_t keep = static_cast<std::uint32_t>(states - 1);

  // layer[i][mask]: best size using positions < i, mask = membership of the
  // w latest positions, newest in bit 0.
  std::vector<std::vector<std::int32_t>> layer(side + 1);
  layer[0].assign(states, -1);
  layer[0][0] = 0;
  for (int i = 0; i < side; ++i) {
    layer[i + 1].assign(states, -1);
    for (std::size_t mask = 0; mask < states; ++mask) {
      const std::int32_t cur = layer[i][mask];
      if (cur < 0) continue;
      const std::uint32_t skip = (static_cast<std::uint32_t>(mask) << 1) & keep;
      if (cur > layer[i + 1][skip]) layer[i + 1][skip] = cur;
      if ((mask & avoid_mask) == 0) {
        const std::uint32_t take = skip | 1u;
        if (cur + 1 > layer[i + 1][take]) layer[i + 1][take] = cur + 1;
      }
    }
  }
  std::int32_t best = -1;
  std::size_t best_mask = 0;
  for (std::size_t mask = 0; mask < states; ++mask)
    if (layer[side][mask] > best) {
      best = layer[side][mask];
      best_mask = mask;
    }
  // Walk the table backwards to recover one optimal set.
  std::vector<int> set;
  std::size_t mask = best_mask;
  std::int32_t need = best;
  for (int i = side; i > 0; --i) {
    const bool took = mask & 1u;
    const std::size_t prev_high = (mask >> 1);
    bool done = false;
    for (std::size_t hb = 0; hb < 2 && !done; ++hb) {
      const std::size_t prev = prev_high | (hb << (w - 1));
      if (prev >= states) continue;
      const std::int32_t want = took ? need - 1 : need;
      if (layer[i - 1][prev] != want) continue;
      if (took && (prev & avoid_mask) != 0) continue;
      if (took) set.push_back(i - 1);
      mask = prev;
      need = want;
      done = true;
    }
    if (!done) fail(errc::internal, "avoiding-set backtrack failed");
  }
  std::sort(set.begin(), set.end());
  return {bigint(best), std::move(set)};
}

}  // namespace

set_result max_b_avoiding(const std::vector<int>& avoid, int side,
                          const solve_caps& caps) {
  if (side < 1) fail(errc::invalid_argument, "side must be >= 1");
  if (avoid.empty()) fail(errc::invalid_argument, "empty difference set");
  for (int b : avoid)
    if (b < 1) fail(errc::invalid_argument, "differences must be >= 1");
  if (side <= caps.b_avoiding_exact) {
    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i < side; ++i)
      for (int b : avoid)
        if (i + b < side) edges.push_back({i, i + b});
    const graph conflict = graph_from_edges(side, edges, false);
    solve_caps local = caps;
    local.independence = std::max(caps.independence, side);
    return independence_number(conflict, local);
  }
  return b_avoiding_dp(avoid, side);
}

bound_certificate independence_bound(const graph& g, const solve_caps& caps) {
  auto r = independence_number(g, caps);
  bound_certificate cert;
  cert.kind = "independence";
  cert.is_upper = true;
  cert.raw = r.size;
  cert.value = rational(1) - rational(r.size, bigint(g.n));
  cert.witness = json{{"set", set_to_json(r.set)}};
  return cert;
}

bound_certificate mais_bound(const graph& g, const solve_caps& caps) {
  auto r = mais(g, caps);
  const auto check = is_dag(g, r.set);
  if (!check.ok) fail(errc::internal, "acyclic witness fails recheck");
  bound_certificate cert;
  cert.kind = "mais";
  cert.is_upper = true;
  cert.raw = r.size;
  cert.value = rational(1) - rational(r.size, bigint(g.n));
  cert.witness = json{{"set", set_to_json(r.set)}, {"order", json(check.order)}};
  return cert;
}

bound_certificate clique_cover_bound(const graph& g, const solve_caps& caps) {
  auto r = clique_cover_number(g, caps);
  bound_certificate cert;
  cert.kind = "clique_cover";
  cert.is_upper = false;
  cert.raw = r.count;
  cert.value = rational(1) - rational(r.count, bigint(g.n));
  cert.witness = json{{"parts", json(r.parts)}};
  return cert;
}

bound_certificate matching_bound(const graph& g) {
  auto m = max_matching(g);
  bound_certificate cert;
  cert.kind = "matching";
  cert.is_upper = false;
  cert.raw = bigint(m.size());
  cert.value = rational(bigint(m.size()), bigint(g.n));
  json edges = json::array();
  for (const auto& e : m) edges.push_back(json::array({e[0], e[1]}));
  cert.witness = json{{"edges", edges}};
  return cert;
}

bigint anticode_size_bound(const bigint& vertices, const bigint& anticode) {
  if (anticode <= 0) fail(errc::invalid_argument, "anticode size must be positive");
  return vertices / anticode;
}

bound_certificate code_anticode_bound(const bigint& vertices,
                                      const bigint& anticode,
                                      bool tiling_exists) {
  if (!tiling_exists)
    fail(errc::invalid_argument,
         "capacity form of the product bound needs a tiling witness");
  if (anticode <= 0 || vertices <= 0)
    fail(errc::invalid_argument, "sizes must be positive");
  bound_certificate cert;
  cert.kind = "anticode";
  cert.is_upper = true;
  cert.raw = anticode;
  cert.value = rational(1) - rational(bigint(1), anticode);
  cert.witness = json{{"vertices", vertices.str()},
                      {"anticode", anticode.str()},
                      {"tiling", true},
                      {"size_bound", anticode_size_bound(vertices, anticode).str()}};
  return cert;
}

bound_certificate diff_avoiding_bound(const recovery_set& r, int side,
                                      const solve_caps& caps) {
  if (r.dim != 1) fail(errc::invalid_argument, "needs a one-dimensional recovery set");
  std::vector<int> left, right;
  for (const auto& o : r.offsets)
    (o[0] < 0 ? left : right).push_back(std::abs(o[0]));
  bound_certificate cert;
  cert.kind = "diff_avoiding";
  cert.is_upper = true;
  set_result best{};
  std::string direction = "none";
  for (int pass = 0; pass < 2; ++pass) {
    const auto& b = pass == 0 ? left : right;
    if (b.empty()) continue;
    auto got = max_b_avoiding(b, side, caps);
    if (got.size > best.size) {
      best = got;
      direction = pass == 0 ? "left" : "right";
    }
  }
  if (direction == "none")
    fail(errc::invalid_argument, "recovery set has no offsets");
  const auto& avoid = direction == "left" ? left : right;
  cert.raw = best.size;
  cert.value = rational(1) - rational(best.size, bigint(side));
  cert.witness = json{{"set", set_to_json(best.set)},
                      {"avoid", json(avoid)},
                      {"side", side},
                      {"direction", direction}};
  return cert;
}

std::vector<int> axial_dag_set(int t, int side) {
  if (t < 1) fail(errc::invalid_argument, "t must be >= 1");
  if (side % (t + 1) != 0)
    fail(errc::invalid_argument, "t + 1 must divide the side");
  std::vector<int> set;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      if (((i - j) % (t + 1) + (t + 1)) % (t + 1) == 0)
        set.push_back(i * side + j);
  return set;
}

oracle_result oracle_max_code(const graph& g, int q, const solve_caps& caps) {
  if (q < 2) fail(errc::invalid_argument, "alphabet size must be >= 2");
  double bits = g.n * std::log2(static_cast<double>(q));
  if (bits > std::log2(static_cast<double>(caps.oracle_words)) + 1e-9)
    fail(errc::cap_exceeded, "q^n exceeds the oracle cap");
  std::uint64_t total = 1;
  for (int i = 0; i < g.n; ++i) total *= q;
  if (total > 8192)
    fail(errc::cap_exceeded,
         "exhaustive search supports at most 8192 words");

  const int m = static_cast<int>(total);
  auto digit = [&](int w, int pos) {
    for (int i = 0; i < pos; ++i) w /= q;
    return w % q;
  };

  // Conflicts: same neighborhood restriction, different digit at the vertex.
  bit_rows conflict(m);
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  for (int v = 0; v < g.n; ++v) {
    buckets.clear();
    for (int w = 0; w < m; ++w) {
      std::uint64_t key = 0;
      for (int u : g.adj[v]) key = key * q + digit(w, u);
      buckets[key].push_back(w);
    }
    for (const auto& [key, words] : buckets) {
      for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b)
          if (digit(words[a], v) != digit(words[b], v)) {
            conflict.set(words[a], words[b]);
            conflict.set(words[b], words[a]);
          }
    }
  }
  const bit_rows comp = complement_rows(conflict);
  clique_solver solver(comp);
  const auto picked = solver.solve();

  std::vector<std::uint8_t> digits;
  for (int w : picked)
    for (int pos = 0; pos < g.n; ++pos)
      digits.push_back(static_cast<std::uint8_t>(digit(w, pos)));
  oracle_result out;
  out.size = picked.size();
  out.best = make_code(q, 1, g.n, std::move(digits));
  return out;
}

bound_certificate oracle_bound(const graph& g, int q, const solve_caps& caps) {
  auto r = oracle_max_code(g, q, caps);
  bound_certificate cert;
  cert.kind = "oracle";
  cert.is_upper = false;
  cert.raw = r.size;
  const rate_value rv = rate(r.best);
  if (rv.exact) {
    cert.value = rv.value;
  } else {
    // Rounded down; the exact word count in `raw` is the authority.
    cert.value = rational(bigint(static_cast<std::int64_t>(rv.approx * 1e9)),
                          bigint(1000000000));
    cert.flags.push_back("approx_log");
  }
  json words = json::array();
  for (std::size_t i = 0; i < r.best.size(); ++i) {
    std::vector<int> w;
    for (int p = 0; p < r.best.word_width(); ++p) w.push_back(r.best.word(i)[p]);
    words.push_back(json(w));
  }
  cert.witness = json{{"q", q}, {"words", words}};
  return cert;
}

capacity_report make_capacity_report(std::vector<bound_certificate> lower,
                                     std::vector<bound_certificate> upper) {
  if (lower.empty() || upper.empty())
    fail(errc::invalid_argument, "report needs both bound directions");
  capacity_report rep;
  rep.lower = std::move(lower);
  rep.upper = std::move(upper);
  rep.best_lower = rep.lower.front().value;
  for (const auto& c : rep.lower) rep.best_lower = std::max(rep.best_lower, c.value);
  rep.best_upper = rep.upper.front().value;
  for (const auto& c : rep.upper) rep.best_upper = std::min(rep.best_upper, c.value);
  for (const auto& lo : rep.lower)
    for (const auto& up : rep.upper)
      if (lo.value > up.value)
        fail(errc::internal, "lower bound " + rational_str(lo.value) +
                                 " exceeds upper bound " + rational_str(up.value));
  rep.gap = rep.best_upper - rep.best_lower;
  rep.verdict = rep.gap == 0 ? "tight" : "gap";
  return rep;
}

bool revalidate_certificate(const bound_certificate& cert, const graph& g) {
  const bigint n = g.n;
  if (cert.kind == "independence") {
    std::vector<int> set = cert.witness.at("set").get<std::vector<int>>();
    if (bigint(set.size()) != cert.raw) return false;
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        if (g.has_edge(set[i], set[j]) || g.has_edge(set[j], set[i])) return false;
    return cert.value == rational(1) - rational(cert.raw, n);
  }
  if (cert.kind == "mais") {
    std::vector<int> set = cert.witness.at("set").get<std::vector<int>>();
    if (bigint(set.size()) != cert.raw) return false;
    if (!is_dag(g, set).ok) return false;
    return cert.value == rational(1) - rational(cert.raw, n);
  }
  if (cert.kind == "clique_cover") {
    auto parts = cert.witness.at("parts").get<std::vector<std::vector<int>>>();
    if (bigint(parts.size()) != cert.raw) return false;
    std::vector<char> seen(g.n, 0);
    for (const auto& p : parts)
      for (int v : p) {
        if (v < 0 || v >= g.n || seen[v]) return false;
        seen[v] = 1;
      }
    for (int v = 0; v < g.n; ++v)
      if (!seen[v]) return false;
    for (const auto& p : parts)
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
          if (!g.has_edge(p[i], p[j]) || !g.has_edge(p[j], p[i])) return false;
    return cert.value == rational(1) - rational(cert.raw, n);
  }
  if (cert.kind == "matching") {
    auto edges = cert.witness.at("edges").get<std::vector<std::array<int, 2>>>();
    if (bigint(edges.size()) != cert.raw) return false;
    std::vector<char> used(g.n, 0);
    for (const auto& e : edges) {
      if (!g.has_edge(e[0], e[1])) return false;
      if (used[e[0]] || used[e[1]]) return false;
      used[e[0]] = used[e[1]] = 1;
    }
    return cert.value == rational(cert.raw, n);
  }
  if (cert.kind == "anticode") {
    return cert.value == rational(1) - rational(bigint(1), cert.raw);
  }
  if (cert.kind == "diff_avoiding") {
    std::vector<int> set = cert.witness.at("set").get<std::vector<int>>();
    std::vector<int> avoid = cert.witness.at("avoid").get<std::vector<int>>();
    const int side = cert.witness.at("side").get<int>();
    if (bigint(set.size()) != cert.raw) return false;
    for (int v : set)
      if (v < 0 || v >= side) return false;
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        for (int b : avoid)
          if (std::abs(set[i] - set[j]) == b) return false;
    return cert.value == rational(1) - rational(cert.raw, bigint(side));
  }
  if (cert.kind == "oracle") {
    const int q = cert.witness.at("q").get<int>();
    auto words = cert.witness.at("words").get<std::vector<std::vector<int>>>();
    if (bigint(words.size()) != cert.raw) return false;
    std::vector<std::uint8_t> digits;
    for (const auto& w : words)
      for (int d : w) digits.push_back(static_cast<std::uint8_t>(d));
    const code_t c = make_code(q, 1, g.n, std::move(digits));
    if (bigint(c.size()) != cert.raw) return false;
    return verify_storage_code(c, g).ok;
  }
  return false;
}

window_series_t window_series(const recovery_set& r, const std::string& kind,
                              const std::vector<int>& sides,
                              const solve_caps& caps, int window_cap) {
  if (kind != "independence" && kind != "mais")
    fail(errc::invalid_argument, "series kind must be independence or mais");
  window_series_t out;
  for (int side : sides) {
    const auto w = make_window_graph(r, side, window_cap);
    const auto res =
        kind == "independence" ? independence_number(w.g, caps) : mais(w.g, caps);
    window_series_entry e;
    e.side = side;
    e.set_size = res.size;
    e.value = rational(1) - rational(res.size, bigint(w.g.n));
    e.slack = rational(bigint(w.boundary.size()), bigint(w.g.n));
    out.entries.push_back(std::move(e));
  }
  out.limsup_estimate = out.entries.empty() ? rational(0)
                                            : out.entries.front().value;
  for (const auto& e : out.entries)
    out.limsup_estimate = std::max(out.limsup_estimate, e.value);
  return out;
}

}  // namespace stoc
