#include "oracles.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace brute {

namespace {

// Symmetrized adjacency bitmasks.
std::vector<std::uint32_t> masks(const stoc::graph& g) {
  if (g.n > 20) throw std::runtime_error("reference solver limit exceeded");
  std::vector<std::uint32_t> m(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) {
      m[v] |= std::uint32_t{1} << u;
      m[u] |= std::uint32_t{1} << v;
    }
  return m;
}

bool acyclic_subset(const stoc::graph& g, std::uint32_t sub) {
  std::vector<int> indeg(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (!(sub >> v & 1u)) continue;
    for (int u : g.adj[v])
      if (sub >> u & 1u) ++indeg[u];
  }
  std::vector<int> stack;
  for (int v = 0; v < g.n; ++v)
    if ((sub >> v & 1u) && indeg[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int u : g.adj[v])
      if ((sub >> u & 1u) && --indeg[u] == 0) stack.push_back(u);
  }
  return removed == std::popcount(sub);
}

bool colorable(const std::vector<std::uint32_t>& adj, int n, int k) {
  std::vector<int> color(n, -1);
  std::vector<std::uint32_t> with_color(k, 0);
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == n) return true;
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (with_color[c] & adj[v]) continue;
      color[v] = c;
      with_color[c] |= std::uint32_t{1} << v;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
      with_color[c] &= ~(std::uint32_t{1} << v);
    }
    color[v] = -1;
    return false;
  };
  return rec(rec, 0, 0);
}

bool symbols_equal(const stoc::code_t& c, std::size_t x, std::size_t y,
                   int pos) {
  const int L = c.level;
  return std::memcmp(c.word(x) + pos * L, c.word(y) + pos * L, L) == 0;
}

}  // namespace

std::size_t independence(const stoc::graph& g) {
  const auto m = masks(g);
  std::size_t best = 0;
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << g.n); ++sub) {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if ((sub >> v & 1u) && (m[v] & sub)) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(sub));
  }
  return best;
}

std::size_t mais(const stoc::graph& g) {
  if (g.n > 15) throw std::runtime_error("reference solver limit exceeded");
  std::size_t best = 0;
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << g.n); ++sub)
    if (acyclic_subset(g, sub))
      best = std::max<std::size_t>(best, std::popcount(sub));
  return best;
}

std::size_t clique_cover(const stoc::graph& g) {
  if (g.n > 12) throw std::runtime_error("reference solver limit exceeded");
  if (g.n == 0) return 0;
  const auto m = masks(g);
  // Chromatic number of the complement.
  std::vector<std::uint32_t> comp(g.n, 0);
  const std::uint32_t all = (std::uint32_t{1} << g.n) - 1;
  for (int v = 0; v < g.n; ++v)
    comp[v] = all & ~m[v] & ~(std::uint32_t{1} << v);
  for (int k = 1;; ++k)
    if (colorable(comp, g.n, k)) return k;
}

std::size_t matching(const stoc::graph& g) {
  if (g.n > 16) throw std::runtime_error("reference solver limit exceeded");
  const auto m = masks(g);
  std::vector<int> dp(std::size_t{1} << g.n, 0);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << g.n); ++mask) {
    const int v = std::countr_zero(mask);
    int best = dp[mask & (mask - 1)];
    std::uint32_t cand = m[v] & mask;
    while (cand) {
      const int u = std::countr_zero(cand);
      cand &= cand - 1;
      best = std::max(best, 1 + dp[mask & ~(std::uint32_t{1} << v) &
                                   ~(std::uint32_t{1} << u)]);
    }
    dp[mask] = best;
  }
  return dp[(std::size_t{1} << g.n) - 1];
}

bool storage_check(const stoc::code_t& c, const stoc::graph& g,
                   const std::vector<int>& verts) {
  std::vector<int> scope = verts;
  if (scope.empty())
    for (int v = 0; v < g.n; ++v) scope.push_back(v);
  const std::size_t w = c.size();
  for (std::size_t x = 0; x < w; ++x)
    for (std::size_t y = x + 1; y < w; ++y)
      for (int v : scope) {
        bool agree = true;
        for (int u : g.adj[v])
          if (!symbols_equal(c, x, y, u)) {
            agree = false;
            break;
          }
        if (agree && !symbols_equal(c, x, y, v)) return false;
      }
  return true;
}

std::size_t max_code(const stoc::graph& g, int q) {
  std::size_t total = 1;
  for (int i = 0; i < g.n; ++i) {
    total *= static_cast<std::size_t>(q);
    if (total > 20) throw std::runtime_error("word space limit exceeded");
  }
  std::vector<std::vector<std::uint8_t>> words;
  std::vector<std::uint8_t> cur(g.n, 0);
  for (std::size_t i = 0; i < total; ++i) {
    words.push_back(cur);
    for (int p = g.n - 1; p >= 0; --p) {
      if (++cur[p] < q) break;
      cur[p] = 0;
    }
  }
  // Conflict pairs can never share a storage code.
  auto conflict = [&](const std::vector<std::uint8_t>& a,
                      const std::vector<std::uint8_t>& b) {
    for (int v = 0; v < g.n; ++v) {
      bool agree = true;
      for (int u : g.adj[v])
        if (a[u] != b[u]) {
          agree = false;
          break;
        }
      if (agree && a[v] != b[v]) return true;
    }
    return false;
  };
  std::vector<std::array<int, 2>> edges;
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j)
      if (conflict(words[i], words[j]))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  const stoc::graph cg =
      stoc::graph_from_edges(static_cast<int>(total), edges, false);
  return independence(cg);
}

}  // namespace brute
