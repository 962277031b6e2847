#include "construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "design.hpp"
#include "error.hpp"

namespace stoc {

namespace {

// All assignments of `dim` free digits, emitted through `emit(assign)`.
template <typename F>
void for_each_assignment(int q, std::size_t dim, F&& emit) {
  std::vector<int> assign(dim, 0);
  while (true) {
    emit(assign);
    std::size_t pos = 0;
    while (pos < dim && ++assign[pos] == q) assign[pos++] = 0;
    if (pos == dim) break;
  }
}

void check_free_count(int q, std::size_t dim, std::size_t word_cap) {
  if (ipow(q, static_cast<unsigned>(dim)) > word_cap)
    fail(errc::cap_exceeded, "construction emits more words than the cap");
}

}  // namespace

built_code clique_partition_code(const graph& g,
                                 const std::vector<std::vector<int>>& parts,
                                 int q, std::size_t word_cap) {
  if (q < 2) fail(errc::invalid_argument, "alphabet size must be >= 2");
  std::vector<int> owner(g.n, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) fail(errc::invalid_argument, "empty part");
    for (int v : parts[p]) {
      if (v < 0 || v >= g.n) fail(errc::invalid_argument, "vertex out of range");
      if (owner[v] != -1) fail(errc::invalid_argument, "parts overlap");
      owner[v] = static_cast<int>(p);
    }
    for (std::size_t i = 0; i < parts[p].size(); ++i)
      for (std::size_t j = i + 1; j < parts[p].size(); ++j)
        if (!g.has_edge(parts[p][i], parts[p][j]) ||
            !g.has_edge(parts[p][j], parts[p][i]))
          fail(errc::invalid_argument,
               "part " + std::to_string(p) + " is not a clique");
  }
  for (int v = 0; v < g.n; ++v)
    if (owner[v] == -1) fail(errc::invalid_argument, "parts miss a vertex");

  // Free digits: all but the last vertex of each part.
  std::vector<int> free_pos;
  std::vector<int> closer;
  for (const auto& part : parts) {
    auto sorted = part;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      free_pos.push_back(sorted[i]);
    closer.push_back(sorted.back());
  }
  check_free_count(q, free_pos.size(), word_cap);

  std::vector<std::vector<int>> part_sorted(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    part_sorted[p] = parts[p];
    std::sort(part_sorted[p].begin(), part_sorted[p].end());
  }

  std::vector<std::uint8_t> digits;
  std::vector<int> word(g.n, 0);
  for_each_assignment(q, free_pos.size(), [&](const std::vector<int>& assign) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < free_pos.size(); ++i)
      word[free_pos[i]] = assign[i];
    for (std::size_t p = 0; p < parts.size(); ++p) {
      int sum = 0;
      for (std::size_t i = 0; i + 1 < part_sorted[p].size(); ++i)
        sum += word[part_sorted[p][i]];
      word[closer[p]] = (q - sum % q) % q;
    }
    for (int x : word) digits.push_back(static_cast<std::uint8_t>(x));
  });
  built_code out{make_code(q, 1, g.n, std::move(digits), word_cap),
                 rational(1) - rational(bigint(parts.size()), bigint(g.n))};
  return out;
}

built_code edge_to_vertex_code(const graph& g, int q, std::size_t word_cap) {
  if (q < 2) fail(errc::invalid_argument, "alphabet size must be >= 2");
  if (g.directed) fail(errc::invalid_argument, "needs an undirected graph");
  const auto edges = edge_list(g);
  if (edges.empty()) fail(errc::invalid_argument, "graph has no edges");
  std::size_t maxdeg = 0;
  for (const auto& row : g.adj) maxdeg = std::max(maxdeg, row.size());
  check_free_count(q, edges.size(), word_cap);

  // incident[v] = indices into the global edge list, ascending.
  std::vector<std::vector<int>> incident(g.n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e][0]].push_back(static_cast<int>(e));
    incident[edges[e][1]].push_back(static_cast<int>(e));
  }

  const int level = static_cast<int>(maxdeg);
  std::vector<std::uint8_t> digits;
  for_each_assignment(q, edges.size(), [&](const std::vector<int>& assign) {
    for (int v = 0; v < g.n; ++v) {
      for (int e : incident[v]) digits.push_back(static_cast<std::uint8_t>(assign[e]));
      for (std::size_t pad = incident[v].size(); pad < maxdeg; ++pad)
        digits.push_back(0);
    }
  });
  built_code out{
      make_code(q, level, g.n, std::move(digits), word_cap),
      rational(bigint(edges.size()), bigint(g.n) * static_cast<int>(maxdeg))};
  return out;
}

built_code matching_code(const graph& g,
                         const std::vector<std::array<int, 2>>& matching,
                         int q, std::size_t word_cap) {
  if (q < 2) fail(errc::invalid_argument, "alphabet size must be >= 2");
  std::vector<char> used(g.n, 0);
  for (const auto& e : matching) {
    const int u = e[0], v = e[1];
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
      fail(errc::invalid_argument, "bad matching edge");
    if (!g.has_edge(u, v) || !g.has_edge(v, u))
      fail(errc::invalid_argument, "matching edge must run both ways");
    if (used[u] || used[v]) fail(errc::invalid_argument, "matching reuses a vertex");
    used[u] = used[v] = 1;
  }
  check_free_count(q, matching.size(), word_cap);

  std::vector<std::uint8_t> digits;
  std::vector<int> word(g.n, 0);
  for_each_assignment(q, matching.size(), [&](const std::vector<int>& assign) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < matching.size(); ++i) {
      word[matching[i][0]] = assign[i];
      word[matching[i][1]] = assign[i];
    }
    for (int x : word) digits.push_back(static_cast<std::uint8_t>(x));
  });
  built_code out{make_code(q, 1, g.n, std::move(digits), word_cap),
                 rational(bigint(matching.size()), bigint(g.n))};
  return out;
}

built_code gcd_scheme_code(int l, int r, int n, int q, std::size_t word_cap) {
  if (l < 1 || r < 1) fail(errc::invalid_argument, "needs l,r >= 1");
  if (!is_prime(q)) fail(errc::invalid_argument, "needs prime q");
  const int m = l + r;
  if (n < m || n % m != 0)
    fail(errc::invalid_argument, "period l + r must divide n");
  const int d = std::gcd(l, r);
  const int run = m / d;  // positions per repeated run inside a class

  // free_of[v] = index of the run whose symbol position v copies.
  std::vector<int> free_of(n);
  int runs = 0;
  for (int c = 0; c < d; ++c) {
    int within = 0;
    int current = -1;
    for (int v = c; v < n; v += d) {
      if (within == 0) current = runs++;
      free_of[v] = current;
      within = (within + 1) % run;
    }
  }
  check_free_count(q, runs, word_cap);

  std::vector<std::uint8_t> digits;
  for_each_assignment(q, runs, [&](const std::vector<int>& assign) {
    for (int v = 0; v < n; ++v)
      digits.push_back(static_cast<std::uint8_t>(assign[free_of[v]]));
  });
  built_code out{make_code(q, 1, n, std::move(digits), word_cap),
                 rational(bigint(d), bigint(m))};
  return out;
}

tiling_t lattice_tiling(lattice_kind kind, const std::vector<int>& params,
                        int side) {
  if (side < 1) fail(errc::invalid_argument, "window side must be >= 1");
  tiling_t t;
  t.dim = 2;
  t.side = side;
  t.covers = tiling_region::interior;

  // Base tile cells and the lattice translating it.
  std::vector<std::array<int, 2>> cells;
  std::array<int, 2> gen1{}, gen2{};
  if (kind == lattice_kind::linf) {
    if (params.size() != 1 || params[0] < 1)
      fail(errc::invalid_argument, "linf tiling takes radius >= 1");
    const int w = params[0] + 1;
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) cells.push_back({i, j});
    gen1 = {w, 0};
    gen2 = {0, w};
  } else if (kind == lattice_kind::rect) {
    if (params.size() != 2 || params[0] < 0 || params[1] < 0 ||
        (params[0] == 0 && params[1] == 0))
      fail(errc::invalid_argument, "rect tiling takes {r, b} with r + b >= 1");
    const int w = params[0] + 1, h = params[1] + 1;
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < h; ++j) cells.push_back({i, j});
    gen1 = {w, 0};
    gen2 = {0, h};
  } else {
    if (params.size() != 1 || params[0] < 1)
      fail(errc::invalid_argument, "l1 tiling takes diameter >= 1");
    const int r = params[0];
    if (r % 2 == 0) {
      const int k = r / 2;
      for (int i = -k; i <= k; ++i)
        for (int j = -k; j <= k; ++j)
          if (std::abs(i) + std::abs(j) <= k) cells.push_back({i, j});
      gen1 = {k, k + 1};
      gen2 = {k + 1, -k};
    } else {
      const int k = (r - 1) / 2;
      // Cells within distance k of either (0,0) or (1,0).
      for (int i = -k; i <= k + 1; ++i)
        for (int j = -k; j <= k; ++j) {
          const int d0 = std::abs(i) + std::abs(j);
          const int d1 = std::abs(i - 1) + std::abs(j);
          if (std::min(d0, d1) <= k) cells.push_back({i, j});
        }
      gen1 = {k + 1, k + 1};
      gen2 = {k + 1, -(k + 1)};
    }
  }

  // Range of lattice coefficients wide enough to reach every window cell.
  const int span = 2 * side;
  std::set<std::vector<std::array<int, 2>>> seen;
  for (int a = -span; a <= span; ++a)
    for (int b = -span; b <= span; ++b) {
      const int di = a * gen1[0] + b * gen2[0];
      const int dj = a * gen1[1] + b * gen2[1];
      std::vector<std::array<int, 2>> tile;
      bool inside = true;
      for (const auto& c : cells) {
        const int i = c[0] + di, j = c[1] + dj;
        if (i < 0 || i >= side || j < 0 || j >= side) {
          inside = false;
          break;
        }
        tile.push_back({i, j});
      }
      if (!inside) continue;
      std::sort(tile.begin(), tile.end());
      seen.insert(std::move(tile));
    }
  t.tiles.assign(seen.begin(), seen.end());
  if (t.tiles.empty()) fail(errc::invalid_argument, "no tile fits the window");
  std::size_t covered = 0;
  for (const auto& tile : t.tiles) covered += tile.size();
  if (covered == static_cast<std::size_t>(side) * side)
    t.covers = tiling_region::all;
  return t;
}

tiling_check validate_tiling(const tiling_t& t, const window_graph_t& w) {
  tiling_check out;
  auto bad = [&](std::string reason) {
    out.ok = false;
    out.reason = std::move(reason);
    return out;
  };
  if (t.dim != w.r.dim || t.side != w.side)
    return bad("tiling and window shapes differ");
  auto cell_id = [&](const std::array<int, 2>& c) {
    return t.dim == 1 ? c[0] : c[0] * t.side + c[1];
  };
  std::vector<char> covered(w.g.n, 0);
  std::size_t tile_size = t.tiles.empty() ? 0 : t.tiles.front().size();
  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    const auto& tile = t.tiles[ti];
    if (tile.empty()) return bad("tile " + std::to_string(ti) + " is empty");
    if (tile.size() != tile_size)
      return bad("tile sizes are not uniform");
    for (const auto& c : tile) {
      if (c[0] < 0 || c[0] >= t.side || (t.dim == 2 && (c[1] < 0 || c[1] >= t.side)) ||
          (t.dim == 1 && c[1] != 0))
        return bad("tile " + std::to_string(ti) + " leaves the window");
      const int v = cell_id(c);
      if (covered[v]) return bad("tiles overlap at cell " + std::to_string(v));
      covered[v] = 1;
    }
    for (std::size_t i = 0; i < tile.size(); ++i)
      for (std::size_t j = i + 1; j < tile.size(); ++j) {
        const int u = cell_id(tile[i]), v = cell_id(tile[j]);
        if (!w.g.has_edge(u, v) || !w.g.has_edge(v, u))
          return bad("tile " + std::to_string(ti) + " is not a clique");
      }
  }
  const auto& must = t.covers == tiling_region::all
                         ? [&] {
                             std::vector<int> all(w.g.n);
                             std::iota(all.begin(), all.end(), 0);
                             return all;
                           }()
                         : w.interior;
  for (int v : must)
    if (!covered[v]) return bad("region cell " + std::to_string(v) + " uncovered");
  return out;
}

built_code tiling_code(const window_graph_t& w, const tiling_t& t, int q,
                       const build_mode& mode, std::size_t word_cap) {
  if (q < 2) fail(errc::invalid_argument, "alphabet size must be >= 2");
  const auto check = validate_tiling(t, w);
  if (!check.ok) fail(errc::invalid_argument, "bad tiling: " + check.reason);

  auto cell_id = [&](const std::array<int, 2>& c) {
    return t.dim == 1 ? c[0] : c[0] * t.side + c[1];
  };
  std::vector<std::vector<int>> parts;
  for (const auto& tile : t.tiles) {
    std::vector<int> part;
    for (const auto& c : tile) part.push_back(cell_id(c));
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }

  std::vector<int> free_pos;
  for (const auto& p : parts)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) free_pos.push_back(p[i]);

  std::vector<std::uint8_t> digits;
  std::vector<int> word(w.g.n, 0);
  auto emit_word = [&](const std::vector<int>& assign) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < free_pos.size(); ++i)
      word[free_pos[i]] = assign[i];
    for (const auto& p : parts) {
      int sum = 0;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) sum += word[p[i]];
      word[p.back()] = (q - sum % q) % q;
    }
    for (int x : word) digits.push_back(static_cast<std::uint8_t>(x));
  };

  if (mode.kind == build_mode::full) {
    check_free_count(q, free_pos.size(), word_cap);
    for_each_assignment(q, free_pos.size(), emit_word);
  } else {
    if (mode.count == 0 || mode.count > word_cap)
      fail(errc::invalid_argument, "bad sample count");
    splitmix64 rng(mode.seed);
    std::vector<int> assign(free_pos.size());
    for (std::size_t i = 0; i < mode.count; ++i) {
      for (auto& d : assign) d = static_cast<int>(rng.below(q));
      emit_word(assign);
    }
  }
  const bigint tile_size = t.tiles.front().size();
  built_code out{make_code(q, 1, w.g.n, std::move(digits), word_cap),
                 rational(1) - rational(bigint(1), tile_size)};
  return out;
}

built_code stacked_code(const code_t& seed, int side, const build_mode& mode,
                        std::size_t word_cap) {
  if (seed.n != side)
    fail(errc::invalid_argument, "seed length must equal the window side");
  const std::size_t rows = static_cast<std::size_t>(side);
  const std::size_t count = seed.size();
  const int cell_width = seed.level;
  const int width = side * side * cell_width;

  std::vector<std::uint8_t> digits;
  auto emit_tuple = [&](const std::vector<std::size_t>& rows_choice) {
    // Row j of the grid carries seed word rows_choice[j]; cell (i, j) sits
    // at index i * side + j.
    const std::size_t base = digits.size();
    digits.resize(base + width);
    for (std::size_t j = 0; j < rows; ++j) {
      const std::uint8_t* w = seed.word(rows_choice[j]);
      for (int i = 0; i < side; ++i)
        for (int d = 0; d < cell_width; ++d)
          digits[base + (static_cast<std::size_t>(i) * side + j) * cell_width + d] =
              w[i * cell_width + d];
    }
  };

  if (mode.kind == build_mode::full) {
    bigint total = 1;
    for (std::size_t j = 0; j < rows; ++j) total *= count;
    if (total > word_cap)
      fail(errc::cap_exceeded, "row tuple count exceeds the word cap");
    std::vector<std::size_t> choice(rows, 0);
    while (true) {
      emit_tuple(choice);
      std::size_t pos = 0;
      while (pos < rows && ++choice[pos] == count) choice[pos++] = 0;
      if (pos == rows) break;
    }
  } else {
    if (mode.count == 0 || mode.count > word_cap)
      fail(errc::invalid_argument, "bad sample count");
    splitmix64 rng(mode.seed);
    std::vector<std::size_t> choice(rows);
    for (std::size_t i = 0; i < mode.count; ++i) {
      for (std::size_t j = 0; j < rows; ++j)
        choice[j] = static_cast<std::size_t>(rng.below(count));
      emit_tuple(choice);
    }
  }

  const rate_value seed_rate = rate(seed);
  if (!seed_rate.exact)
    fail(errc::invalid_argument, "seed size must be a power of q");
  built_code out{make_code(seed.q, cell_width, side * side, std::move(digits),
                           word_cap),
                 seed_rate.value};
  return out;
}

}  // namespace stoc
