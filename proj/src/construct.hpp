#pragma once

#include <array>
#include <string>
#include <vector>

#include "code.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "sampling.hpp"

namespace stoc {

// Disjoint cell groups inside an [n] or [n]^2 window.  `covers` states which
// part of the window the tiles must jointly cover.
enum class tiling_region { all, interior };

struct tiling_t {
  int dim = 2;
  int side = 0;
  std::vector<std::vector<std::array<int, 2>>> tiles;
  tiling_region covers = tiling_region::interior;
};

enum class lattice_kind { l1, linf, rect };

// Complete translates of the canonical tile that fit inside the window.
// l1 uses the maximum-anticode tile for the given diameter, linf the
// (r+1) x (r+1) box, rect the (r+1) x (b+1) box given as {r, b}.
tiling_t lattice_tiling(lattice_kind kind, const std::vector<int>& params,
                        int side);

// Tiles must be cliques of w.g, pairwise disjoint, covering the stated
// region.  Uniform tile size is required.
struct tiling_check {
  bool ok = true;
  std::string reason;
};

tiling_check validate_tiling(const tiling_t& t, const window_graph_t& w);

struct built_code {
  code_t code;
  rational declared_rate;  // closed form the construction promises
};

// One parity constraint per part: symbols in a part sum to 0 mod q.
// Rate 1 - #parts / n.
built_code clique_partition_code(const graph& g,
                                 const std::vector<std::vector<int>>& parts,
                                 int q, std::size_t word_cap = code_word_cap);

// Vertex symbol lists its incident edge values in global edge order, padded
// with zeros to the maximum degree.  Rate |E| / (n * maxdeg).
built_code edge_to_vertex_code(const graph& g, int q,
                               std::size_t word_cap = code_word_cap);

// Matched endpoints carry equal symbols, unmatched vertices are pinned to 0.
// Rate |matching| / n.
built_code matching_code(const graph& g,
                         const std::vector<std::array<int, 2>>& matching,
                         int q, std::size_t word_cap = code_word_cap);

// Window code for the two-offset recovery set {-l, +r} on [n].  Positions
// split into runs of (l+r)/gcd(l,r) equal symbols inside each residue class
// mod gcd(l,r); run minima {k(l+r) + [gcd]} carry the information.
// Rate gcd(l,r) / (l+r), and every window position recovers.
built_code gcd_scheme_code(int l, int r, int n, int q,
                           std::size_t word_cap = code_word_cap);

// Parity per tile, cells outside every tile pinned to 0.  Declared rate
// 1 - 1/|tile| holds on the covered region.  Sample mode draws free digits
// uniformly instead of enumerating every assignment.
built_code tiling_code(const window_graph_t& w, const tiling_t& t, int q,
                       const build_mode& mode = {},
                       std::size_t word_cap = code_word_cap);

// Rows of [side]^2 carry independent words of the one-dimensional seed.
// Declared rate equals the seed rate.  Sample mode draws row tuples.
built_code stacked_code(const code_t& seed, int side,
                        const build_mode& mode = {},
                        std::size_t word_cap = code_word_cap);

}  // namespace stoc
