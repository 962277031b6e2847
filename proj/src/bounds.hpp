#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "code.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace stoc {

using json = nlohmann::json;

struct solve_caps {
  int independence = 64;
  int mais = 24;
  int cover = 24;
  int b_avoiding_exact = 64;
  std::uint64_t oracle_words = std::uint64_t{1} << 16;
};

// Capacity bound with a witness sufficient to recheck it.  `raw` is the
// combinatorial quantity behind the bound (set size, part count, ...).
struct bound_certificate {
  std::string kind;
  bool is_upper = true;
  rational value;
  bigint raw;
  json witness;
  std::vector<std::string> flags;
};

struct set_result {
  bigint size;
  std::vector<int> set;
};

// Maximum independent set; undirected view of the adjacency.
set_result independence_number(const graph& g, const solve_caps& caps = {});

// Maximum vertex set inducing a directed acyclic subgraph.  Graphs with
// fully symmetric adjacency reduce to the independent set search.
set_result mais(const graph& g, const solve_caps& caps = {});

struct cover_result {
  bigint count;
  std::vector<std::vector<int>> parts;
};

// Minimum number of cliques covering every vertex.
cover_result clique_cover_number(const graph& g, const solve_caps& caps = {});

std::vector<std::array<int, 2>> max_matching(const graph& g);

// Largest set with pairwise graph distance at most `diameter`.
set_result anticode_max(const graph& g, int diameter,
                        const solve_caps& caps = {});

// Largest set of plane cells with pairwise distance at most `diameter`,
// searched inside the ball of that radius around the origin.
enum class plane_metric { l1, linf };
struct cell_set_result {
  bigint size;
  std::vector<std::array<int, 2>> cells;
};
cell_set_result brute_anticode(plane_metric metric, int diameter);

// Subsets of [side] avoiding every difference in `avoid`.
set_result max_b_avoiding(const std::vector<int>& avoid, int side,
                          const solve_caps& caps = {});

// Certificates ready for a capacity report.
bound_certificate independence_bound(const graph& g, const solve_caps& caps = {});
bound_certificate mais_bound(const graph& g, const solve_caps& caps = {});
bound_certificate clique_cover_bound(const graph& g, const solve_caps& caps = {});
bound_certificate matching_bound(const graph& g);

// Word-count product bound: |code| * |anticode| <= vertex count.  The
// capacity form needs a tiling by copies of the anticode.
bigint anticode_size_bound(const bigint& vertices, const bigint& anticode);
bound_certificate code_anticode_bound(const bigint& vertices,
                                      const bigint& anticode,
                                      bool tiling_exists);

// One-dimensional recovery set split into left and right reach; the larger
// avoiding set gives the bound 1 - a / side.
bound_certificate diff_avoiding_bound(const recovery_set& r, int side,
                                      const solve_caps& caps = {});

// Diagonal stripe set {(x, y) : (x - y) mod (t + 1) == 0}; requires
// (t + 1) | side.
std::vector<int> axial_dag_set(int t, int side);

// Exhaustive search over all q^n words for the largest storage code.
struct oracle_result {
  bigint size;
  code_t best;
};
oracle_result oracle_max_code(const graph& g, int q,
                              const solve_caps& caps = {});
bound_certificate oracle_bound(const graph& g, int q,
                               const solve_caps& caps = {});

struct capacity_report {
  std::vector<bound_certificate> lower;
  std::vector<bound_certificate> upper;
  std::string verdict;  // "tight" or "gap"
  rational gap;
  rational best_lower;
  rational best_upper;
};

// Fails hard when some lower bound exceeds some upper bound.
capacity_report make_capacity_report(std::vector<bound_certificate> lower,
                                     std::vector<bound_certificate> upper);

bool revalidate_certificate(const bound_certificate& cert, const graph& g);

struct window_series_entry {
  int side = 0;
  bigint set_size;
  rational value;
  rational slack;  // boundary cells over window cells
};

struct window_series_t {
  std::vector<window_series_entry> entries;
  rational limsup_estimate;  // max over the computed tail, an estimate only
};

// Upper bound series c_n over growing windows, kind "independence" or
// "mais".
window_series_t window_series(const recovery_set& r,
                              const std::string& kind,
                              const std::vector<int>& sides,
                              const solve_caps& caps = {},
                              int window_cap = 0);

}  // namespace stoc
