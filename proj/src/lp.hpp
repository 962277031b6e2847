#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "interleave.hpp"
#include "rational.hpp"

namespace stoc {

// Vertices whose whole neighborhood lies inside `a`; the alternate mode
// additionally keeps `a` itself in the result.
std::vector<int> closure(const graph& g, const std::vector<int>& a,
                         bool include_a = false);

// Two-part covering piece.  Part 0 is s1 colored c1, part 1 is s2 colored
// c2.  Trivial pieces are ({v}, {}) with both colors equal and weight 2;
// generated pieces take s1 = cl(A) u cl(B), s2 = cl(A) n cl(B) and weight
// |A| + |B|.
struct gadget {
  std::vector<int> s1, s2;
  int c1 = 0, c2 = 0;
  bigint weight;
  bool trivial = false;
  std::vector<int> gen_a, gen_b;
};

struct lp_term {
  int var = 0;
  rational coeff;
};

enum class lp_rel { ge, le, eq };

struct lp_row {
  std::vector<lp_term> terms;
  lp_rel rel = lp_rel::ge;
  rational rhs;
  std::string tag;
};

// Minimization over nonnegative variables.
struct lp_instance {
  int nvars = 0;
  std::vector<rational> objective;
  std::vector<lp_row> rows;
  std::vector<std::string> var_names;
};

struct lp_solution {
  bool feasible = false;
  rational objective;
  std::vector<rational> x;
  std::size_t pivots = 0;
};

// All trivial pieces plus every generated piece with support sizes up to
// max_support, deduplicated on (s1, s2, c1, c2) keeping the least weight.
std::vector<gadget> enumerate_gadgets(const graph& g, int tau, int max_support,
                                      bool closure_includes_a = false);

// One variable per trivial piece, two tied variables otherwise.  Cover rows
// run over (edge, color) pairs and count both endpoints; box rows cap every
// variable at 1.
lp_instance build_lp(const graph& g, const std::vector<gadget>& gadgets,
                     int tau);

// Exact two-phase simplex with Bland pivoting.  Equality-tied variable
// pairs are merged before solving and split again afterwards.
lp_solution solve_lp(const lp_instance& lp);

// Exhaustive vertex enumeration for small instances; the result matches
// solve_lp whenever both succeed.
lp_solution enumerate_lp_min(const lp_instance& lp, int max_vars = 12,
                             std::uint64_t budget = 2000000);

std::string lp_dump(const lp_instance& lp);

struct lp_report {
  rational value;        // relaxed optimum over n * tau
  rational grid_value;   // least grid point at or above the optimum
  rational total;        // optimum of the unscaled objective
  int tau = 0;
  int max_support = 0;
  bool closure_includes_a = false;
  std::size_t gadget_count = 0;
  int var_count = 0;
  std::vector<std::string> flags;
  nlohmann::json support;  // nonzero variables with their pieces
};

lp_report lp_capacity_bound(const graph& g, int tau, int max_support,
                            bool closure_includes_a = false);

// Piece on the product graph: both parts lifted fiberwise, weight scaled
// by s.
gadget lift_gadget(const interleaved_graph_t& ig, const gadget& g);

// Literal evaluation of the cover rows for a fixed fractional assignment.
struct cover_check {
  bool feasible = false;
  rational objective;  // over n * tau of the checked graph
};

cover_check validate_cover(const graph& g, const std::vector<gadget>& gadgets,
                           const std::vector<rational>& chi, int tau);

}  // namespace stoc
