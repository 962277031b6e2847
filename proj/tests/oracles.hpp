#pragma once

#include <cstddef>

#include "code.hpp"
#include "graph.hpp"

// Exhaustive reference solvers, written independently of the library
// algorithms.  Exponential; callers keep the instances tiny.
namespace brute {

// n <= 20.
std::size_t independence(const stoc::graph& g);

// n <= 15.  Undirected edges count as two-cycles.
std::size_t mais(const stoc::graph& g);

// n <= 12.
std::size_t clique_cover(const stoc::graph& g);

// n <= 16.
std::size_t matching(const stoc::graph& g);

// Pairwise extensional check over the stored out-neighborhoods.  An empty
// vertex list checks every vertex.
bool storage_check(const stoc::code_t& c, const stoc::graph& g,
                   const std::vector<int>& verts = {});

// Largest storage code over all q^n level-1 words; q^n <= 20.
std::size_t max_code(const stoc::graph& g, int q);

}  // namespace brute
