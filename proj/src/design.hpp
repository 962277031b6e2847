#pragma once

#include <array>
#include <string>
#include <vector>

namespace stoc {

// Resolvable 2-(v, k, 1) design on points 1..v.  Every class partitions the
// point set into v/k blocks of size k; every pair of points shares exactly
// one block overall.  Class count is (v - 1) / (k - 1).
struct resolvable_design {
  int v = 0;
  int k = 0;
  std::vector<std::vector<std::vector<int>>> classes;
};

// k x s matrices over symbols 1..ks, k <= s.  For every ordered pair of
// distinct matrices, each column of the first shares exactly one symbol with
// exactly k columns of the second.
struct partition_family {
  int k = 0;
  int s = 0;
  std::vector<std::vector<std::vector<int>>> matrices;
};

struct design_check {
  bool ok = true;
  std::string reason;
};

struct family_check {
  bool ok = true;
  std::string reason;
  // (matrix a, matrix b, column of a, column of b); -1 when the slot does
  // not identify a single offender.
  std::array<int, 4> witness{-1, -1, -1, -1};
};

// Three 2 x 3 matrices forming an orthogonal partition family on 6 symbols.
partition_family builtin_family_2x3();

// Seven 3 x 5 matrices forming an orthogonal partition family on 15 symbols.
partition_family builtin_family_3x5();

// Lines of the affine plane over F_q grouped by slope, verticals last.
// Prime q only.
resolvable_design affine_design(int q);

design_check verify_design(const resolvable_design& d);

// One matrix per parallel class; columns are blocks sorted ascending,
// ordered by first element.
partition_family family_from_design(const resolvable_design& d);

family_check verify_family(const partition_family& f);

bool is_prime(int q);

}  // namespace stoc
