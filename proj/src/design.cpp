#include "design.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"

namespace stoc {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

partition_family builtin_family_2x3() {
  partition_family f;
  f.k = 2;
  f.s = 3;
  f.matrices = {
      {{1, 3, 5}, {2, 4, 6}},
      {{1, 2, 6}, {5, 3, 4}},
      {{1, 5, 6}, {4, 2, 3}},
  };
  return f;
}

partition_family builtin_family_3x5() {
  partition_family f;
  f.k = 3;
  f.s = 5;
  f.matrices = {
      {{1, 4, 5, 6, 7}, {2, 10, 8, 9, 11}, {3, 14, 13, 15, 12}},
      {{1, 2, 3, 4, 6}, {8, 5, 13, 11, 10}, {9, 7, 14, 15, 12}},
      {{1, 2, 3, 4, 7}, {10, 13, 5, 8, 9}, {11, 15, 6, 12, 14}},
      {{1, 2, 3, 6, 7}, {4, 12, 9, 11, 8}, {5, 14, 10, 13, 15}},
      {{1, 2, 3, 4, 5}, {6, 8, 12, 9, 11}, {7, 10, 15, 13, 14}},
      {{1, 2, 3, 5, 6}, {12, 9, 4, 10, 8}, {13, 11, 7, 15, 14}},
      {{1, 2, 3, 5, 7}, {14, 4, 8, 9, 10}, {15, 6, 11, 12, 13}},
  };
  return f;
}

namespace {

std::vector<std::vector<int>> canonical_class(
    std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

resolvable_design affine_design(int q) {
  if (!is_prime(q)) fail(errc::invalid_argument, "affine design needs prime q");
  resolvable_design d;
  d.v = q * q;
  d.k = q;
  auto point = [&](int x, int y) { return x * q + y + 1; };
  for (int slope = 0; slope < q; ++slope) {
    std::vector<std::vector<int>> blocks;
    for (int c = 0; c < q; ++c) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(point(x, (slope * x + c) % q));
      blocks.push_back(std::move(line));
    }
    d.classes.push_back(canonical_class(std::move(blocks)));
  }
  std::vector<std::vector<int>> verticals;
  for (int c = 0; c < q; ++c) {
    std::vector<int> line;
    for (int y = 0; y < q; ++y) line.push_back(point(c, y));
    verticals.push_back(std::move(line));
  }
  d.classes.push_back(canonical_class(std::move(verticals)));
  return d;
}

design_check verify_design(const resolvable_design& d) {
  design_check out;
  auto bad = [&](std::string reason) {
    out.ok = false;
    out.reason = std::move(reason);
    return out;
  };
  if (d.v < 2 || d.k < 2) return bad("needs v >= 2 and k >= 2");
  if (d.v % d.k != 0) return bad("k does not divide v");
  if ((d.v - 1) % (d.k - 1) != 0) return bad("k - 1 does not divide v - 1");
  const int want_classes = (d.v - 1) / (d.k - 1);
  if (static_cast<int>(d.classes.size()) != want_classes)
    return bad("class count " + std::to_string(d.classes.size()) +
               ", expected " + std::to_string(want_classes));
  for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
    const auto& blocks = d.classes[ci];
    if (static_cast<int>(blocks.size()) != d.v / d.k)
      return bad("class " + std::to_string(ci) + " has " +
                 std::to_string(blocks.size()) + " blocks, expected " +
                 std::to_string(d.v / d.k));
    std::vector<char> seen(d.v + 1, 0);
    for (const auto& b : blocks) {
      if (static_cast<int>(b.size()) != d.k)
        return bad("class " + std::to_string(ci) + " has a block of size " +
                   std::to_string(b.size()));
      for (int x : b) {
        if (x < 1 || x > d.v)
          return bad("point " + std::to_string(x) + " outside 1.." +
                     std::to_string(d.v));
        if (seen[x]++)
          return bad("class " + std::to_string(ci) + " repeats point " +
                     std::to_string(x));
      }
    }
  }
  std::map<std::pair<int, int>, int> pair_count;
  for (const auto& blocks : d.classes)
    for (const auto& b : blocks)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
          ++pair_count[std::minmax(b[i], b[j])];
  for (int x = 1; x <= d.v; ++x)
    for (int y = x + 1; y <= d.v; ++y) {
      const int c = pair_count.count({x, y}) ? pair_count[{x, y}] : 0;
      if (c != 1)
        return bad("pair (" + std::to_string(x) + "," + std::to_string(y) +
                   ") covered " + std::to_string(c) + " times");
    }
  return out;
}

partition_family family_from_design(const resolvable_design& d) {
  const auto check = verify_design(d);
  if (!check.ok) fail(errc::invalid_argument, "not a resolvable design: " + check.reason);
  partition_family f;
  f.k = d.k;
  f.s = d.v / d.k;
  if (f.k > f.s)
    fail(errc::invalid_argument, "family shape needs k <= v/k");
  for (const auto& cls : d.classes) {
    auto blocks = canonical_class(cls);
    std::vector<std::vector<int>> m(f.k, std::vector<int>(f.s));
    for (int col = 0; col < f.s; ++col)
      for (int row = 0; row < f.k; ++row) m[row][col] = blocks[col][row];
    f.matrices.push_back(std::move(m));
  }
  return f;
}

family_check verify_family(const partition_family& f) {
  family_check out;
  auto bad = [&](std::string reason, std::array<int, 4> w) {
    out.ok = false;
    out.reason = std::move(reason);
    out.witness = w;
    return out;
  };
  if (f.k < 1 || f.s < 1 || f.k > f.s)
    return bad("shape needs 1 <= k <= s", {-1, -1, -1, -1});
  if (f.matrices.size() < 2)
    return bad("needs at least two matrices", {-1, -1, -1, -1});
  const int symbols = f.k * f.s;
  for (std::size_t mi = 0; mi < f.matrices.size(); ++mi) {
    const auto& m = f.matrices[mi];
    if (static_cast<int>(m.size()) != f.k)
      return bad("matrix " + std::to_string(mi) + " row count",
                 {static_cast<int>(mi), -1, -1, -1});
    std::vector<char> seen(symbols + 1, 0);
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != f.s)
        return bad("matrix " + std::to_string(mi) + " column count",
                   {static_cast<int>(mi), -1, -1, -1});
      for (int x : row) {
        if (x < 1 || x > symbols)
          return bad("matrix " + std::to_string(mi) + " symbol " +
                         std::to_string(x) + " outside 1.." +
                         std::to_string(symbols),
                     {static_cast<int>(mi), -1, -1, -1});
        if (seen[x]++)
          return bad("matrix " + std::to_string(mi) + " repeats symbol " +
                         std::to_string(x),
                     {static_cast<int>(mi), -1, -1, -1});
      }
    }
  }
  // col_of[m][x] = column of symbol x in matrix m.
  std::vector<std::vector<int>> col_of(f.matrices.size(),
                                       std::vector<int>(symbols + 1, -1));
  for (std::size_t mi = 0; mi < f.matrices.size(); ++mi)
    for (int row = 0; row < f.k; ++row)
      for (int col = 0; col < f.s; ++col)
        col_of[mi][f.matrices[mi][row][col]] = col;
  for (std::size_t a = 0; a < f.matrices.size(); ++a)
    for (std::size_t b = 0; b < f.matrices.size(); ++b) {
      if (a == b) continue;
      for (int ca = 0; ca < f.s; ++ca) {
        std::vector<int> hits(f.s, 0);
        for (int row = 0; row < f.k; ++row)
          ++hits[col_of[b][f.matrices[a][row][ca]]];
        int touched = 0;
        for (int cb = 0; cb < f.s; ++cb) {
          if (hits[cb] > 1)
            return bad("columns share " + std::to_string(hits[cb]) + " symbols",
                       {static_cast<int>(a), static_cast<int>(b), ca, cb});
          touched += hits[cb] > 0;
        }
        if (touched != f.k)
          return bad("column meets " + std::to_string(touched) +
                         " columns, expected " + std::to_string(f.k),
                     {static_cast<int>(a), static_cast<int>(b), ca, -1});
      }
    }
  return out;
}

}  // namespace stoc
