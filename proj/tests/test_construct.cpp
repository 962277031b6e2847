#include <doctest.h>

#include <array>
#include <set>
#include <vector>

#include "construct.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "rational.hpp"
#include "sampling.hpp"

using namespace stoc;

TEST_CASE("clique partition code on the rook torus") {
  const auto g = torus_rowcol_graph(3);
  const std::vector<std::vector<int>> rows = {
      {0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  const auto built = clique_partition_code(g, rows, 2);
  CHECK(built.declared_rate == rational(2, 3));
  CHECK(built.code.size() == 64);
  const auto rv = rate(built.code);
  CHECK(rv.exact);
  CHECK(rv.value == rational(2, 3));
  CHECK(verify_storage_code(built.code, g).ok);
  CHECK(brute::storage_check(built.code, g));
}

TEST_CASE("clique partition rejects non-cliques and non-partitions") {
  const auto g = torus_rowcol_graph(3);
  CHECK_THROWS_AS(clique_partition_code(g, {{0, 4}}, 2), error);
  const std::vector<std::vector<int>> overlap = {
      {0, 1, 2}, {2, 3, 5}, {6, 7, 8}};
  CHECK_THROWS_AS(clique_partition_code(g, overlap, 2), error);
}

TEST_CASE("edge symbols listed at vertices") {
  const auto g = cycle_graph(4);
  const auto built = edge_to_vertex_code(g, 2);
  CHECK(built.declared_rate == rational(1, 2));
  CHECK(built.code.size() == 16);
  CHECK(built.code.level == 2);
  CHECK(verify_storage_code(built.code, g).ok);
  CHECK(brute::storage_check(built.code, g));
}

TEST_CASE("matched endpoints share a symbol") {
  const auto g = cycle_graph(4);
  const auto built = matching_code(g, {{0, 1}, {2, 3}}, 3);
  CHECK(built.declared_rate == rational(1, 2));
  CHECK(built.code.size() == 9);
  CHECK(verify_storage_code(built.code, g).ok);
  CHECK(brute::storage_check(built.code, g));

  CHECK_THROWS_AS(matching_code(g, {{0, 2}}, 3), error);
  CHECK_THROWS_AS(matching_code(g, {{0, 1}, {1, 2}}, 3), error);
}

TEST_CASE("two-offset window schemes") {
  const auto tight = gcd_scheme_code(1, 1, 6, 2);
  CHECK(tight.declared_rate == rational(1, 2));
  CHECK(tight.code.size() == 8);
  const auto w11 = make_window_graph(interval_set(1, 1), 6);
  CHECK(verify_storage_code(tight.code, w11.g).ok);
  CHECK(brute::storage_check(tight.code, w11.g));

  const auto even = gcd_scheme_code(2, 2, 8, 2);
  CHECK(even.declared_rate == rational(1, 2));
  CHECK(even.code.size() == 16);
  const auto w22 = make_window_graph(pair_set(2, 2), 8);
  CHECK(verify_storage_code(even.code, w22.g).ok);

  const auto wide = gcd_scheme_code(6, 4, 20, 3);
  CHECK(wide.declared_rate == rational(1, 5));
  CHECK(wide.code.size() == 81);
  const auto w64 = make_window_graph(pair_set(6, 4), 20);
  CHECK(verify_storage_code(wide.code, w64.g).ok);
}

TEST_CASE("lattice tilings") {
  SUBCASE("square boxes cover everything") {
    const auto t = lattice_tiling(lattice_kind::linf, {1}, 4);
    CHECK(t.tiles.size() == 4);
    CHECK(t.covers == tiling_region::all);
    const auto w = make_window_graph(linf_ball_set(1), 4);
    CHECK(validate_tiling(t, w).ok);
  }
  SUBCASE("dominoes leave a boundary fringe") {
    const auto t = lattice_tiling(lattice_kind::l1, {1}, 4);
    CHECK(t.tiles.size() == 6);
    CHECK(t.covers == tiling_region::interior);
    for (const auto& tile : t.tiles) CHECK(tile.size() == 2);
    const auto w = make_window_graph(l1_ball_set(1), 4);
    CHECK(validate_tiling(t, w).ok);
  }
  SUBCASE("four crosses fit a side-6 window") {
    const auto t = lattice_tiling(lattice_kind::l1, {2}, 6);
    REQUIRE(t.tiles.size() == 4);
    for (const auto& tile : t.tiles) CHECK(tile.size() == 5);
    std::set<std::array<int, 2>> centers;
    for (const auto& tile : t.tiles) centers.insert(tile[2]);
    const std::set<std::array<int, 2>> expect = {
        {1, 2}, {2, 4}, {3, 1}, {4, 3}};
    CHECK(centers == expect);
    const auto w = make_window_graph(l1_ball_set(2), 6);
    CHECK(validate_tiling(t, w).ok);
  }
  SUBCASE("rectangles") {
    const auto t = lattice_tiling(lattice_kind::rect, {1, 1}, 6);
    CHECK(t.tiles.size() == 9);
    CHECK(t.covers == tiling_region::all);
  }
  CHECK_THROWS_AS(lattice_tiling(lattice_kind::linf, {0}, 4), error);
  CHECK_THROWS_AS(lattice_tiling(lattice_kind::l1, {}, 4), error);
}

TEST_CASE("tiling validation rejects damage") {
  const auto w = make_window_graph(linf_ball_set(1), 4);
  auto t = lattice_tiling(lattice_kind::linf, {1}, 4);
  auto moved = t;
  moved.tiles[0][0] = moved.tiles[1][0];
  CHECK_FALSE(validate_tiling(moved, w).ok);

  auto stretched = t;
  stretched.tiles[0][0] = {3, 3};
  const auto check = validate_tiling(stretched, w);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.reason.empty());
}

TEST_CASE("tile parity codes") {
  SUBCASE("boxes, full enumeration") {
    const auto w = make_window_graph(linf_ball_set(1), 4);
    const auto t = lattice_tiling(lattice_kind::linf, {1}, 4);
    const auto built = tiling_code(w, t, 2);
    CHECK(built.declared_rate == rational(3, 4));
    CHECK(built.code.size() == 4096);
    CHECK(verify_storage_code(built.code, w.g).ok);
  }
  SUBCASE("dominoes, full enumeration") {
    const auto w = make_window_graph(l1_ball_set(1), 4);
    const auto t = lattice_tiling(lattice_kind::l1, {1}, 4);
    const auto built = tiling_code(w, t, 2);
    CHECK(built.declared_rate == rational(1, 2));
    CHECK(built.code.size() == 64);
    CHECK(verify_storage_code(built.code, w.g).ok);
    CHECK(brute::storage_check(built.code, w.g));
  }
  SUBCASE("crosses, full enumeration") {
    const auto w = make_window_graph(l1_ball_set(2), 6);
    const auto t = lattice_tiling(lattice_kind::l1, {2}, 6);
    const auto built = tiling_code(w, t, 2);
    CHECK(built.declared_rate == rational(4, 5));
    CHECK(built.code.size() == 65536);
    CHECK(verify_storage_code(built.code, w.g).ok);
  }
  SUBCASE("rectangle window, full enumeration") {
    const auto w = make_window_graph(rect_set(2, 1, 1, 2), 5);
    const auto t = lattice_tiling(lattice_kind::rect, {1, 1}, 5);
    CHECK(t.tiles.size() == 4);
    const auto built = tiling_code(w, t, 2);
    CHECK(built.declared_rate == rational(3, 4));
    CHECK(built.code.size() == 4096);
    CHECK(verify_storage_code(built.code, w.g).ok);
  }
  SUBCASE("sampling is deterministic and sound") {
    const auto w = make_window_graph(l1_ball_set(1), 8);
    const auto t = lattice_tiling(lattice_kind::l1, {1}, 8);
    const auto a = tiling_code(w, t, 2, build_mode::sampled(7, 64));
    const auto b = tiling_code(w, t, 2, build_mode::sampled(7, 64));
    CHECK(a.code.digits == b.code.digits);
    CHECK(a.code.size() <= 64);
    CHECK(a.code.size() > 0);
    CHECK(verify_storage_code(a.code, w.g).ok);
    const auto c = tiling_code(w, t, 2, build_mode::sampled(8, 64));
    CHECK(c.code.digits != a.code.digits);
  }
  SUBCASE("full enumeration respects the word cap") {
    const auto w = make_window_graph(l1_ball_set(1), 10);
    const auto t = lattice_tiling(lattice_kind::l1, {1}, 10);
    CHECK_THROWS_AS(tiling_code(w, t, 2), error);
  }
}

TEST_CASE("stacked rows") {
  const auto seed = gcd_scheme_code(1, 1, 4, 2);
  CHECK(seed.code.size() == 4);
  const auto built = stacked_code(seed.code, 4);
  CHECK(built.declared_rate == seed.declared_rate);
  CHECK(built.code.size() == 256);
  CHECK(built.code.n == 16);
  const auto w = make_window_graph(axial_set(1, 1, 1, 1), 4);
  CHECK(verify_storage_code(built.code, w.g).ok);
  CHECK(brute::storage_check(built.code, w.g));

  const auto sampled = stacked_code(seed.code, 4, build_mode::sampled(3, 50));
  CHECK(sampled.code.size() <= 50);
  CHECK(verify_storage_code(sampled.code, w.g).ok);
  const auto again = stacked_code(seed.code, 4, build_mode::sampled(3, 50));
  CHECK(sampled.code.digits == again.code.digits);

  // Seed length must match the side.
  CHECK_THROWS_AS(stacked_code(seed.code, 6), error);
}
