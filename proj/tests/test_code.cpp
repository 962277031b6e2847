#include <doctest.h>

#include <vector>

#include "code.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "rational.hpp"

using namespace stoc;

TEST_CASE("make_code sorts and deduplicates") {
  const code_t c = make_code(2, 1, 2, {1, 1, 0, 0, 1, 1});
  CHECK(c.size() == 2);
  CHECK(c.word(0)[0] == 0);
  CHECK(c.word(1)[0] == 1);
  CHECK_THROWS_AS(make_code(2, 1, 2, {0, 2}), error);
  CHECK_THROWS_AS(make_code(2, 1, 2, {0, 0, 1}), error);
}

TEST_CASE("parity kernel enumeration") {
  const code_t c = code_from_parity(3, 3, {{1, 1, 1}});
  REQUIRE(c.size() == 9);
  const std::vector<std::uint8_t> expect = {0, 0, 0, 0, 1, 2, 0, 2, 1,
                                            1, 0, 2, 1, 1, 1, 1, 2, 0,
                                            2, 0, 1, 2, 1, 0, 2, 2, 2};
  CHECK(c.digits == expect);
  const auto rv = rate(c);
  CHECK(rv.exact);
  CHECK(rv.value == rational(2, 3));

  const code_t two = code_from_parity(2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(two.size() == 4);
}

TEST_CASE("parity caps") {
  // The kernel would hold 2^30 words; the cap rejects it up front.
  std::vector<std::vector<std::uint8_t>> rows(1, std::vector<std::uint8_t>(31, 0));
  rows[0][0] = 1;
  CHECK_THROWS_AS(code_from_parity(2, 31, rows), error);
}

TEST_CASE("storage verification on the triangle") {
  const auto g = complete_graph(3);
  const code_t c = code_from_parity(3, 3, {{1, 1, 1}});
  CHECK(verify_storage_code(c, g).ok);
  CHECK(brute::storage_check(c, g));

  // Subsets of a storage code stay storage codes.
  std::vector<std::uint8_t> digits(c.digits.begin(), c.digits.begin() + 5 * 3);
  const code_t sub = make_code(3, 1, 3, std::move(digits));
  CHECK(verify_storage_code(sub, g).ok);
}

TEST_CASE("violations are witnessed") {
  const auto g = complete_graph(3);
  const code_t bad = make_code(2, 1, 3, {0, 0, 0, 1, 0, 0});
  const auto res = verify_storage_code(bad, g);
  REQUIRE_FALSE(res.ok);
  CHECK(res.vertex == 0);
  CHECK(res.word_x == 0);
  CHECK(res.word_y == 1);
  CHECK_FALSE(brute::storage_check(bad, g));

  // Restricted to the other vertices the pair never agrees, so it passes.
  const verify_scope scope{false, {1, 2}};
  CHECK(verify_storage_code(bad, g, scope).ok);
  CHECK(brute::storage_check(bad, g, {1, 2}));
}

TEST_CASE("rate of non-power counts is approximate") {
  const code_t c = make_code(2, 1, 3, {0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1});
  const auto rv = rate(c);
  CHECK_FALSE(rv.exact);
  CHECK(rv.approx == doctest::Approx(0.77398).epsilon(0.01));
}

TEST_CASE("puncturing to fixed symbols") {
  const code_t c = code_from_parity(3, 3, {{1, 1, 1}});
  const auto fixed = puncture_fix(c, {0}, {0});
  REQUIRE(fixed.has_value());
  CHECK(fixed->size() == 3);
  for (std::size_t w = 0; w < fixed->size(); ++w)
    CHECK(fixed->word(w)[0] == 0);

  const code_t zero = make_code(2, 1, 2, {0, 0});
  CHECK_FALSE(puncture_fix(zero, {0}, {1}).has_value());
  CHECK_THROWS_AS(puncture_fix(zero, {5}, {0}), error);
  CHECK_THROWS_AS(puncture_fix(zero, {0}, {2}), error);
}
