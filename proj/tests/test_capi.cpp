#include <doctest.h>

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

#include <stoc/stoc.h>

// Exercises the shared-library surface only; no internal headers.

using nlohmann::json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  stoc_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

struct graph_deleter {
  void operator()(stoc_graph* g) const { stoc_graph_free(g); }
};
struct design_deleter {
  void operator()(stoc_design* d) const { stoc_design_free(d); }
};
struct family_deleter {
  void operator()(stoc_family* f) const { stoc_family_free(f); }
};
struct code_deleter {
  void operator()(stoc_code* c) const { stoc_code_free(c); }
};
struct tiling_deleter {
  void operator()(stoc_tiling* t) const { stoc_tiling_free(t); }
};
struct igraph_deleter {
  void operator()(stoc_igraph* g) const { stoc_igraph_free(g); }
};

using graph_ptr = std::unique_ptr<stoc_graph, graph_deleter>;
using design_ptr = std::unique_ptr<stoc_design, design_deleter>;
using family_ptr = std::unique_ptr<stoc_family, family_deleter>;
using code_ptr = std::unique_ptr<stoc_code, code_deleter>;
using tiling_ptr = std::unique_ptr<stoc_tiling, tiling_deleter>;
using igraph_ptr = std::unique_ptr<stoc_igraph, igraph_deleter>;

graph_ptr builtin(const char* name, int n) {
  stoc_graph* g = nullptr;
  REQUIRE(stoc_graph_builtin(name, n, &g) == STOC_OK);
  return graph_ptr(g);
}

}  // namespace

TEST_CASE("version string") {
  const char* v = stoc_version();
  REQUIRE(v != nullptr);
  CHECK(std::string(v).size() > 0);
}

TEST_CASE("builtin graphs and errors") {
  auto g = builtin("cycle", 5);
  char* out = nullptr;
  REQUIRE(stoc_graph_info(g.get(), &out) == STOC_OK);
  const auto info = take_json(out);
  CHECK(info["n"] == 5);
  CHECK(info["directed"] == false);
  CHECK(info["triangle_free"] == true);

  out = nullptr;
  REQUIRE(stoc_graph_to_json(g.get(), &out) == STOC_OK);
  const auto text = take(out);
  stoc_graph* back = nullptr;
  REQUIRE(stoc_graph_from_json(text.c_str(), &back) == STOC_OK);
  graph_ptr back_ptr(back);
  out = nullptr;
  REQUIRE(stoc_graph_to_json(back, &out) == STOC_OK);
  CHECK(take(out) == text);

  stoc_graph* bad = nullptr;
  CHECK(stoc_graph_builtin("nope", 3, &bad) == STOC_EINVAL);
  CHECK(std::string(stoc_last_error()).size() > 0);
  CHECK(stoc_graph_from_json("{ nope", &bad) == STOC_EPARSE);
  CHECK(stoc_graph_info(nullptr, &out) == STOC_EINVAL);
}

TEST_CASE("window graphs") {
  stoc_graph* w = nullptr;
  REQUIRE(stoc_graph_window("{\"kind\": \"interval\", \"l\": 1, \"r\": 1}", 6,
                            &w) == STOC_OK);
  graph_ptr wp(w);
  char* out = nullptr;
  REQUIRE(stoc_graph_info(w, &out) == STOC_OK);
  const auto info = take_json(out);
  CHECK(info["n"] == 6);
  CHECK(info["directed"] == true);
  CHECK(info["interior"] == json::array({1, 2, 3, 4}));
  CHECK(info["boundary"] == json::array({0, 5}));

  stoc_graph* bad = nullptr;
  CHECK(stoc_graph_window("{\"kind\": \"interval\", \"l\": 2, \"r\": 2}", 4,
                          &bad) == STOC_EINVAL);
}

TEST_CASE("designs and families") {
  stoc_design* d = nullptr;
  REQUIRE(stoc_design_affine(3, &d) == STOC_OK);
  design_ptr dp(d);
  char* out = nullptr;
  REQUIRE(stoc_design_verify(d, &out) == STOC_OK);
  CHECK(take_json(out)["ok"] == true);

  stoc_family* f = nullptr;
  REQUIRE(stoc_family_builtin("3x5", &f) == STOC_OK);
  family_ptr fp(f);
  out = nullptr;
  REQUIRE(stoc_family_verify(f, &out) == STOC_OK);
  CHECK(take_json(out)["ok"] == true);

  stoc_family* fd = nullptr;
  REQUIRE(stoc_family_from_design(d, &fd) == STOC_OK);
  family_ptr fdp(fd);
  out = nullptr;
  REQUIRE(stoc_family_verify(fd, &out) == STOC_OK);
  CHECK(take_json(out)["ok"] == true);

  stoc_design* bad = nullptr;
  CHECK(stoc_design_affine(4, &bad) == STOC_EINVAL);
}

TEST_CASE("codes through the parity form") {
  stoc_code* c = nullptr;
  REQUIRE(stoc_code_from_json("{\"q\": 3, \"n\": 3, \"parity\": [[1, 1, 1]]}",
                              &c) == STOC_OK);
  code_ptr cp(c);
  char* out = nullptr;
  REQUIRE(stoc_code_size(c, &out) == STOC_OK);
  const auto size = take_json(out);
  CHECK(size["q"] == 3);
  CHECK(size["level"] == 1);
  CHECK(size["n"] == 3);
  CHECK(size["words"] == 9);

  out = nullptr;
  REQUIRE(stoc_code_rate(c, &out) == STOC_OK);
  const auto rate = take_json(out);
  CHECK(rate["exact"] == true);
  CHECK(rate["value"] == "2/3");

  auto k3 = builtin("complete", 3);
  out = nullptr;
  REQUIRE(stoc_code_verify(c, k3.get(), nullptr, &out) == STOC_OK);
  CHECK(take_json(out)["ok"] == true);

  stoc_code* viol = nullptr;
  REQUIRE(stoc_code_from_json(
              "{\"q\": 2, \"level\": 1, \"n\": 3, "
              "\"words\": [[0, 0, 0], [1, 0, 0]]}",
              &viol) == STOC_OK);
  code_ptr vp(viol);
  out = nullptr;
  REQUIRE(stoc_code_verify(viol, k3.get(), nullptr, &out) == STOC_OK);
  const auto res = take_json(out);
  CHECK(res["ok"] == false);
  CHECK(res["vertex"] == 0);
}

TEST_CASE("construction builders") {
  auto c3 = builtin("cycle", 3);
  stoc_code* c = nullptr;
  char* rate = nullptr;
  REQUIRE(stoc_build_clique_partition(c3.get(), "[[0, 1, 2]]", 2, &c, &rate) ==
          STOC_OK);
  code_ptr cp(c);
  CHECK(take(rate) == "2/3");
  char* out = nullptr;
  REQUIRE(stoc_code_size(c, &out) == STOC_OK);
  CHECK(take_json(out)["words"] == 4);

  stoc_code* g = nullptr;
  rate = nullptr;
  REQUIRE(stoc_build_gcd_scheme(1, 1, 6, 2, &g, &rate) == STOC_OK);
  code_ptr gp(g);
  CHECK(take(rate) == "1/2");

  stoc_code* st = nullptr;
  rate = nullptr;
  stoc_code* seed = nullptr;
  char* seed_rate = nullptr;
  REQUIRE(stoc_build_gcd_scheme(1, 1, 4, 2, &seed, &seed_rate) == STOC_OK);
  code_ptr seedp(seed);
  take(seed_rate);
  REQUIRE(stoc_build_stacked(seed, 4, nullptr, &st, &rate) == STOC_OK);
  code_ptr stp(st);
  CHECK(take(rate) == "1/2");
  out = nullptr;
  REQUIRE(stoc_code_size(st, &out) == STOC_OK);
  const auto size = take_json(out);
  CHECK(size["n"] == 16);
  CHECK(size["words"] == 256);
}

TEST_CASE("lattice tilings") {
  stoc_tiling* t = nullptr;
  REQUIRE(stoc_tiling_lattice("linf", "[1]", 4, &t) == STOC_OK);
  tiling_ptr tp(t);
  stoc_graph* w = nullptr;
  REQUIRE(stoc_graph_window("{\"kind\": \"linf\", \"radius\": 1}", 4, &w) ==
          STOC_OK);
  graph_ptr wp(w);
  char* out = nullptr;
  REQUIRE(stoc_tiling_validate(t, w, &out) == STOC_OK);
  CHECK(take_json(out)["ok"] == true);

  stoc_code* c = nullptr;
  char* rate = nullptr;
  REQUIRE(stoc_build_tiling(w, t, 2, nullptr, &c, &rate) == STOC_OK);
  code_ptr cp(c);
  CHECK(take(rate) == "3/4");
  out = nullptr;
  REQUIRE(stoc_code_size(c, &out) == STOC_OK);
  CHECK(take_json(out)["words"] == 4096);
  out = nullptr;
  REQUIRE(stoc_code_verify(c, w, nullptr, &out) == STOC_OK);
  CHECK(take_json(out)["ok"] == true);
}

TEST_CASE("bounds and certificates") {
  auto c5 = builtin("cycle", 5);
  char* out = nullptr;
  REQUIRE(stoc_bound(c5.get(), "independence", nullptr, &out) == STOC_OK);
  const auto cert_text = take(out);
  const auto cert = json::parse(cert_text);
  CHECK(cert["kind"] == "independence");
  CHECK(cert["direction"] == "upper");
  CHECK(cert["raw"] == "2");
  CHECK(cert["value"] == "3/5");
  int ok = 0;
  REQUIRE(stoc_certificate_revalidate(cert_text.c_str(), c5.get(), &ok) ==
          STOC_OK);
  CHECK(ok == 1);

  auto c4 = builtin("cycle", 4);
  out = nullptr;
  REQUIRE(stoc_bound(c4.get(), "matching", nullptr, &out) == STOC_OK);
  const auto lower = take(out);
  out = nullptr;
  REQUIRE(stoc_bound(c4.get(), "independence", nullptr, &out) == STOC_OK);
  const auto upper = take(out);
  out = nullptr;
  REQUIRE(stoc_capacity_report(("[" + lower + "]").c_str(),
                               ("[" + upper + "]").c_str(), &out) == STOC_OK);
  const auto rep = take_json(out);
  CHECK(rep["verdict"] == "tight");
  CHECK(rep["best_lower"] == "1/2");

  out = nullptr;
  CHECK(stoc_bound(c5.get(), "chromatic", nullptr, &out) == STOC_EINVAL);
}

TEST_CASE("window series through the interface") {
  char* out = nullptr;
  REQUIRE(stoc_window_series("{\"kind\": \"interval\", \"l\": 1, \"r\": 1}",
                             "independence", "[4, 8]", &out) == STOC_OK);
  const auto series = take_json(out);
  REQUIRE(series["entries"].size() == 2);
  CHECK(series["entries"][0]["value"] == "1/2");
  CHECK(series["limsup_estimate"] == "1/2");
}

TEST_CASE("exhaustive search through the interface") {
  auto k3 = builtin("complete", 3);
  stoc_code* best = nullptr;
  char* cert_text = nullptr;
  REQUIRE(stoc_oracle_max_code(k3.get(), 2, &best, &cert_text) == STOC_OK);
  code_ptr bp(best);
  const auto cert = json::parse(take(cert_text));
  CHECK(cert["kind"] == "oracle");
  CHECK(cert["raw"] == "4");
  char* out = nullptr;
  REQUIRE(stoc_code_verify(best, k3.get(), nullptr, &out) == STOC_OK);
  CHECK(take_json(out)["ok"] == true);
}

TEST_CASE("cover relaxation through the interface") {
  auto c5 = builtin("cycle", 5);
  char* out = nullptr;
  REQUIRE(stoc_lp_bound(c5.get(), 2, 2, 0, &out) == STOC_OK);
  const auto rep = take_json(out);
  CHECK(rep["value"] == "1/2");
  CHECK(rep["grid_value"] == "3/5");
}

TEST_CASE("interleaving through the interface") {
  auto k3 = builtin("complete", 3);
  stoc_family* fam = nullptr;
  REQUIRE(stoc_family_builtin("2x3", &fam) == STOC_OK);
  family_ptr fp(fam);
  stoc_igraph* ig = nullptr;
  REQUIRE(stoc_igraph_build(k3.get(), fam, nullptr, &ig) == STOC_OK);
  igraph_ptr ip(ig);
  char* out = nullptr;
  REQUIRE(stoc_igraph_info(ig, &out) == STOC_OK);
  const auto info = take_json(out);
  CHECK(info["s"] == 3);
  CHECK(info["k"] == 2);
  CHECK(info["n"] == 9);

  stoc_code* seed = nullptr;
  REQUIRE(stoc_code_from_json("{\"q\": 3, \"n\": 3, \"parity\": [[1, 1, 1]]}",
                              &seed) == STOC_OK);
  code_ptr sp(seed);
  out = nullptr;
  REQUIRE(stoc_interleave_tuple(ig, seed, "[4, 8, 0, 5, 1, 3]", &out) ==
          STOC_OK);
  const auto digits = take_json(out);
  const std::vector<int> expect = {1, 2, 0, 1, 0, 1, 1, 1, 2,
                                   0, 0, 2, 1, 0, 2, 2, 2, 0};
  CHECK(digits["digits"] == json(expect));

  stoc_code* prod = nullptr;
  REQUIRE(stoc_interleave_code(ig, seed, "{\"seed\": 3, \"count\": 20}",
                               &prod) == STOC_OK);
  code_ptr pp(prod);
  out = nullptr;
  REQUIRE(stoc_code_size(prod, &out) == STOC_OK);
  CHECK(take_json(out)["words"] <= 20);
}

TEST_CASE("experiments through the interface") {
  char* out = nullptr;
  REQUIRE(stoc_experiment_list(&out) == STOC_OK);
  const auto list = take_json(out);
  CHECK(list.size() == 25);

  out = nullptr;
  int ok = 0;
  REQUIRE(stoc_experiment_run("torus-3", 0, "json", &out, &ok) == STOC_OK);
  const auto rep = take_json(out);
  CHECK(ok == 1);
  CHECK(rep["ok"] == true);
  CHECK(rep["schema"] == "stoc-report/1");

  out = nullptr;
  CHECK(stoc_experiment_run("nope", 0, "json", &out, &ok) == STOC_EINVAL);
}
