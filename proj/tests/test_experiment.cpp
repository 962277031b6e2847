#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "error.hpp"
#include "experiment.hpp"
#include "serialize.hpp"

using namespace stoc;

TEST_CASE("preset registry") {
  const auto& list = preset_list();
  CHECK(list.size() == 25);
  const std::vector<std::string> expect = {
      "torus-3",        "torus-4",
      "torus-5",        "kirkman",
      "affine-families", "interleave-triangle",
      "rate-preservation", "mais-lift-k3",
      "mais-lift-window", "tiling-linf-1",
      "tiling-linf-2",  "tiling-l1-1",
      "tiling-l1-2",    "anticode-d1",
      "window-1d-m1",   "window-1d-m2",
      "window-1d-m3",   "gcd-6-4",
      "rect-1-1",       "axial-1",
      "oracle-sandwich", "lp-c5",
      "lp-c7",          "lp-lift-c5",
      "triangle-free-preservation",
  };
  std::vector<std::string> names;
  for (const auto& p : list) {
    names.push_back(p.name);
    CHECK_FALSE(p.summary.empty());
  }
  for (const auto& e : expect)
    CHECK(std::find(names.begin(), names.end(), e) != names.end());
}

TEST_CASE("torus preset") {
  const auto rep = run_experiment("torus-3");
  CHECK(rep.preset == "torus-3");
  CHECK(rep.ok());
  const auto once = render_report(rep, "json");
  const auto twice = render_report(run_experiment("torus-3"), "json");
  CHECK(once == twice);
}

TEST_CASE("reference array preset") {
  const auto rep = run_experiment("interleave-triangle");
  CHECK(rep.ok());
  REQUIRE(rep.extra.contains("array"));
  REQUIRE(rep.extra["array"].size() == 2);
  CHECK(rep.extra["array"][0] == "1 0 0 1 2 0 1 2 2");
  CHECK(rep.extra["array"][1] == "2 1 1 1 0 2 0 2 0");
}

TEST_CASE("small presets run clean") {
  for (const char* name : {"mais-lift-k3", "lp-c5", "kirkman"}) {
    const auto rep = run_experiment(name);
    CHECK(rep.ok());
    CHECK_FALSE(rep.rows.empty());
  }
}

TEST_CASE("unknown preset") {
  CHECK_THROWS_AS(run_experiment("nope"), error);
}
