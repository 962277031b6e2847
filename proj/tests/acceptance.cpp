// Acceptance suite: one line per criterion, exit code = number of failures.
// Each criterion runs the presets that cover it and must finish inside its
// pinned time limit.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "experiment.hpp"
#include "graph.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace {

bool run_presets(const std::vector<std::string>& names) {
  for (const auto& name : names)
    if (!stoc::run_experiment(name, 0).ok()) return false;
  return true;
}

bool run_all_presets() {
  for (const auto& p : stoc::preset_list())
    if (!stoc::run_experiment(p.name, 0).ok()) return false;
  return true;
}

// Independent route: the simplex answer must match exhaustive vertex
// enumeration on hand-assembled cover programs.
bool simplex_matches_enumeration() {
  using namespace stoc;
  auto trivials = [](const graph& g) {
    auto all = enumerate_gadgets(g, 1, 1);
    std::vector<gadget> out;
    for (auto& gd : all)
      if (gd.trivial) out.push_back(std::move(gd));
    return out;
  };
  struct item {
    graph g;
    rational total;
  };
  const std::vector<item> fixed = {
      {complete_graph(2), rational(1)}, {complete_graph(3), rational(3, 2)},
      {path_graph(3), rational(1)},     {cycle_graph(4), rational(2)},
      {cycle_graph(5), rational(5, 2)},
  };
  for (const auto& it : fixed) {
    const auto lp = build_lp(it.g, trivials(it.g), 1);
    const auto sol = solve_lp(lp);
    const auto enu = enumerate_lp_min(lp);
    if (!sol.feasible || !enu.feasible) return false;
    if (sol.objective != it.total || enu.objective != it.total) return false;
  }

  const auto c4 = cycle_graph(4);
  auto gadgets = trivials(c4);
  gadget nt;
  nt.s1 = {1, 3};
  nt.s2 = {1, 3};
  nt.weight = 4;
  nt.trivial = false;
  nt.gen_a = {0, 2};
  nt.gen_b = {0, 2};
  gadgets.push_back(nt);
  const auto lp = build_lp(c4, gadgets, 1);
  if (lp.nvars != 6) return false;
  const auto sol = solve_lp(lp);
  const auto enu = enumerate_lp_min(lp);
  return sol.feasible && enu.feasible && sol.objective == rational(2) &&
         enu.objective == rational(2);
}

struct criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<criterion> table = {
      {1, "reference interleaved array", 1.0,
       [] { return run_presets({"interleave-triangle"}); }},
      {2, "builtin and affine families verify", 1.0,
       [] { return run_presets({"kirkman", "affine-families"}); }},
      {3, "interleaving preserves rate 2/3", 10.0,
       [] { return run_presets({"rate-preservation"}); }},
      {4, "acyclic maximum scales with copies", 30.0,
       [] { return run_presets({"mais-lift-k3", "mais-lift-window"}); }},
      {5, "row parity meets anticode bound on tori", 5.0,
       [] { return run_presets({"torus-3", "torus-4", "torus-5"}); }},
      {6, "lattice tilings and plane anticodes", 60.0,
       [] {
         return run_presets({"tiling-linf-1", "tiling-linf-2", "tiling-l1-1",
                             "tiling-l1-2", "anticode-d1"});
       }},
      {7, "window series and two-offset scheme", 60.0,
       [] {
         return run_presets(
             {"window-1d-m1", "window-1d-m2", "window-1d-m3", "gcd-6-4"});
       }},
      {8, "exhaustive search in the bound sandwich", 120.0,
       [] { return run_presets({"oracle-sandwich"}); }},
      {9, "cover program agrees with enumeration", 60.0,
       [] {
         return simplex_matches_enumeration() &&
                run_presets({"lp-c5", "lp-c7", "lp-lift-c5"});
       }},
      {10, "rectangle tiling and diagonal stripes", 30.0,
       [] { return run_presets({"rect-1-1", "axial-1"}); }},
      {11, "constructions verify and certificates revalidate", 600.0,
       [] { return run_all_presets(); }},
  };

  int failures = 0;
  for (const auto& c : table) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("  (") + e.what() + ")";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.limit_s) {
      ok = false;
      note += "  (over time limit)";
    }
    if (!ok) ++failures;
    std::printf("%s  %2d  %-48s %6.2fs <= %.0fs%s\n", ok ? "PASS" : "FAIL",
                c.id, c.name, elapsed, c.limit_s, note.c_str());
  }
  return failures;
}
