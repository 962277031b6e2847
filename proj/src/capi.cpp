#include <stoc/stoc.h>

#include <array>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "code.hpp"
#include "construct.hpp"
#include "design.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "graph.hpp"
#include "interleave.hpp"
#include "lp.hpp"
#include "serialize.hpp"

// Plain graphs populate w.g only; window handles carry the full split.
struct stoc_graph {
  stoc::window_graph_t w;
  bool is_window = false;
};

struct stoc_design {
  stoc::resolvable_design d;
};

struct stoc_family {
  stoc::partition_family f;
};

struct stoc_code {
  stoc::code_t c;
};

struct stoc_tiling {
  stoc::tiling_t t;
};

struct stoc_igraph {
  stoc::interleaved_graph_t ig;
};

namespace {

thread_local std::string tl_error;

stoc_status map_code(stoc::errc code) {
  switch (code) {
    case stoc::errc::invalid_argument: return STOC_EINVAL;
    case stoc::errc::parse: return STOC_EPARSE;
    case stoc::errc::cap_exceeded: return STOC_ECAP;
    case stoc::errc::empty_result: return STOC_EEMPTY;
    case stoc::errc::internal: return STOC_EINTERNAL;
  }
  return STOC_EINTERNAL;
}

template <typename Fn>
stoc_status guarded(Fn&& fn) {
  try {
    fn();
    return STOC_OK;
  } catch (const stoc::error& e) {
    tl_error = e.what();
    if (!e.pointer().empty()) tl_error += " at " + e.pointer();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    tl_error = "out of memory";
    return STOC_ENOMEM;
  } catch (const std::exception& e) {
    tl_error = e.what();
    return STOC_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) stoc::fail(stoc::errc::invalid_argument,
                     std::string(what) + " must not be null");
}

stoc::json parse_text(const char* text, const char* what) {
  require(text, what);
  return stoc::parse_json(text);
}

// null or empty selects full enumeration.
stoc::build_mode parse_mode(const char* mode_json) {
  if (!mode_json || !*mode_json) return {};
  const auto j = stoc::parse_json(mode_json);
  if (j.is_null()) return {};
  if (!j.is_object())
    stoc::fail(stoc::errc::parse, "mode must be an object or null");
  if (!j.contains("seed") || !j.contains("count"))
    stoc::fail(stoc::errc::parse, "sample mode needs seed and count");
  return stoc::build_mode::sampled(j["seed"].get<std::uint64_t>(),
                                   j["count"].get<std::size_t>());
}

stoc::solve_caps parse_caps(const stoc::json& j) {
  stoc::solve_caps caps;
  if (!j.contains("caps")) return caps;
  const auto& jc = j["caps"];
  if (!jc.is_object()) stoc::fail(stoc::errc::parse, "caps must be an object");
  if (jc.contains("independence")) caps.independence = jc["independence"].get<int>();
  if (jc.contains("mais")) caps.mais = jc["mais"].get<int>();
  if (jc.contains("cover")) caps.cover = jc["cover"].get<int>();
  if (jc.contains("b_avoiding_exact"))
    caps.b_avoiding_exact = jc["b_avoiding_exact"].get<int>();
  if (jc.contains("oracle_words"))
    caps.oracle_words = jc["oracle_words"].get<std::uint64_t>();
  return caps;
}

void deliver(stoc::built_code built, stoc_code** out, char** declared_rate) {
  require(out, "out");
  auto h = std::make_unique<stoc_code>();
  h->c = std::move(built.code);
  if (declared_rate)
    *declared_rate = dup_string(stoc::rational_str(built.declared_rate));
  *out = h.release();
}

}  // namespace

extern "C" {

const char* stoc_version(void) { return "0.1.0"; }

const char* stoc_last_error(void) { return tl_error.c_str(); }

void stoc_string_free(char* s) { delete[] s; }

/* ---- graphs ------------------------------------------------------- */

stoc_status stoc_graph_from_json(const char* text, stoc_graph** out) {
  return guarded([&] {
    require(out, "out");
    auto h = std::make_unique<stoc_graph>();
    h->w.g = stoc::graph_from_json(parse_text(text, "text"));
    *out = h.release();
  });
}

stoc_status stoc_graph_to_json(const stoc_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(stoc::dump_json(stoc::graph_to_json(g->w.g)));
  });
}

stoc_status stoc_graph_builtin(const char* name, int n, stoc_graph** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const std::string kind = name;
    auto h = std::make_unique<stoc_graph>();
    if (kind == "cycle") h->w.g = stoc::cycle_graph(n);
    else if (kind == "path") h->w.g = stoc::path_graph(n);
    else if (kind == "complete") h->w.g = stoc::complete_graph(n);
    else if (kind == "cube") h->w.g = stoc::cube_graph();
    else if (kind == "torus") h->w.g = stoc::torus_rowcol_graph(n);
    else stoc::fail(stoc::errc::invalid_argument, "unknown builtin: " + kind);
    *out = h.release();
  });
}

stoc_status stoc_graph_window(const char* recovery_json, int side,
                              stoc_graph** out) {
  return guarded([&] {
    require(out, "out");
    const auto r =
        stoc::recovery_from_json(parse_text(recovery_json, "recovery"));
    auto h = std::make_unique<stoc_graph>();
    h->w = stoc::make_window_graph(r, side);
    h->is_window = true;
    *out = h.release();
  });
}

stoc_status stoc_graph_info(const stoc_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    stoc::json j = stoc::graph_to_json(g->w.g);
    j["triangle_free"] = stoc::is_triangle_free(g->w.g);
    if (g->is_window) {
      j["side"] = g->w.side;
      j["interior"] = g->w.interior;
      j["boundary"] = g->w.boundary;
      j["recovery"] = stoc::recovery_to_json(g->w.r);
    }
    *out = dup_string(stoc::dump_json(j));
  });
}

void stoc_graph_free(stoc_graph* g) { delete g; }

/* ---- designs and partition families ------------------------------- */

stoc_status stoc_design_affine(int q, stoc_design** out) {
  return guarded([&] {
    require(out, "out");
    auto h = std::make_unique<stoc_design>();
    h->d = stoc::affine_design(q);
    *out = h.release();
  });
}

stoc_status stoc_design_from_json(const char* text, stoc_design** out) {
  return guarded([&] {
    require(out, "out");
    auto h = std::make_unique<stoc_design>();
    h->d = stoc::design_from_json(parse_text(text, "text"));
    *out = h.release();
  });
}

stoc_status stoc_design_to_json(const stoc_design* d, char** out) {
  return guarded([&] {
    require(d, "design");
    require(out, "out");
    *out = dup_string(stoc::dump_json(stoc::design_to_json(d->d)));
  });
}

stoc_status stoc_design_verify(const stoc_design* d, char** out) {
  return guarded([&] {
    require(d, "design");
    require(out, "out");
    const auto check = stoc::verify_design(d->d);
    stoc::json j;
    j["ok"] = check.ok;
    if (!check.ok) j["reason"] = check.reason;
    *out = dup_string(stoc::dump_json(j));
  });
}

void stoc_design_free(stoc_design* d) { delete d; }

stoc_status stoc_family_builtin(const char* name, stoc_family** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const std::string kind = name;
    auto h = std::make_unique<stoc_family>();
    if (kind == "2x3") h->f = stoc::builtin_family_2x3();
    else if (kind == "3x5") h->f = stoc::builtin_family_3x5();
    else stoc::fail(stoc::errc::invalid_argument, "unknown family: " + kind);
    *out = h.release();
  });
}

stoc_status stoc_family_from_design(const stoc_design* d, stoc_family** out) {
  return guarded([&] {
    require(d, "design");
    require(out, "out");
    auto h = std::make_unique<stoc_family>();
    h->f = stoc::family_from_design(d->d);
    *out = h.release();
  });
}

stoc_status stoc_family_from_json(const char* text, stoc_family** out) {
  return guarded([&] {
    require(out, "out");
    auto h = std::make_unique<stoc_family>();
    h->f = stoc::family_from_json(parse_text(text, "text"));
    *out = h.release();
  });
}

stoc_status stoc_family_to_json(const stoc_family* f, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    *out = dup_string(stoc::dump_json(stoc::family_to_json(f->f)));
  });
}

stoc_status stoc_family_verify(const stoc_family* f, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    const auto check = stoc::verify_family(f->f);
    stoc::json j;
    j["ok"] = check.ok;
    if (!check.ok) j["reason"] = check.reason;
    *out = dup_string(stoc::dump_json(j));
  });
}

void stoc_family_free(stoc_family* f) { delete f; }

/* ---- codes -------------------------------------------------------- */

stoc_status stoc_code_from_json(const char* text, stoc_code** out) {
  return guarded([&] {
    require(out, "out");
    const auto j = parse_text(text, "text");
    auto h = std::make_unique<stoc_code>();
    h->c = j.contains("parity") ? stoc::linear_code_from_json(j)
                                : stoc::code_from_json(j);
    *out = h.release();
  });
}

stoc_status stoc_code_to_json(const stoc_code* c, char** out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    *out = dup_string(stoc::dump_json(stoc::code_to_json(c->c)));
  });
}

stoc_status stoc_code_verify(const stoc_code* c, const stoc_graph* g,
                             const char* scope_json, char** out) {
  return guarded([&] {
    require(c, "code");
    require(g, "graph");
    require(out, "out");
    stoc::verify_scope scope;
    if (scope_json && *scope_json) {
      const auto j = stoc::parse_json(scope_json);
      if (!j.is_null()) {
        if (!j.is_object() || !j.contains("vertices"))
          stoc::fail(stoc::errc::parse, "scope needs a vertices array");
        scope.all = false;
        scope.verts = j["vertices"].get<std::vector<int>>();
      }
    }
    const auto result = stoc::verify_storage_code(c->c, g->w.g, scope);
    *out = dup_string(stoc::dump_json(stoc::verify_result_to_json(result)));
  });
}

stoc_status stoc_code_rate(const stoc_code* c, char** out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    const auto r = stoc::rate(c->c);
    stoc::json j;
    j["exact"] = r.exact;
    if (r.exact) j["value"] = stoc::rational_str(r.value);
    j["approx"] = r.approx;
    *out = dup_string(stoc::dump_json(j));
  });
}

stoc_status stoc_code_size(const stoc_code* c, char** out) {
  return guarded([&] {
    require(c, "code");
    require(out, "out");
    stoc::json j;
    j["q"] = c->c.q;
    j["level"] = c->c.level;
    j["n"] = c->c.n;
    j["words"] = c->c.size();
    *out = dup_string(stoc::dump_json(j));
  });
}

void stoc_code_free(stoc_code* c) { delete c; }

/* ---- constructions ------------------------------------------------ */

stoc_status stoc_build_clique_partition(const stoc_graph* g,
                                        const char* parts_json, int q,
                                        stoc_code** out, char** declared_rate) {
  return guarded([&] {
    require(g, "graph");
    const auto j = parse_text(parts_json, "parts");
    const auto parts = j.get<std::vector<std::vector<int>>>();
    deliver(stoc::clique_partition_code(g->w.g, parts, q), out, declared_rate);
  });
}

stoc_status stoc_build_edge_to_vertex(const stoc_graph* g, int q,
                                      stoc_code** out, char** declared_rate) {
  return guarded([&] {
    require(g, "graph");
    deliver(stoc::edge_to_vertex_code(g->w.g, q), out, declared_rate);
  });
}

stoc_status stoc_build_matching(const stoc_graph* g, const char* matching_json,
                                int q, stoc_code** out, char** declared_rate) {
  return guarded([&] {
    require(g, "graph");
    const auto j = parse_text(matching_json, "matching");
    const auto edges = j.get<std::vector<std::array<int, 2>>>();
    deliver(stoc::matching_code(g->w.g, edges, q), out, declared_rate);
  });
}

stoc_status stoc_build_gcd_scheme(int l, int r, int n, int q, stoc_code** out,
                                  char** declared_rate) {
  return guarded([&] {
    deliver(stoc::gcd_scheme_code(l, r, n, q), out, declared_rate);
  });
}

stoc_status stoc_build_tiling(const stoc_graph* window, const stoc_tiling* t,
                              int q, const char* mode_json, stoc_code** out,
                              char** declared_rate) {
  return guarded([&] {
    require(window, "window");
    require(t, "tiling");
    if (!window->is_window)
      stoc::fail(stoc::errc::invalid_argument, "window handle required");
    deliver(stoc::tiling_code(window->w, t->t, q, parse_mode(mode_json)), out,
            declared_rate);
  });
}

stoc_status stoc_build_stacked(const stoc_code* seed, int side,
                               const char* mode_json, stoc_code** out,
                               char** declared_rate) {
  return guarded([&] {
    require(seed, "seed");
    deliver(stoc::stacked_code(seed->c, side, parse_mode(mode_json)), out,
            declared_rate);
  });
}

/* ---- tilings ------------------------------------------------------ */

stoc_status stoc_tiling_lattice(const char* kind, const char* params_json,
                                int side, stoc_tiling** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    const std::string name = kind;
    stoc::lattice_kind lk;
    if (name == "l1") lk = stoc::lattice_kind::l1;
    else if (name == "linf") lk = stoc::lattice_kind::linf;
    else if (name == "rect") lk = stoc::lattice_kind::rect;
    else stoc::fail(stoc::errc::invalid_argument, "unknown lattice: " + name);
    const auto j = parse_text(params_json, "params");
    const auto params = j.get<std::vector<int>>();
    auto h = std::make_unique<stoc_tiling>();
    h->t = stoc::lattice_tiling(lk, params, side);
    *out = h.release();
  });
}

stoc_status stoc_tiling_from_json(const char* text, stoc_tiling** out) {
  return guarded([&] {
    require(out, "out");
    auto h = std::make_unique<stoc_tiling>();
    h->t = stoc::tiling_from_json(parse_text(text, "text"));
    *out = h.release();
  });
}

stoc_status stoc_tiling_to_json(const stoc_tiling* t, char** out) {
  return guarded([&] {
    require(t, "tiling");
    require(out, "out");
    *out = dup_string(stoc::dump_json(stoc::tiling_to_json(t->t)));
  });
}

stoc_status stoc_tiling_validate(const stoc_tiling* t, const stoc_graph* window,
                                 char** out) {
  return guarded([&] {
    require(t, "tiling");
    require(window, "window");
    require(out, "out");
    if (!window->is_window)
      stoc::fail(stoc::errc::invalid_argument, "window handle required");
    const auto check = stoc::validate_tiling(t->t, window->w);
    stoc::json j;
    j["ok"] = check.ok;
    if (!check.ok) j["reason"] = check.reason;
    *out = dup_string(stoc::dump_json(j));
  });
}

void stoc_tiling_free(stoc_tiling* t) { delete t; }

/* ---- interleaving ------------------------------------------------- */

stoc_status stoc_igraph_build(const stoc_graph* base, const stoc_family* f,
                              const char* coloring_json, stoc_igraph** out) {
  return guarded([&] {
    require(base, "base");
    require(f, "family");
    require(out, "out");
    stoc::coloring_t coloring;
    if (coloring_json && *coloring_json) {
      const auto j = stoc::parse_json(coloring_json);
      if (j.is_null()) {
        coloring = stoc::greedy_coloring(base->w.g);
      } else {
        if (!j.is_object() || !j.contains("colors") || !j.contains("color"))
          stoc::fail(stoc::errc::parse, "coloring needs colors and color");
        coloring.colors = j["colors"].get<int>();
        coloring.color = j["color"].get<std::vector<int>>();
      }
    } else {
      coloring = stoc::greedy_coloring(base->w.g);
    }
    auto h = std::make_unique<stoc_igraph>();
    h->ig = stoc::build_interleaved_graph(base->w.g, f->f, coloring);
    *out = h.release();
  });
}

stoc_status stoc_igraph_graph(const stoc_igraph* ig, stoc_graph** out) {
  return guarded([&] {
    require(ig, "igraph");
    require(out, "out");
    auto h = std::make_unique<stoc_graph>();
    h->w.g = ig->ig.g;
    *out = h.release();
  });
}

stoc_status stoc_igraph_info(const stoc_igraph* ig, char** out) {
  return guarded([&] {
    require(ig, "igraph");
    require(out, "out");
    stoc::json j;
    j["s"] = ig->ig.s();
    j["k"] = ig->ig.k();
    j["colors"] = ig->ig.coloring.colors;
    j["n"] = ig->ig.g.n;
    j["color"] = ig->ig.coloring.color;
    j["color_to_matrix"] = ig->ig.color_to_matrix;
    *out = dup_string(stoc::dump_json(j));
  });
}

stoc_status stoc_interleave_tuple(const stoc_igraph* ig, const stoc_code* seed,
                                  const char* tuple_json, char** out) {
  return guarded([&] {
    require(ig, "igraph");
    require(seed, "seed");
    require(out, "out");
    const auto j = parse_text(tuple_json, "tuple");
    const auto tuple = j.get<std::vector<std::size_t>>();
    const auto word = stoc::interleave_tuple(ig->ig, seed->c, tuple);
    stoc::json digits = stoc::json::array();
    for (auto d : word) digits.push_back(int{d});
    *out = dup_string(stoc::dump_json(stoc::json{{"digits", digits}}));
  });
}

stoc_status stoc_interleave_code(const stoc_igraph* ig, const stoc_code* seed,
                                 const char* mode_json, stoc_code** out) {
  return guarded([&] {
    require(ig, "igraph");
    require(seed, "seed");
    require(out, "out");
    auto h = std::make_unique<stoc_code>();
    h->c = stoc::interleaved_code(ig->ig, seed->c, parse_mode(mode_json));
    *out = h.release();
  });
}

void stoc_igraph_free(stoc_igraph* ig) { delete ig; }

/* ---- bounds and certificates -------------------------------------- */

stoc_status stoc_bound(const stoc_graph* g, const char* kind,
                       const char* options_json, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(kind, "kind");
    require(out, "out");
    stoc::json opts = stoc::json::object();
    if (options_json && *options_json) {
      opts = stoc::parse_json(options_json);
      if (opts.is_null()) opts = stoc::json::object();
    }
    const auto caps = parse_caps(opts);
    const std::string name = kind;
    stoc::bound_certificate cert;
    if (name == "independence") {
      cert = stoc::independence_bound(g->w.g, caps);
    } else if (name == "mais") {
      cert = stoc::mais_bound(g->w.g, caps);
    } else if (name == "clique_cover") {
      cert = stoc::clique_cover_bound(g->w.g, caps);
    } else if (name == "matching") {
      cert = stoc::matching_bound(g->w.g);
    } else if (name == "anticode") {
      if (!opts.contains("diameter"))
        stoc::fail(stoc::errc::invalid_argument, "anticode needs a diameter");
      const auto best =
          stoc::anticode_max(g->w.g, opts["diameter"].get<int>(), caps);
      const bool tiling = opts.value("tiling_exists", false);
      cert = stoc::code_anticode_bound(stoc::bigint(g->w.g.n), best.size,
                                       tiling);
      cert.witness["set"] = best.set;
    } else if (name == "diff_avoiding") {
      if (!opts.contains("recovery") || !opts.contains("side"))
        stoc::fail(stoc::errc::invalid_argument,
                   "diff_avoiding needs recovery and side");
      const auto r = stoc::recovery_from_json(opts["recovery"]);
      cert = stoc::diff_avoiding_bound(r, opts["side"].get<int>(), caps);
    } else if (name == "oracle") {
      const int q = opts.value("q", 2);
      cert = stoc::oracle_bound(g->w.g, q, caps);
    } else {
      stoc::fail(stoc::errc::invalid_argument, "unknown bound kind: " + name);
    }
    *out = dup_string(stoc::dump_json(stoc::certificate_to_json(cert)));
  });
}

stoc_status stoc_certificate_revalidate(const char* certificate_json,
                                        const stoc_graph* g, int* ok) {
  return guarded([&] {
    require(g, "graph");
    require(ok, "ok");
    const auto cert =
        stoc::certificate_from_json(parse_text(certificate_json, "certificate"));
    *ok = stoc::revalidate_certificate(cert, g->w.g) ? 1 : 0;
  });
}

stoc_status stoc_capacity_report(const char* lower_json, const char* upper_json,
                                 char** out) {
  return guarded([&] {
    require(out, "out");
    auto parse_list = [](const char* text, const char* what) {
      const auto j = parse_text(text, what);
      if (!j.is_array())
        stoc::fail(stoc::errc::parse, std::string(what) + " must be an array");
      std::vector<stoc::bound_certificate> certs;
      for (const auto& item : j)
        certs.push_back(stoc::certificate_from_json(item));
      return certs;
    };
    const auto report = stoc::make_capacity_report(
        parse_list(lower_json, "lower"), parse_list(upper_json, "upper"));
    *out = dup_string(stoc::dump_json(stoc::capacity_report_to_json(report)));
  });
}

stoc_status stoc_window_series(const char* recovery_json, const char* kind,
                               const char* sides_json, char** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    const auto r =
        stoc::recovery_from_json(parse_text(recovery_json, "recovery"));
    const auto sides =
        parse_text(sides_json, "sides").get<std::vector<int>>();
    const auto series = stoc::window_series(r, kind, sides);
    *out = dup_string(stoc::dump_json(stoc::window_series_to_json(series)));
  });
}

stoc_status stoc_oracle_max_code(const stoc_graph* g, int q, stoc_code** out,
                                 char** certificate_json) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    auto cert = stoc::oracle_bound(g->w.g, q);
    auto result = stoc::oracle_max_code(g->w.g, q);
    auto h = std::make_unique<stoc_code>();
    h->c = std::move(result.best);
    if (certificate_json)
      *certificate_json =
          dup_string(stoc::dump_json(stoc::certificate_to_json(cert)));
    *out = h.release();
  });
}

stoc_status stoc_lp_bound(const stoc_graph* g, int tau, int max_support,
                          int closure_includes_a, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto report = stoc::lp_capacity_bound(g->w.g, tau, max_support,
                                                closure_includes_a != 0);
    *out = dup_string(stoc::dump_json(stoc::lp_report_to_json(report)));
  });
}

/* ---- experiments -------------------------------------------------- */

stoc_status stoc_experiment_list(char** out) {
  return guarded([&] {
    require(out, "out");
    stoc::json j = stoc::json::array();
    for (const auto& p : stoc::preset_list())
      j.push_back({{"name", p.name}, {"summary", p.summary}});
    *out = dup_string(stoc::dump_json(j));
  });
}

stoc_status stoc_experiment_run(const char* name, unsigned long long seed,
                                const char* format, char** out, int* ok) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto rep = stoc::run_experiment(name, seed);
    const std::string fmt = format && *format ? format : "json";
    *out = dup_string(stoc::render_report(rep, fmt));
    if (ok) *ok = rep.ok() ? 1 : 0;
  });
}

}  // extern "C"
