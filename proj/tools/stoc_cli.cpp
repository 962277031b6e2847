#include <stoc/stoc.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

// 0 pass, 1 expectation mismatch, 2 input error, 3 internal inconsistency.
constexpr int exit_pass = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

struct cli_error {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
  throw cli_error{code, message};
}

int status_exit(stoc_status s) {
  switch (s) {
    case STOC_OK:
      return exit_pass;
    case STOC_EINVAL:
    case STOC_EPARSE:
    case STOC_ECAP:
      return exit_input;
    default:
      return exit_internal;
  }
}

void check(stoc_status s) {
  if (s != STOC_OK) die(status_exit(s), stoc_last_error());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  stoc_string_free(s);
  return out;
}

struct graph_del {
  void operator()(stoc_graph* p) const { stoc_graph_free(p); }
};
struct design_del {
  void operator()(stoc_design* p) const { stoc_design_free(p); }
};
struct family_del {
  void operator()(stoc_family* p) const { stoc_family_free(p); }
};
struct code_del {
  void operator()(stoc_code* p) const { stoc_code_free(p); }
};
struct tiling_del {
  void operator()(stoc_tiling* p) const { stoc_tiling_free(p); }
};
struct igraph_del {
  void operator()(stoc_igraph* p) const { stoc_igraph_free(p); }
};
using graph_ptr = std::unique_ptr<stoc_graph, graph_del>;
using design_ptr = std::unique_ptr<stoc_design, design_del>;
using family_ptr = std::unique_ptr<stoc_family, family_del>;
using code_ptr = std::unique_ptr<stoc_code, code_del>;
using tiling_ptr = std::unique_ptr<stoc_tiling, tiling_del>;
using igraph_ptr = std::unique_ptr<stoc_igraph, igraph_del>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(exit_input, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Arguments starting with '{' or '[' are inline JSON, anything else a path.
std::string load_text(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
    return arg;
  return read_file(arg);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die(exit_input, "cannot write " + path);
  out << text;
  if (!out) die(exit_input, "short write to " + path);
}

struct globals {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string out;
  std::vector<std::string> cap_overrides;
};

void emit(const globals& g, const std::string& text) {
  if (g.out.empty())
    std::cout << text;
  else
    write_file(g.out, text);
}

graph_ptr load_graph(const std::string& arg) {
  stoc_graph* raw = nullptr;
  check(stoc_graph_from_json(load_text(arg).c_str(), &raw));
  return graph_ptr(raw);
}

code_ptr load_code(const std::string& arg) {
  stoc_code* raw = nullptr;
  check(stoc_code_from_json(load_text(arg).c_str(), &raw));
  return code_ptr(raw);
}

graph_ptr make_window(const std::string& recovery_arg, int side) {
  stoc_graph* raw = nullptr;
  check(stoc_graph_window(load_text(recovery_arg).c_str(), side, &raw));
  return graph_ptr(raw);
}

// Hard ceilings for --cap-override; raising caps past them is refused.
json options_with_caps(const globals& g) {
  json opts = json::object();
  if (g.cap_overrides.empty()) return opts;
  json caps = json::object();
  for (const auto& kv : g.cap_overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      die(exit_input, "--cap-override expects name=value: " + kv);
    const std::string name = kv.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(kv.substr(eq + 1));
    } catch (const std::exception&) {
      die(exit_input, "bad cap value in " + kv);
    }
    if (value < 1) die(exit_input, "cap must be positive: " + kv);
    long long ceiling = 0;
    if (name == "independence" || name == "mais" || name == "cover" ||
        name == "b_avoiding_exact")
      ceiling = 512;
    else if (name == "oracle_words")
      ceiling = 65536;
    else
      die(exit_input, "unknown cap name: " + name);
    if (value > ceiling)
      die(exit_input, "cap " + name + " may not exceed " +
                          std::to_string(ceiling));
    caps[name] = value;
  }
  std::cerr << "note: solver caps overridden; exact searches may run long\n";
  opts["caps"] = caps;
  return opts;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::size_t witness_size(const json& cert) {
  std::size_t size = 0;
  if (!cert.contains("witness")) return size;
  for (const char* key : {"set", "parts", "edges", "words"})
    if (cert["witness"].contains(key) && cert["witness"][key].is_array())
      size = std::max(size, cert["witness"][key].size());
  return size;
}

// Certificates honor --format; csv and table compress the witness to its
// size.
void emit_certificate(const globals& g, const std::string& cert_text,
                      const std::string& name) {
  if (g.format == "json") {
    emit(g, cert_text);
    return;
  }
  const json cert = json::parse(cert_text);
  const std::string kind = cert.value("kind", "");
  const std::string direction = cert.value("direction", "");
  const std::string value = cert.value("value", "");
  const std::string raw = cert.value("raw", "");
  const std::size_t wsize = witness_size(cert);
  std::ostringstream os;
  if (g.format == "csv") {
    os << "graph,kind,direction,value,raw,witness_size\n"
       << csv_escape(name) << ',' << csv_escape(kind) << ',' << direction
       << ',' << csv_escape(value) << ',' << raw << ',' << wsize << '\n';
  } else {
    os << "graph: " << name << '\n'
       << "kind: " << kind << '\n'
       << "direction: " << direction << '\n'
       << "value: " << value << '\n'
       << "raw: " << raw << '\n'
       << "witness size: " << wsize << '\n';
  }
  emit(g, os.str());
}

// Strips the file name down to a short label for csv rows.
std::string stem_of(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
    return "inline";
  auto slash = arg.find_last_of('/');
  std::string base = slash == std::string::npos ? arg : arg.substr(slash + 1);
  auto dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base;
}

std::string mode_json_of(const globals& g, std::size_t sample) {
  if (sample == 0) return "";
  json j;
  j["seed"] = g.seed;
  j["count"] = sample;
  return j.dump();
}

void register_graph(CLI::App& app, globals& g) {
  auto* cmd = app.add_subcommand("graph", "make and inspect graphs");
  cmd->require_subcommand(1);
  cmd->fallthrough();

  struct gen_opts {
    std::string name = "cycle";
    int n = 5;
    std::string recovery;
    int side = 0;
  };
  auto gen = std::make_shared<gen_opts>();
  auto* gen_cmd = cmd->add_subcommand(
      "gen", "emit a builtin graph or a window over a recovery set");
  gen_cmd->fallthrough();
  gen_cmd->add_option("--name", gen->name,
                      "cycle | path | complete | cube | torus");
  gen_cmd->add_option("--n", gen->n, "vertex parameter for builtins");
  gen_cmd->add_option("--recovery", gen->recovery,
                      "recovery set JSON or file; switches to window mode");
  gen_cmd->add_option("--side", gen->side, "window side length");
  gen_cmd->callback([&g, gen] {
    graph_ptr h;
    if (!gen->recovery.empty()) {
      h = make_window(gen->recovery, gen->side);
    } else {
      stoc_graph* raw = nullptr;
      check(stoc_graph_builtin(gen->name.c_str(), gen->n, &raw));
      h.reset(raw);
    }
    char* info = nullptr;
    check(stoc_graph_info(h.get(), &info));
    emit(g, take(info));
  });

  struct validate_opts {
    std::string in;
  };
  auto val = std::make_shared<validate_opts>();
  auto* val_cmd =
      cmd->add_subcommand("validate", "parse a graph file and report on it");
  val_cmd->fallthrough();
  val_cmd->add_option("--in", val->in, "graph JSON or file")->required();
  val_cmd->callback([&g, val] {
    auto h = load_graph(val->in);
    char* info = nullptr;
    check(stoc_graph_info(h.get(), &info));
    emit(g, take(info));
  });
}

void register_design(CLI::App& app, globals& g) {
  auto* cmd = app.add_subcommand("design", "resolvable designs and families");
  cmd->require_subcommand(1);
  cmd->fallthrough();

  struct gen_opts {
    int q = 3;
    bool family = false;
    std::string builtin;
  };
  auto gen = std::make_shared<gen_opts>();
  auto* gen_cmd = cmd->add_subcommand(
      "gen", "emit an affine design, its family, or a builtin family");
  gen_cmd->fallthrough();
  gen_cmd->add_option("--q", gen->q, "prime order of the affine plane");
  gen_cmd->add_flag("--family", gen->family,
                    "convert the design to its partition family");
  gen_cmd->add_option("--builtin", gen->builtin,
                      "builtin family instead: 2x3 | 3x5");
  gen_cmd->callback([&g, gen] {
    if (!gen->builtin.empty()) {
      stoc_family* raw = nullptr;
      check(stoc_family_builtin(gen->builtin.c_str(), &raw));
      family_ptr f(raw);
      char* text = nullptr;
      check(stoc_family_to_json(f.get(), &text));
      emit(g, take(text));
      return;
    }
    stoc_design* raw = nullptr;
    check(stoc_design_affine(gen->q, &raw));
    design_ptr d(raw);
    if (gen->family) {
      stoc_family* fraw = nullptr;
      check(stoc_family_from_design(d.get(), &fraw));
      family_ptr f(fraw);
      char* text = nullptr;
      check(stoc_family_to_json(f.get(), &text));
      emit(g, take(text));
    } else {
      char* text = nullptr;
      check(stoc_design_to_json(d.get(), &text));
      emit(g, take(text));
    }
  });

  struct verify_opts {
    std::string in;
  };
  auto ver = std::make_shared<verify_opts>();
  auto* ver_cmd = cmd->add_subcommand(
      "verify", "check a design or family file; families carry \"matrices\"");
  ver_cmd->fallthrough();
  ver_cmd->add_option("--in", ver->in, "design or family JSON or file")
      ->required();
  ver_cmd->callback([&g, ver] {
    const std::string text = load_text(ver->in);
    const json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) die(exit_input, "malformed JSON in " + ver->in);
    char* result = nullptr;
    if (j.contains("matrices")) {
      stoc_family* raw = nullptr;
      check(stoc_family_from_json(text.c_str(), &raw));
      family_ptr f(raw);
      check(stoc_family_verify(f.get(), &result));
    } else {
      stoc_design* raw = nullptr;
      check(stoc_design_from_json(text.c_str(), &raw));
      design_ptr d(raw);
      check(stoc_design_verify(d.get(), &result));
    }
    const std::string out = take(result);
    emit(g, out);
    if (!json::parse(out).value("ok", false)) die(exit_mismatch, "verify failed");
  });
}

void emit_built(const globals& g, code_ptr code, const std::string& rate,
                const std::string& code_out) {
  char* size_text = nullptr;
  check(stoc_code_size(code.get(), &size_text));
  json summary = json::parse(take(size_text));
  if (!rate.empty()) summary["declared_rate"] = rate;
  if (!code_out.empty()) {
    char* code_text = nullptr;
    check(stoc_code_to_json(code.get(), &code_text));
    write_file(code_out, take(code_text));
    summary["written"] = code_out;
  }
  emit(g, summary.dump(2) + "\n");
}

void register_code(CLI::App& app, globals& g) {
  auto* cmd = app.add_subcommand("code", "build, verify, and rate codes");
  cmd->require_subcommand(1);
  cmd->fallthrough();

  struct build_opts {
    std::string kind;
    std::string graph;
    std::string parts;
    std::string matching;
    std::string parity;
    std::string recovery;
    std::string lattice;
    std::vector<int> params;
    std::string seed_code;
    std::string code_out;
    int q = 2;
    int n = 0;
    int l = 0;
    int r = 0;
    int side = 0;
    std::size_t sample = 0;
  };
  auto b = std::make_shared<build_opts>();
  auto* build_cmd = cmd->add_subcommand("build", "run a construction");
  build_cmd->fallthrough();
  build_cmd
      ->add_option("--kind", b->kind,
                   "parity | clique-partition | edge-to-vertex | matching | "
                   "gcd | tiling | stacked")
      ->required();
  build_cmd->add_option("--graph", b->graph, "graph JSON or file");
  build_cmd->add_option("--parts", b->parts, "clique partition JSON or file");
  build_cmd->add_option("--matching", b->matching, "matching JSON or file");
  build_cmd->add_option("--parity", b->parity, "parity rows JSON or file");
  build_cmd->add_option("--recovery", b->recovery, "recovery set for windows");
  build_cmd->add_option("--lattice", b->lattice, "l1 | linf | rect");
  build_cmd->add_option("--params", b->params, "lattice parameters");
  build_cmd->add_option("--seed-code", b->seed_code, "seed code for stacked");
  build_cmd->add_option("--code-out", b->code_out, "write the full code here");
  build_cmd->add_option("--q", b->q, "alphabet size");
  build_cmd->add_option("--n", b->n, "length for parity and gcd");
  build_cmd->add_option("--l", b->l, "left reach for gcd");
  build_cmd->add_option("--r", b->r, "right reach for gcd");
  build_cmd->add_option("--side", b->side, "window side");
  build_cmd->add_option("--sample", b->sample,
                        "sample this many words instead of enumerating");
  build_cmd->callback([&g, b] {
    stoc_code* raw = nullptr;
    char* rate = nullptr;
    const std::string mode = mode_json_of(g, b->sample);
    const char* mode_arg = mode.empty() ? nullptr : mode.c_str();
    if (b->kind == "parity") {
      json j;
      j["q"] = b->q;
      j["n"] = b->n;
      j["parity"] = json::parse(load_text(b->parity));
      check(stoc_code_from_json(j.dump().c_str(), &raw));
      emit_built(g, code_ptr(raw), "", b->code_out);
      return;
    }
    if (b->kind == "clique-partition") {
      auto h = load_graph(b->graph);
      check(stoc_build_clique_partition(h.get(), load_text(b->parts).c_str(),
                                        b->q, &raw, &rate));
    } else if (b->kind == "edge-to-vertex") {
      auto h = load_graph(b->graph);
      check(stoc_build_edge_to_vertex(h.get(), b->q, &raw, &rate));
    } else if (b->kind == "matching") {
      auto h = load_graph(b->graph);
      check(stoc_build_matching(h.get(), load_text(b->matching).c_str(), b->q,
                                &raw, &rate));
    } else if (b->kind == "gcd") {
      check(stoc_build_gcd_scheme(b->l, b->r, b->n, b->q, &raw, &rate));
    } else if (b->kind == "tiling") {
      auto w = make_window(b->recovery, b->side);
      stoc_tiling* traw = nullptr;
      const json params(b->params);
      check(stoc_tiling_lattice(b->lattice.c_str(), params.dump().c_str(),
                                b->side, &traw));
      tiling_ptr t(traw);
      check(stoc_build_tiling(w.get(), t.get(), b->q, mode_arg, &raw, &rate));
    } else if (b->kind == "stacked") {
      auto seed = load_code(b->seed_code);
      check(stoc_build_stacked(seed.get(), b->side, mode_arg, &raw, &rate));
    } else {
      die(exit_input, "unknown construction: " + b->kind);
    }
    emit_built(g, code_ptr(raw), take(rate), b->code_out);
  });

  struct verify_opts {
    std::string code;
    std::string graph;
    std::vector<int> vertices;
  };
  auto v = std::make_shared<verify_opts>();
  auto* verify_cmd =
      cmd->add_subcommand("verify", "extensional storage-property check");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--code", v->code, "code JSON or file")->required();
  verify_cmd->add_option("--graph", v->graph, "graph JSON or file")->required();
  verify_cmd->add_option("--vertices", v->vertices,
                         "restrict the check to these vertices");
  verify_cmd->callback([&g, v] {
    auto code = load_code(v->code);
    auto graph = load_graph(v->graph);
    std::string scope;
    if (!v->vertices.empty()) {
      json j;
      j["vertices"] = v->vertices;
      scope = j.dump();
    }
    char* result = nullptr;
    check(stoc_code_verify(code.get(), graph.get(),
                           scope.empty() ? nullptr : scope.c_str(), &result));
    const std::string out = take(result);
    emit(g, out);
    if (!json::parse(out).value("ok", false))
      die(exit_mismatch, "storage property violated");
  });

  struct rate_opts {
    std::string code;
  };
  auto r = std::make_shared<rate_opts>();
  auto* rate_cmd = cmd->add_subcommand("rate", "report the code rate");
  rate_cmd->fallthrough();
  rate_cmd->add_option("--code", r->code, "code JSON or file")->required();
  rate_cmd->callback([&g, r] {
    auto code = load_code(r->code);
    char* text = nullptr;
    check(stoc_code_rate(code.get(), &text));
    emit(g, take(text));
  });
}

struct interleave_opts {
  std::string base;
  std::string family;
  std::string builtin_family;
  std::string coloring;
  std::string seed_code;
  std::string tuple;
  std::string code_out;
  std::size_t sample = 0;
};

igraph_ptr build_igraph(const interleave_opts& o) {
  auto base = load_graph(o.base);
  family_ptr family;
  if (!o.builtin_family.empty()) {
    stoc_family* raw = nullptr;
    check(stoc_family_builtin(o.builtin_family.c_str(), &raw));
    family.reset(raw);
  } else if (!o.family.empty()) {
    stoc_family* raw = nullptr;
    check(stoc_family_from_json(load_text(o.family).c_str(), &raw));
    family.reset(raw);
  } else {
    die(exit_input, "need --family or --builtin-family");
  }
  const std::string coloring =
      o.coloring.empty() ? "" : load_text(o.coloring);
  stoc_igraph* raw = nullptr;
  check(stoc_igraph_build(base.get(), family.get(),
                          coloring.empty() ? nullptr : coloring.c_str(), &raw));
  return igraph_ptr(raw);
}

void register_interleave(CLI::App& app, globals& g) {
  auto* cmd = app.add_subcommand("interleave",
                                 "orthogonal-family product constructions");
  cmd->require_subcommand(1);
  cmd->fallthrough();

  auto add_common = [](CLI::App* sub, std::shared_ptr<interleave_opts> o) {
    sub->add_option("--base", o->base, "base graph JSON or file")->required();
    sub->add_option("--family", o->family, "partition family JSON or file");
    sub->add_option("--builtin-family", o->builtin_family, "2x3 | 3x5");
    sub->add_option("--coloring", o->coloring,
                    "proper coloring JSON; greedy when omitted");
    sub->add_option("--seed-code", o->seed_code, "seed code JSON or file")
        ->required();
  };

  auto b = std::make_shared<interleave_opts>();
  auto* build_cmd =
      cmd->add_subcommand("build", "build the interleaved product code");
  build_cmd->fallthrough();
  add_common(build_cmd, b);
  build_cmd->add_option("--sample", b->sample,
                        "sample this many seed tuples instead of all");
  build_cmd->add_option("--code-out", b->code_out, "write the full code here");
  build_cmd->callback([&g, b] {
    auto ig = build_igraph(*b);
    auto seed = load_code(b->seed_code);
    const std::string mode = mode_json_of(g, b->sample);
    stoc_code* raw = nullptr;
    check(stoc_interleave_code(ig.get(), seed.get(),
                               mode.empty() ? nullptr : mode.c_str(), &raw));
    code_ptr code(raw);
    char* info = nullptr;
    check(stoc_igraph_info(ig.get(), &info));
    char* size_text = nullptr;
    check(stoc_code_size(code.get(), &size_text));
    json summary;
    summary["product"] = json::parse(take(info));
    summary["code"] = json::parse(take(size_text));
    if (!b->code_out.empty()) {
      char* code_text = nullptr;
      check(stoc_code_to_json(code.get(), &code_text));
      write_file(b->code_out, take(code_text));
      summary["written"] = b->code_out;
    }
    emit(g, summary.dump(2) + "\n");
  });

  auto r = std::make_shared<interleave_opts>();
  auto* run_cmd = cmd->add_subcommand(
      "run", "interleave one tuple of seed words into a product word");
  run_cmd->fallthrough();
  add_common(run_cmd, r);
  run_cmd
      ->add_option("--tuple", r->tuple,
                   "seed word index per symbol, e.g. [4,8,0,5,1,3]")
      ->required();
  run_cmd->callback([&g, r] {
    auto ig = build_igraph(*r);
    auto seed = load_code(r->seed_code);
    char* out = nullptr;
    check(stoc_interleave_tuple(ig.get(), seed.get(),
                                load_text(r->tuple).c_str(), &out));
    emit(g, take(out));
  });
}

void register_bounds(CLI::App& app, globals& g) {
  auto* cmd = app.add_subcommand("bounds", "capacity bounds and certificates");
  cmd->require_subcommand(1);
  cmd->fallthrough();

  struct bound_opts {
    std::string graph;
    int q = 2;
    int diameter = 1;
    bool tiling_exists = false;
    std::string recovery;
    int side = 0;
    bool revalidate = false;
  };

  auto add_kind = [&](const std::string& cli_name, const std::string& kind) {
    auto o = std::make_shared<bound_opts>();
    auto* sub = cmd->add_subcommand(cli_name, kind + " bound certificate");
    sub->fallthrough();
    const bool offsets_only = kind == "diff_avoiding";
    auto* graph_opt =
        sub->add_option("--graph", o->graph, "graph JSON or file");
    if (!offsets_only) graph_opt->required();
    if (kind == "oracle")
      sub->add_option("--q", o->q, "alphabet size");
    if (kind == "anticode") {
      sub->add_option("--diameter", o->diameter, "anticode diameter");
      sub->add_flag("--tiling-exists", o->tiling_exists,
                    "assert a tiling by the extremal anticode exists");
    }
    if (offsets_only) {
      sub->add_option("--recovery", o->recovery, "recovery set JSON or file")
          ->required();
      sub->add_option("--side", o->side, "window side")->required();
    }
    sub->add_flag("--revalidate", o->revalidate,
                  "recheck the witness after solving");
    sub->callback([&g, o, kind] {
      json opts = options_with_caps(g);
      graph_ptr h;
      std::string label;
      if (kind == "diff_avoiding") {
        opts["recovery"] = json::parse(load_text(o->recovery));
        opts["side"] = o->side;
        h = make_window(o->recovery, o->side);
        label = "window-" + std::to_string(o->side);
      } else {
        h = load_graph(o->graph);
        label = stem_of(o->graph);
      }
      if (kind == "oracle") opts["q"] = o->q;
      if (kind == "anticode") {
        opts["diameter"] = o->diameter;
        opts["tiling_exists"] = o->tiling_exists;
      }
      char* cert = nullptr;
      check(stoc_bound(h.get(), kind.c_str(), opts.dump().c_str(), &cert));
      const std::string cert_text = take(cert);
      emit_certificate(g, cert_text, label);
      if (o->revalidate) {
        int ok = 0;
        check(stoc_certificate_revalidate(cert_text.c_str(), h.get(), &ok));
        if (!ok) die(exit_mismatch, "witness failed revalidation");
      }
    });
  };

  add_kind("independence", "independence");
  add_kind("mais", "mais");
  add_kind("clique-cover", "clique_cover");
  add_kind("matching", "matching");
  add_kind("anticode", "anticode");
  add_kind("diff-avoiding", "diff_avoiding");
  add_kind("oracle", "oracle");

  struct series_opts {
    std::string recovery;
    std::vector<int> sides;
    std::string kind = "independence";
  };
  auto s = std::make_shared<series_opts>();
  auto* series_cmd =
      cmd->add_subcommand("series", "bound series over growing windows");
  series_cmd->fallthrough();
  series_cmd->add_option("--recovery", s->recovery, "recovery set JSON or file")
      ->required();
  series_cmd->add_option("--sides", s->sides, "window sides")->required();
  series_cmd->add_option("--kind", s->kind, "independence | mais");
  series_cmd->callback([&g, s] {
    const json sides(s->sides);
    char* out = nullptr;
    check(stoc_window_series(load_text(s->recovery).c_str(), s->kind.c_str(),
                             sides.dump().c_str(), &out));
    emit(g, take(out));
  });

  struct report_opts {
    std::vector<std::string> lower;
    std::vector<std::string> upper;
    std::string expect;
  };
  auto rep = std::make_shared<report_opts>();
  auto* report_cmd = cmd->add_subcommand(
      "report", "combine lower and upper certificates into a verdict");
  report_cmd->fallthrough();
  report_cmd->add_option("--lower", rep->lower, "lower certificates")
      ->required();
  report_cmd->add_option("--upper", rep->upper, "upper certificates")
      ->required();
  report_cmd->add_option("--expect", rep->expect, "tight | gap");
  report_cmd->callback([&g, rep] {
    auto collect = [](const std::vector<std::string>& args) {
      json list = json::array();
      for (const auto& a : args) list.push_back(json::parse(load_text(a)));
      return list;
    };
    char* out = nullptr;
    check(stoc_capacity_report(collect(rep->lower).dump().c_str(),
                               collect(rep->upper).dump().c_str(), &out));
    const std::string text = take(out);
    emit(g, text);
    if (!rep->expect.empty() &&
        json::parse(text).value("verdict", "") != rep->expect)
      die(exit_mismatch, "verdict differs from --expect " + rep->expect);
  });
}

void register_lp(CLI::App& app, globals& g) {
  auto* cmd = app.add_subcommand("lp", "fractional cover relaxation");
  cmd->require_subcommand(1);
  cmd->fallthrough();

  struct lp_opts {
    std::string graph;
    int tau = 2;
    int max_support = 2;
    bool closure_includes_a = false;
  };
  auto o = std::make_shared<lp_opts>();
  auto* bound_cmd = cmd->add_subcommand("bound", "solve the cover program");
  bound_cmd->fallthrough();
  bound_cmd->add_option("--graph", o->graph, "graph JSON or file")->required();
  bound_cmd->add_option("--tau", o->tau, "color count");
  bound_cmd->add_option("--max-support", o->max_support,
                        "largest generator support");
  bound_cmd->add_flag("--closure-includes-a", o->closure_includes_a,
                      "closures keep the generating set");
  bound_cmd->callback([&g, o] {
    auto h = load_graph(o->graph);
    char* out = nullptr;
    check(stoc_lp_bound(h.get(), o->tau, o->max_support,
                        o->closure_includes_a ? 1 : 0, &out));
    emit(g, take(out));
  });
}

void register_oracle(CLI::App& app, globals& g) {
  struct oracle_opts {
    std::string graph;
    int q = 2;
    std::string code_out;
  };
  auto o = std::make_shared<oracle_opts>();
  auto* cmd = app.add_subcommand(
      "oracle", "largest storage code by exhaustive search");
  cmd->fallthrough();
  cmd->add_option("--graph", o->graph, "graph JSON or file")->required();
  cmd->add_option("--q", o->q, "alphabet size");
  cmd->add_option("--code-out", o->code_out, "write the best code here");
  cmd->callback([&g, o] {
    auto h = load_graph(o->graph);
    stoc_code* raw = nullptr;
    char* cert = nullptr;
    check(stoc_oracle_max_code(h.get(), o->q, &raw, &cert));
    code_ptr code(raw);
    if (!o->code_out.empty()) {
      char* text = nullptr;
      check(stoc_code_to_json(code.get(), &text));
      write_file(o->code_out, take(text));
    }
    emit_certificate(g, take(cert), stem_of(o->graph));
  });
}

void register_experiment(CLI::App& app, globals& g) {
  auto* cmd = app.add_subcommand("experiment", "pinned reproducible presets");
  cmd->require_subcommand(1);
  cmd->fallthrough();

  auto* list_cmd = cmd->add_subcommand("list", "available presets");
  list_cmd->fallthrough();
  list_cmd->callback([&g] {
    char* out = nullptr;
    check(stoc_experiment_list(&out));
    const std::string text = take(out);
    if (g.format == "json") {
      emit(g, text);
      return;
    }
    const json list = json::parse(text);
    std::ostringstream os;
    if (g.format == "csv") {
      os << "name,summary\n";
      for (const auto& p : list)
        os << csv_escape(p.value("name", "")) << ','
           << csv_escape(p.value("summary", "")) << '\n';
    } else {
      std::size_t width = 0;
      for (const auto& p : list)
        width = std::max(width, p.value("name", "").size());
      for (const auto& p : list) {
        const std::string name = p.value("name", "");
        os << name << std::string(width - name.size() + 2, ' ')
           << p.value("summary", "") << '\n';
      }
    }
    emit(g, os.str());
  });

  struct run_opts {
    std::vector<std::string> names;
    bool all = false;
  };
  auto o = std::make_shared<run_opts>();
  auto* run_cmd = cmd->add_subcommand("run", "run presets and report rows");
  run_cmd->fallthrough();
  run_cmd->add_option("names", o->names, "preset names");
  run_cmd->add_flag("--all", o->all, "run every preset");
  run_cmd->callback([&g, o] {
    std::vector<std::string> names = o->names;
    if (o->all) {
      char* out = nullptr;
      check(stoc_experiment_list(&out));
      names.clear();
      for (const auto& p : json::parse(take(out)))
        names.push_back(p.value("name", ""));
    }
    if (names.empty()) die(exit_input, "no presets named; try --all");
    bool all_ok = true;
    std::string combined;
    json array = json::array();
    for (std::size_t i = 0; i < names.size(); ++i) {
      char* out = nullptr;
      int ok = 0;
      check(stoc_experiment_run(names[i].c_str(), g.seed, g.format.c_str(),
                                &out, &ok));
      all_ok = all_ok && ok;
      std::string text = take(out);
      if (g.format == "json") {
        array.push_back(json::parse(text));
      } else if (g.format == "csv" && i > 0) {
        // one header only
        const auto newline = text.find('\n');
        combined += text.substr(newline + 1);
      } else {
        if (i > 0) combined += "\n";
        combined += text;
      }
    }
    if (g.format == "json")
      combined = names.size() == 1 ? array.front().dump(2) + "\n"
                                   : array.dump(2) + "\n";
    emit(g, combined);
    if (!all_ok) die(exit_mismatch, "some preset rows failed");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"storage codes on graphs and windows: constructions, "
               "certificates, and pinned experiments"};
  app.require_subcommand(1);
  globals g;
  app.add_option("--format", g.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", g.seed, "seed for sampled constructions");
  app.add_option("--out", g.out, "write primary output to this file");
  app.add_option("--cap-override", g.cap_overrides,
                 "raise a solver cap, name=value; bounded")
      ->expected(1)
      ->allow_extra_args(false);
  app.set_version_flag("--version", [] { return std::string(stoc_version()); });

  register_graph(app, g);
  register_design(app, g);
  register_code(app, g);
  register_interleave(app, g);
  register_bounds(app, g);
  register_lp(app, g);
  register_oracle(app, g);
  register_experiment(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const cli_error& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_pass;
}
