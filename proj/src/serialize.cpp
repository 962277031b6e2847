#include "serialize.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace stoc {

namespace {

const json& member(const json& j, const char* key, const std::string& at) {
  if (!j.is_object()) fail(errc::parse, "object expected", at);
  const auto it = j.find(key);
  if (it == j.end())
    fail(errc::parse, std::string("missing field \"") + key + "\"", at);
  return *it;
}

int get_int(const json& j, const std::string& at) {
  if (!j.is_number_integer()) fail(errc::parse, "integer expected", at);
  return j.get<int>();
}

bool get_bool(const json& j, const std::string& at) {
  if (!j.is_boolean()) fail(errc::parse, "boolean expected", at);
  return j.get<bool>();
}

std::string get_string(const json& j, const std::string& at) {
  if (!j.is_string()) fail(errc::parse, "string expected", at);
  return j.get<std::string>();
}

const json& get_array(const json& j, const std::string& at) {
  if (!j.is_array()) fail(errc::parse, "array expected", at);
  return j;
}

std::vector<int> int_vector(const json& j, const std::string& at) {
  get_array(j, at);
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_int(j[i], at + "/" + std::to_string(i)));
  return out;
}

std::array<int, 2> int_pair(const json& j, const std::string& at) {
  get_array(j, at);
  if (j.size() != 2) fail(errc::parse, "pair expected", at);
  return {get_int(j[0], at + "/0"), get_int(j[1], at + "/1")};
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

}  // namespace

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse, "malformed JSON");
  return j;
}

json graph_to_json(const graph& g) {
  json j;
  j["n"] = g.n;
  j["directed"] = g.directed;
  json edges = json::array();
  for (const auto& e : edge_list(g)) edges.push_back({e[0], e[1]});
  j["edges"] = std::move(edges);
  if (g.has_labels()) {
    json labels = json::array();
    for (const auto& l : g.labels) labels.push_back({l[0], l[1]});
    j["labels"] = std::move(labels);
  }
  return j;
}

graph graph_from_json(const json& j) {
  const int n = get_int(member(j, "n", ""), "/n");
  const bool directed = get_bool(member(j, "directed", ""), "/directed");
  const auto& je = get_array(member(j, "edges", ""), "/edges");
  std::vector<std::array<int, 2>> edges;
  edges.reserve(je.size());
  for (std::size_t i = 0; i < je.size(); ++i)
    edges.push_back(int_pair(je[i], "/edges/" + std::to_string(i)));
  std::vector<std::array<int, 2>> labels;
  if (j.contains("labels")) {
    const auto& jl = get_array(j["labels"], "/labels");
    if (static_cast<int>(jl.size()) != n)
      fail(errc::parse, "one label per vertex expected", "/labels");
    for (std::size_t i = 0; i < jl.size(); ++i)
      labels.push_back(int_pair(jl[i], "/labels/" + std::to_string(i)));
  }
  try {
    return graph_from_edges(n, edges, directed, std::move(labels));
  } catch (const error& e) {
    fail(errc::parse, e.what(), "/edges");
  }
}

json design_to_json(const resolvable_design& d) {
  json j;
  j["v"] = d.v;
  j["k"] = d.k;
  j["classes"] = d.classes;
  return j;
}

resolvable_design design_from_json(const json& j) {
  resolvable_design d;
  d.v = get_int(member(j, "v", ""), "/v");
  d.k = get_int(member(j, "k", ""), "/k");
  const auto& jc = get_array(member(j, "classes", ""), "/classes");
  for (std::size_t ci = 0; ci < jc.size(); ++ci) {
    const std::string at = "/classes/" + std::to_string(ci);
    const auto& jcl = get_array(jc[ci], at);
    std::vector<std::vector<int>> blocks;
    for (std::size_t bi = 0; bi < jcl.size(); ++bi)
      blocks.push_back(int_vector(jcl[bi], at + "/" + std::to_string(bi)));
    d.classes.push_back(std::move(blocks));
  }
  return d;
}

json family_to_json(const partition_family& f) {
  json j;
  j["k"] = f.k;
  j["s"] = f.s;
  j["matrices"] = f.matrices;
  return j;
}

partition_family family_from_json(const json& j) {
  partition_family f;
  f.k = get_int(member(j, "k", ""), "/k");
  f.s = get_int(member(j, "s", ""), "/s");
  const auto& jm = get_array(member(j, "matrices", ""), "/matrices");
  for (std::size_t mi = 0; mi < jm.size(); ++mi) {
    const std::string at = "/matrices/" + std::to_string(mi);
    const auto& jmat = get_array(jm[mi], at);
    std::vector<std::vector<int>> rows;
    for (std::size_t ri = 0; ri < jmat.size(); ++ri)
      rows.push_back(int_vector(jmat[ri], at + "/" + std::to_string(ri)));
    f.matrices.push_back(std::move(rows));
  }
  return f;
}

json code_to_json(const code_t& c) {
  json j;
  j["q"] = c.q;
  j["level"] = c.level;
  j["n"] = c.n;
  json words = json::array();
  for (std::size_t w = 0; w < c.size(); ++w) {
    json word = json::array();
    const auto* p = c.word(w);
    for (int i = 0; i < c.word_width(); ++i) word.push_back(int{p[i]});
    words.push_back(std::move(word));
  }
  j["words"] = std::move(words);
  return j;
}

code_t code_from_json(const json& j) {
  const int q = get_int(member(j, "q", ""), "/q");
  const int level = get_int(member(j, "level", ""), "/level");
  const int n = get_int(member(j, "n", ""), "/n");
  const auto& jw = get_array(member(j, "words", ""), "/words");
  if (n < 0 || level < 1) fail(errc::parse, "bad dimensions", "/n");
  std::vector<std::uint8_t> digits;
  const std::size_t width = static_cast<std::size_t>(n) * level;
  digits.reserve(jw.size() * width);
  for (std::size_t w = 0; w < jw.size(); ++w) {
    const std::string at = "/words/" + std::to_string(w);
    const auto& word = get_array(jw[w], at);
    if (word.size() != width) fail(errc::parse, "wrong word width", at);
    for (std::size_t i = 0; i < width; ++i) {
      const int d = get_int(word[i], at + "/" + std::to_string(i));
      if (d < 0 || d >= q) fail(errc::parse, "digit out of range",
                                at + "/" + std::to_string(i));
      digits.push_back(static_cast<std::uint8_t>(d));
    }
  }
  try {
    return make_code(q, level, n, std::move(digits));
  } catch (const error& e) {
    fail(errc::parse, e.what(), "/words");
  }
}

code_t linear_code_from_json(const json& j) {
  const int q = get_int(member(j, "q", ""), "/q");
  const int n = get_int(member(j, "n", ""), "/n");
  const auto& jp = get_array(member(j, "parity", ""), "/parity");
  std::vector<std::vector<std::uint8_t>> parity;
  for (std::size_t r = 0; r < jp.size(); ++r) {
    const std::string at = "/parity/" + std::to_string(r);
    const auto row = int_vector(jp[r], at);
    if (static_cast<int>(row.size()) != n)
      fail(errc::parse, "row length must equal n", at);
    std::vector<std::uint8_t> digits;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 0 || row[i] >= q)
        fail(errc::parse, "entry out of range", at + "/" + std::to_string(i));
      digits.push_back(static_cast<std::uint8_t>(row[i]));
    }
    parity.push_back(std::move(digits));
  }
  return code_from_parity(q, n, parity);
}

json tiling_to_json(const tiling_t& t) {
  json j;
  j["dim"] = t.dim;
  j["side"] = t.side;
  j["region"] = t.covers == tiling_region::all ? "all" : "interior";
  json tiles = json::array();
  for (const auto& tile : t.tiles) {
    json cells = json::array();
    for (const auto& c : tile) cells.push_back({c[0], c[1]});
    tiles.push_back(std::move(cells));
  }
  j["tiles"] = std::move(tiles);
  return j;
}

tiling_t tiling_from_json(const json& j) {
  tiling_t t;
  t.dim = get_int(member(j, "dim", ""), "/dim");
  t.side = get_int(member(j, "side", ""), "/side");
  const std::string region = get_string(member(j, "region", ""), "/region");
  if (region == "all") t.covers = tiling_region::all;
  else if (region == "interior") t.covers = tiling_region::interior;
  else fail(errc::parse, "region must be \"all\" or \"interior\"", "/region");
  const auto& jt = get_array(member(j, "tiles", ""), "/tiles");
  for (std::size_t ti = 0; ti < jt.size(); ++ti) {
    const std::string at = "/tiles/" + std::to_string(ti);
    const auto& jtile = get_array(jt[ti], at);
    std::vector<std::array<int, 2>> cells;
    for (std::size_t ci = 0; ci < jtile.size(); ++ci)
      cells.push_back(int_pair(jtile[ci], at + "/" + std::to_string(ci)));
    t.tiles.push_back(std::move(cells));
  }
  return t;
}

json recovery_to_json(const recovery_set& r) {
  json j;
  j["dim"] = r.dim;
  json offsets = json::array();
  for (const auto& o : r.offsets) offsets.push_back({o[0], o[1]});
  j["offsets"] = std::move(offsets);
  j["desc"] = r.desc;
  return j;
}

recovery_set recovery_from_json(const json& j) {
  if (j.contains("kind")) {
    const std::string kind = get_string(j["kind"], "/kind");
    auto field = [&](const char* key) {
      return get_int(member(j, key, ""), std::string("/") + key);
    };
    if (kind == "interval") return interval_set(field("l"), field("r"));
    if (kind == "pair") return pair_set(field("l"), field("r"));
    if (kind == "l1") return l1_ball_set(field("radius"));
    if (kind == "linf") return linf_ball_set(field("radius"));
    if (kind == "rect")
      return rect_set(field("l"), field("r"), field("b"), field("a"));
    if (kind == "axial")
      return axial_set(field("l"), field("r"), field("b"), field("a"));
    fail(errc::parse, "unknown recovery kind: " + kind, "/kind");
  }
  recovery_set r;
  r.dim = get_int(member(j, "dim", ""), "/dim");
  if (r.dim != 1 && r.dim != 2)
    fail(errc::parse, "dim must be 1 or 2", "/dim");
  const auto& jo = get_array(member(j, "offsets", ""), "/offsets");
  for (std::size_t i = 0; i < jo.size(); ++i) {
    const std::string at = "/offsets/" + std::to_string(i);
    const auto o = int_pair(jo[i], at);
    if (o[0] == 0 && o[1] == 0) fail(errc::parse, "origin offset", at);
    if (r.dim == 1 && o[1] != 0)
      fail(errc::parse, "one-dimensional offsets use [d, 0]", at);
    r.offsets.push_back(o);
  }
  if (r.offsets.empty()) fail(errc::parse, "empty recovery set", "/offsets");
  if (j.contains("desc")) r.desc = get_string(j["desc"], "/desc");
  return r;
}

json certificate_to_json(const bound_certificate& c) {
  json j;
  j["kind"] = c.kind;
  j["direction"] = c.is_upper ? "upper" : "lower";
  j["value"] = rational_str(c.value);
  j["raw"] = c.raw.str();
  j["witness"] = c.witness;
  j["flags"] = c.flags;
  return j;
}

bound_certificate certificate_from_json(const json& j) {
  bound_certificate c;
  c.kind = get_string(member(j, "kind", ""), "/kind");
  const std::string dir = get_string(member(j, "direction", ""), "/direction");
  if (dir != "upper" && dir != "lower")
    fail(errc::parse, "direction must be \"upper\" or \"lower\"", "/direction");
  c.is_upper = dir == "upper";
  c.value = parse_rational(get_string(member(j, "value", ""), "/value"));
  try {
    c.raw = bigint(get_string(member(j, "raw", ""), "/raw"));
  } catch (const std::exception&) {
    fail(errc::parse, "malformed integer", "/raw");
  }
  c.witness = member(j, "witness", "");
  const auto& jf = get_array(member(j, "flags", ""), "/flags");
  for (std::size_t i = 0; i < jf.size(); ++i)
    c.flags.push_back(get_string(jf[i], "/flags/" + std::to_string(i)));
  return c;
}

std::string certificate_csv_header() {
  return "graph,kind,direction,value,raw,witness_size";
}

std::string certificate_csv_row(const std::string& graph_name,
                                const bound_certificate& c) {
  std::size_t wsize = 0;
  for (const char* key : {"set", "parts", "edges", "words"})
    if (c.witness.contains(key) && c.witness[key].is_array())
      wsize = std::max(wsize, c.witness[key].size());
  std::ostringstream os;
  os << csv_escape(graph_name) << ',' << csv_escape(c.kind) << ','
     << (c.is_upper ? "upper" : "lower") << ','
     << csv_escape(rational_str(c.value)) << ',' << c.raw.str() << ','
     << wsize;
  return os.str();
}

json verify_result_to_json(const verify_result& r) {
  json j;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["vertex"] = r.vertex;
    j["word_x"] = r.word_x;
    j["word_y"] = r.word_y;
  }
  return j;
}

json capacity_report_to_json(const capacity_report& r) {
  json j;
  json lower = json::array(), upper = json::array();
  for (const auto& c : r.lower) lower.push_back(certificate_to_json(c));
  for (const auto& c : r.upper) upper.push_back(certificate_to_json(c));
  j["lower"] = std::move(lower);
  j["upper"] = std::move(upper);
  j["best_lower"] = rational_str(r.best_lower);
  j["best_upper"] = rational_str(r.best_upper);
  j["gap"] = rational_str(r.gap);
  j["verdict"] = r.verdict;
  return j;
}

json window_series_to_json(const window_series_t& s) {
  json j;
  json entries = json::array();
  for (const auto& e : s.entries) {
    json je;
    je["side"] = e.side;
    je["set_size"] = e.set_size.str();
    je["value"] = rational_str(e.value);
    je["slack"] = rational_str(e.slack);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["limsup_estimate"] = rational_str(s.limsup_estimate);
  return j;
}

json lp_report_to_json(const lp_report& r) {
  json j;
  j["value"] = rational_str(r.value);
  j["grid_value"] = rational_str(r.grid_value);
  j["total"] = rational_str(r.total);
  j["tau"] = r.tau;
  j["max_support"] = r.max_support;
  j["closure_includes_a"] = r.closure_includes_a;
  j["gadget_count"] = r.gadget_count;
  j["var_count"] = r.var_count;
  j["flags"] = r.flags;
  j["support"] = r.support;
  return j;
}

bool report_t::ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const report_row& r) { return r.pass; });
}

void report_t::check(const std::string& item, const std::string& expected,
                     const std::string& got, const std::string& provenance) {
  rows.push_back({item, expected, got, provenance, expected == got});
}

void report_t::note(const std::string& item, const std::string& got,
                    const std::string& provenance) {
  rows.push_back({item, "", got, provenance, true});
}

json report_to_json(const report_t& r) {
  json j;
  j["schema"] = "stoc-report/1";
  j["preset"] = r.preset;
  j["seed"] = r.seed;
  j["ok"] = r.ok();
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr;
    jr["item"] = row.item;
    jr["expected"] = row.expected;
    jr["got"] = row.got;
    jr["provenance"] = row.provenance;
    jr["verdict"] = row.expected.empty() ? "info" : (row.pass ? "pass" : "fail");
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  if (!r.extra.is_null()) j["extra"] = r.extra;
  return j;
}

std::string report_csv(const report_t& r) {
  std::ostringstream os;
  os << "preset,item,expected,got,provenance,verdict\n";
  for (const auto& row : r.rows) {
    const std::string verdict =
        row.expected.empty() ? "info" : (row.pass ? "pass" : "fail");
    os << csv_escape(r.preset) << ',' << csv_escape(row.item) << ','
       << csv_escape(row.expected) << ',' << csv_escape(row.got) << ','
       << csv_escape(row.provenance) << ',' << verdict << '\n';
  }
  return os.str();
}

std::string report_table(const report_t& r) {
  const std::array<std::string, 5> head = {"item", "expected", "got",
                                           "provenance", "verdict"};
  std::vector<std::array<std::string, 5>> cells;
  for (const auto& row : r.rows) {
    const std::string verdict =
        row.expected.empty() ? "info" : (row.pass ? "pass" : "fail");
    cells.push_back({row.item, row.expected, row.got, row.provenance, verdict});
  }
  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < 5; ++c) {
    width[c] = head[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  os << "preset: " << r.preset << "  seed: " << r.seed << "  ok: "
     << (r.ok() ? "yes" : "no") << '\n';
  auto line = [&](const std::array<std::string, 5>& row) {
    for (std::size_t c = 0; c < 5; ++c) {
      os << row[c] << std::string(width[c] - row[c].size(), ' ');
      os << (c + 1 < 5 ? "  " : "");
    }
    os << '\n';
  };
  line(head);
  for (std::size_t c = 0; c < 5; ++c)
    os << std::string(width[c], '-') << (c + 1 < 5 ? "  " : "");
  os << '\n';
  for (const auto& row : cells) line(row);
  return os.str();
}

std::string render_report(const report_t& r, const std::string& format) {
  if (format == "json") return dump_json(report_to_json(r));
  if (format == "csv") return report_csv(r);
  if (format == "table") return report_table(r);
  fail(errc::invalid_argument, "unknown format: " + format);
}

}  // namespace stoc
