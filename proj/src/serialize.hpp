#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "code.hpp"
#include "construct.hpp"
#include "design.hpp"
#include "graph.hpp"
#include "lp.hpp"

namespace stoc {

using json = nlohmann::json;

// Stable dump: two-space indent, keys sorted, trailing newline.
std::string dump_json(const json& j);
json parse_json(const std::string& text);

json graph_to_json(const graph& g);
graph graph_from_json(const json& j);

json design_to_json(const resolvable_design& d);
resolvable_design design_from_json(const json& j);

json family_to_json(const partition_family& f);
partition_family family_from_json(const json& j);

json code_to_json(const code_t& c);
code_t code_from_json(const json& j);

// Parity-check form: the code is the kernel of the matrix over GF(q).
code_t linear_code_from_json(const json& j);

json tiling_to_json(const tiling_t& t);
tiling_t tiling_from_json(const json& j);

// Factory form {"kind": "interval", "l": 2, "r": 2} or raw
// {"dim", "offsets"}.  Emitted as the raw form plus the description.
json recovery_to_json(const recovery_set& r);
recovery_set recovery_from_json(const json& j);

json certificate_to_json(const bound_certificate& c);
bound_certificate certificate_from_json(const json& j);

json verify_result_to_json(const verify_result& r);
json capacity_report_to_json(const capacity_report& r);
json window_series_to_json(const window_series_t& s);
json lp_report_to_json(const lp_report& r);

std::string certificate_csv_header();
std::string certificate_csv_row(const std::string& graph_name,
                                const bound_certificate& c);

struct report_row {
  std::string item;
  std::string expected;
  std::string got;
  std::string provenance;
  bool pass = false;
};

struct report_t {
  std::string preset;
  std::uint64_t seed = 0;
  std::vector<report_row> rows;
  json extra;

  bool ok() const;
  void check(const std::string& item, const std::string& expected,
             const std::string& got, const std::string& provenance);
  void note(const std::string& item, const std::string& got,
            const std::string& provenance);
};

json report_to_json(const report_t& r);
std::string report_csv(const report_t& r);
std::string report_table(const report_t& r);
std::string render_report(const report_t& r, const std::string& format);

}  // namespace stoc
