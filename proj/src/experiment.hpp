#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace stoc {

struct preset_info {
  std::string name;
  std::string summary;
};

// Registered presets in manifest order.
const std::vector<preset_info>& preset_list();

// Runs one preset.  Identical name and seed give a byte-identical report.
report_t run_experiment(const std::string& name, std::uint64_t seed = 0);

}  // namespace stoc
