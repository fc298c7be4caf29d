#pragma once

#include <string>
#include <vector>

#include "posft/domains.hpp"

namespace posft {
namespace presets {

/// Bundled map configurations (the fig* gallery). Windows of the zoomed
/// presets were chosen so the small feasibility islands are resolved at the
/// default grid.
domains::ScanConfig map_preset(const std::string& name);
std::vector<std::string> map_preset_names();
const char* map_preset_note(const std::string& name);

/// The stored oscillating coefficient set (multipliers of the printed
/// integer brackets of orders 0, 4, 8, 12).
const std::vector<std::pair<int, const char*>>& golden_bracket_multipliers();

/// A stored class-0 point of the joint positivity region of the
/// (0,2,4) mixture, used by the mixed-parity example.
std::pair<long double, long double> mixed_parity_demo_angles();

}  // namespace presets
}  // namespace posft
