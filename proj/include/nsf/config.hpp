#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsf/io.hpp"
#include "nsf/simulate.hpp"

namespace nsf {

struct RunConfig {
    SimulationSetup setup;
    std::uint32_t seed = 42;
};

// Unknown keys are rejected; missing keys take the defaults above so that the
// echoed document always lists every value explicitly.
RunConfig parse_config(const io::ordered_json& doc);
RunConfig load_config(const std::string& path);

io::ordered_json config_json(const RunConfig& cfg);
std::string config_hash(const RunConfig& cfg);  // hex FNV-1a of the echoed document

}  // namespace nsf
