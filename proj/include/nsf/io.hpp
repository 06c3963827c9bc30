#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsf/diagnostics.hpp"
#include "nsf/gas.hpp"
#include "nsf/simulate.hpp"

namespace nsf::io {

using ordered_json = nlohmann::ordered_json;

// shortest round-trip decimal (17 significant digits)
std::string format_double(double x);

std::uint64_t fnv1a(const std::string& s);

// CSV with '#'-prefixed metadata lines, comma-separated 17-digit floats.
// All columns must share a length.
void write_csv(const std::string& path, const std::vector<std::string>& metadata,
               const std::vector<std::string>& column_names,
               const std::vector<const std::vector<double>*>& columns);

ordered_json gas_json(const GasParams& gas);
ordered_json state_json(const PrimState& s);
ordered_json end_states_json(const GasParams& gas, const EndStates& ends);

void write_json(const std::string& path, const ordered_json& doc);

void write_diagnostics_csv(const std::string& path, const std::vector<std::string>& metadata,
                           const std::vector<DiagnosticsRecord>& history);

void write_snapshot_csv(const std::string& path, const std::vector<std::string>& metadata,
                        const Grid& grid, const Snapshot& snap);

}  // namespace nsf::io
