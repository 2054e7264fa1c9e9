#pragma once

#include <string>

#include <json.hpp>

namespace beambnf {

// Fixed float formatting for deterministic output: 17 significant digits in
// machine-readable files, 6 in human tables.
std::string fmt_full(double x);
std::string fmt_human(double x);

// Serializes with fmt_full applied to every number (nlohmann's default dump
// would use shortest-round-trip digits instead).
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace beambnf
