#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace lk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "lelong-kit/1";
inline constexpr const char* kLibraryVersion = "0.1.0";

// Shared JSON envelope for every analysis report. Provenance records enough
// to reproduce the run: input text, variable order, order kind, seed.
inline Json report_envelope(const std::string& subcommand) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = "lelong-kit";
  j["version"] = kLibraryVersion;
  j["subcommand"] = subcommand;
  j["provenance"] = Json::object();
  return j;
}

// Deterministic serialization: two-space indent, keys in insertion order.
inline std::string emit_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lk
