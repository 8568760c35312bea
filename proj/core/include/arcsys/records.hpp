#pragma once

// JSON persistence (schema in docs/schema.md).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcsys/classification.hpp"
#include "arcsys/system.hpp"

namespace arcsys {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kSurfaceTag = "sphere-4";

struct SystemRecord {
  std::string name;  // optional identifier, used by reference files
  ArcSystem system;
  std::string label;
  std::map<std::string, std::string> tags;
};

// Serialized with a derived block (degree vector, |J|, fingerprint) that is
// recomputed and compared on load.
std::string systems_to_json(const std::vector<SystemRecord>& records);
// An empty or whitespace-only document is an empty list. Throws SchemaError.
std::vector<SystemRecord> systems_from_json(const std::string& text);

std::string orbit_report_to_json(int k, std::size_t input_count, const std::vector<OrbitClass>& classes);

std::string read_text_file(const std::string& path);
// Writes to a sibling temporary file and renames it into place.
void write_text_file_atomic(const std::string& path, const std::string& content);

}  // namespace arcsys
