#include "semorient/hit_backend.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semorient/errors.h"

namespace semorient {

FixtureBackend FixtureBackend::Parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid fixture JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("fixture must be a JSON object");
  std::map<std::string, uint64_t> counts;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_unsigned()) {
      throw FormatError("fixture count must be a non-negative integer: " + key);
    }
    // Round-trip through the parser so keys are validated and normalized.
    counts[HitQuery::FromCanonical(key).Canonical()] = value.get<uint64_t>();
  }
  return FixtureBackend(std::move(counts));
}

FixtureBackend FixtureBackend::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fixture: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

uint64_t FixtureBackend::Hits(const HitQuery& query) {
  auto it = counts_.find(query.Canonical());
  if (it == counts_.end()) {
    throw BackendUnavailable("no fixture entry for " + query.Canonical());
  }
  return it->second;
}

}  // namespace semorient
