#pragma once

#include <string>

#include <json.hpp>

namespace cdlab {

/// Directory the golden tables load from: explicit override, then the
/// CDLAB_FIXTURES environment variable, then the build-time default.
std::string fixtures_dir(const std::string& override_dir = "");

/// Parse fixtures/<name>.json, preserving key order. Throws runtime_error
/// with the resolved path when the file is missing or malformed.
nlohmann::ordered_json load_fixture(const std::string& name,
                                    const std::string& override_dir = "");

}  // namespace cdlab
