#include "cdlab/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#ifndef CDLAB_FIXTURES_DIR
#define CDLAB_FIXTURES_DIR "fixtures"
#endif

namespace cdlab {

std::string fixtures_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("CDLAB_FIXTURES"); env && *env) return env;
    return CDLAB_FIXTURES_DIR;
}

nlohmann::ordered_json load_fixture(const std::string& name,
                                    const std::string& override_dir) {
    std::string path = fixtures_dir(override_dir) + "/" + name + ".json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    try {
        return nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("fixture " + path + ": " + e.what());
    }
}

}  // namespace cdlab
