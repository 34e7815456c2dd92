#include "cfdyn/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfdyn/errors.hpp"

namespace cfdyn {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, e - b + 1);
}

} // namespace

VerifyConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file: " + path);
    VerifyConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "samples") cfg.samples = std::stoi(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "epsilon") cfg.epsilon = std::stod(value);
            else if (key == "grid") cfg.grid = std::stoi(value);
            // unknown keys are intentionally ignored
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": bad value for " + key +
                             ": '" + value + "'");
        }
    }
    return cfg;
}

VerifyConfig load_default_config() {
    if (const char* env = std::getenv("CFDYN_CONFIG")) return load_config(env);
    if (std::filesystem::exists("verify.toml")) return load_config("verify.toml");
    return {};
}

} // namespace cfdyn
