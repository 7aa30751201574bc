#pragma once

// key=value config files. Each entry becomes a `--key=value` flag placed
// right after the subcommand, skipped when the command line already sets that
// key, so explicit flags win. Unknown keys then surface as ordinary
// unknown-flag errors.

#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symfloq {

struct ConfigEntry {
    std::string key, value;
};

namespace detail {
inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}
}  // namespace detail

// Blank lines and lines starting with '#' are ignored.
inline std::vector<ConfigEntry> parse_config(std::istream& in) {
    std::vector<ConfigEntry> out;
    std::string line;
    for (int ln = 1; std::getline(in, line); ++ln) {
        line = detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(ln) + ": expected key=value");
        std::string key = detail::trim(line.substr(0, eq));
        if (key.rfind("--", 0) == 0) key = key.substr(2);
        if (key.empty()) throw std::invalid_argument("config line " + std::to_string(ln) + ": empty key");
        out.push_back({key, detail::trim(line.substr(eq + 1))});
    }
    return out;
}

inline std::vector<ConfigEntry> load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file " + path);
    return parse_config(f);
}

namespace detail {
inline bool sets_key(const std::vector<std::string>& args, const std::string& key) {
    const std::string flag = "--" + key;
    for (const auto& a : args)
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
}

inline std::string config_path(const std::vector<std::string>& args) {
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a path");
            return args[i + 1];
        }
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    return "";
}
}  // namespace detail

// args excludes the program name; args[0] is the subcommand when present.
inline std::vector<std::string> inject_config(const std::vector<std::string>& args) {
    const std::string path = detail::config_path(args);
    if (path.empty()) return args;
    std::vector<std::string> extra;
    for (const auto& e : load_config(path))
        if (e.key != "config" && !detail::sets_key(args, e.key)) extra.push_back("--" + e.key + "=" + e.value);
    std::vector<std::string> out = args;
    const size_t at = (!args.empty() && args[0].rfind("-", 0) != 0) ? 1 : 0;
    out.insert(out.begin() + static_cast<long>(at), extra.begin(), extra.end());
    return out;
}

}  // namespace symfloq
