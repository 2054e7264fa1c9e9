#pragma once

#include <optional>
#include <string>
#include <vector>

namespace beambnf {

/// Flat "key = value" configuration files with [section] headers.  Sections
/// may repeat (table rows).  Consumers declare their allowed keys; anything
/// else is rejected.

struct ConfigSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;  // throws if missing
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double fallback) const;
    long long get_int(const std::string& key) const;
    long long get_int_or(const std::string& key, long long fallback) const;

    // Throws listing offending keys when an entry is not in `allowed`.
    void require_keys(const std::vector<std::string>& allowed) const;
};

struct Config {
    std::vector<ConfigSection> sections;

    static Config parse(const std::string& text);
    static Config parse_file(const std::string& path);

    const ConfigSection* find(const std::string& name) const;  // first match or nullptr
    std::vector<const ConfigSection*> find_all(const std::string& name) const;
};

}  // namespace beambnf
