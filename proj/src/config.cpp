#include "beambnf/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace beambnf {

namespace {
std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}
}  // namespace

bool ConfigSection::has(const std::string& key) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const auto& e) { return e.first == key; });
}

std::string ConfigSection::get(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    throw std::runtime_error("config: missing key '" + key + "' in section [" + name + "]");
}

std::string ConfigSection::get_or(const std::string& key, const std::string& fallback) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    return fallback;
}

double ConfigSection::get_double(const std::string& key) const {
    const std::string v = get(key);
    try {
        std::size_t pos = 0;
        const double out = std::stod(v, &pos);
        if (trim(v.substr(pos)).empty()) return out;
    } catch (const std::logic_error&) {
    }
    throw std::runtime_error("config: key '" + key + "' is not a number: '" + v + "'");
}

double ConfigSection::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

long long ConfigSection::get_int(const std::string& key) const {
    const std::string v = get(key);
    try {
        std::size_t pos = 0;
        const long long out = std::stoll(v, &pos);
        if (trim(v.substr(pos)).empty()) return out;
    } catch (const std::logic_error&) {
    }
    throw std::runtime_error("config: key '" + key + "' is not an integer: '" + v + "'");
}

long long ConfigSection::get_int_or(const std::string& key, long long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

void ConfigSection::require_keys(const std::vector<std::string>& allowed) const {
    std::string offenders;
    for (const auto& [k, v] : entries) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            offenders += (offenders.empty() ? "" : ", ") + k;
    }
    if (!offenders.empty())
        throw std::runtime_error("config: unknown key(s) in section [" + name + "]: " + offenders);
}

Config Config::parse(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    ConfigSection* current = nullptr;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("config: malformed section header at line " +
                                         std::to_string(line_no));
            cfg.sections.push_back({trim(line.substr(1, line.size() - 2)), {}});
            current = &cfg.sections.back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: expected 'key = value' at line " +
                                     std::to_string(line_no));
        if (current == nullptr) {
            cfg.sections.push_back({"", {}});
            current = &cfg.sections.back();
        }
        current->entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const ConfigSection* Config::find(const std::string& name) const {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

std::vector<const ConfigSection*> Config::find_all(const std::string& name) const {
    std::vector<const ConfigSection*> out;
    for (const auto& s : sections)
        if (s.name == name) out.push_back(&s);
    return out;
}

}  // namespace beambnf
