#include "beambnf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace beambnf {

std::string fmt_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_human(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

namespace {

void dump_rec(const nlohmann::ordered_json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent * depth), ' ');
    const std::string pad_in(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, val] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + nlohmann::ordered_json(key).dump() + ": ";
                dump_rec(val, out, indent, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case nlohmann::ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& val : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_rec(val, out, indent, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case nlohmann::ordered_json::value_t::number_float: {
            const double x = j.get<double>();
            if (std::isfinite(x))
                out += fmt_full(x);
            else
                out += x > 0 ? "\"inf\"" : (x < 0 ? "\"-inf\"" : "\"nan\"");
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

}  // namespace beambnf
