#include "cli/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace pfzero::cli {

namespace {

void write(const nlohmann::json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
    case nlohmann::json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + nlohmann::json(k).dump() + ": ";
            write(v, depth + 1, out);
        }
        out += "\n" + close + "}";
        return;
    }
    case nlohmann::json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            write(j[i], depth + 1, out);
        }
        out += "\n" + close + "]";
        return;
    }
    case nlohmann::json::value_t::number_float: {
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            out += "null";
            return;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
        return;
    }
    default:
        out += j.dump();
    }
}

} // namespace

std::string dump_canonical(const nlohmann::json& j) {
    std::string out;
    write(j, 0, out);
    out += "\n";
    return out;
}

} // namespace pfzero::cli
