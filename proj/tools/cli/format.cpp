#include "cli/format.hpp"

#include <cstdio>

namespace sl2geo::cli {

std::string number(double v, int precision)
{
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void Record::add(std::string key, double value, int precision)
{
    fields_.emplace_back(std::move(key), number(value, precision));
}

void Record::add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }

void Record::add(std::string key, bool value) { fields_.emplace_back(std::move(key), value ? "true" : "false"); }

void Record::add(std::string key, int value) { fields_.emplace_back(std::move(key), std::to_string(value)); }

std::string Record::render(bool pretty) const
{
    std::string out;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        const auto& [k, v] = fields_[i];
        if (pretty) {
            out += k + ": " + v + "\n";
        } else {
            if (i > 0) out += ' ';
            out += k + "=" + v;
        }
    }
    if (!pretty) out += '\n';
    return out;
}

} // namespace sl2geo::cli
