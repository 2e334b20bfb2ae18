#pragma once

#include <cstdlib>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace sl2geo::testing {

struct SvgPath {
    std::map<std::string, std::string> attrs;
    std::vector<std::pair<double, double>> points;
};

// Reads back the <path> elements the figure writer emits (M/L polylines only).
inline std::vector<SvgPath> read_paths(const std::string& svg)
{
    std::vector<SvgPath> out;
    const std::regex element("<path([^>]*)/>");
    const std::regex attr(R"re(([\w-]+)="([^"]*)")re");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), element); it != std::sregex_iterator(); ++it) {
        SvgPath p;
        const std::string body = (*it)[1];
        for (auto a = std::sregex_iterator(body.begin(), body.end(), attr); a != std::sregex_iterator(); ++a) {
            p.attrs[(*a)[1]] = (*a)[2];
        }
        std::string d = p.attrs["d"];
        for (char& ch : d) {
            if (ch == 'M' || ch == 'L' || ch == 'Z' || ch == ',') ch = ' ';
        }
        std::istringstream in(d);
        double x, y;
        while (in >> x >> y) p.points.emplace_back(x, y);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace sl2geo::testing
