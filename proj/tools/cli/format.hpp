#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sl2geo::cli {

// %.*g with negative zero printed as 0.
std::string number(double v, int precision);

// Ordered key/value record; one line "k=v k=v" or one "k: v" per line.
class Record {
public:
    void add(std::string key, double value, int precision);
    void add(std::string key, std::string value);
    void add(std::string key, bool value);
    void add(std::string key, int value);

    std::string render(bool pretty) const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

} // namespace sl2geo::cli
