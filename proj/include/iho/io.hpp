#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace iho::io {

// Shortest-round-trip decimal with 17 significant digits.
std::string format_double(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const Table& t);
Table read_csv(std::istream& is);

} // namespace iho::io
