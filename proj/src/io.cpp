#include "iho/io.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

#include "iho/errors.hpp"

namespace iho::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << t.header[i] << (i + 1 < t.header.size() ? ',' : '\n');
    for (const auto& row : t.rows) {
        if (row.size() != t.header.size())
            throw ValidationError("write_csv: row width != header width");
        for (std::size_t i = 0; i < row.size(); ++i)
            os << format_double(row[i]) << (i + 1 < row.size() ? ',' : '\n');
    }
}

Table read_csv(std::istream& is) {
    Table t;
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("read_csv: empty input");
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream rs(line);
        std::vector<double> row;
        while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != t.header.size())
            throw ValidationError("read_csv: ragged row");
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace iho::io
