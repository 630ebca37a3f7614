#include "ctmrng/table.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ctmrng {

void ResultTable::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("table: row width " + std::to_string(row.size()) +
                                    " does not match " + std::to_string(columns.size()) +
                                    " columns");
    rows.push_back(std::move(row));
}

std::string format_double(double v, int precision) {
    if (precision < 1 || precision > 17)
        throw std::invalid_argument("table: precision outside [1,17]");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

void write_csv(std::ostream& os, const ResultTable& table, int precision) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_double(row[i], precision);
        }
        os << '\n';
    }
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

ResultTable read_csv(std::istream& is) {
    ResultTable table;
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("table: missing header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    table.columns = split_line(line);

    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (fields.size() != table.columns.size())
            throw std::invalid_argument("table: ragged row \"" + line + "\"");
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) {
            const char* begin = f.c_str();
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin || *end != '\0')
                throw std::invalid_argument("table: unparseable cell \"" + f + "\"");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace ctmrng
