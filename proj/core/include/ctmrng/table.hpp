#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Flat numeric result tables and their CSV form: one header row naming the
// columns, then one data row per parameter cell.  All cells are doubles;
// integral quantities (iteration counts, box counts, seed indices) are stored
// exactly, doubles carry 53 bits.

namespace ctmrng {

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    double wall_seconds = 0.0;  // producing run's wall time; not serialized

    // Row width must match the header.  Throws std::invalid_argument.
    void add_row(std::vector<double> row);
};

// %.{precision}g rendering, precision in [1,17].  17 digits round-trip a
// double exactly; 8 is the house style for derived statistics.
std::string format_double(double v, int precision);

void write_csv(std::ostream& os, const ResultTable& table, int precision = 8);

// Inverse of write_csv at the emitted precision.  Accepts any numeric rows
// under a non-numeric header line.  Throws std::invalid_argument on ragged
// rows or unparseable cells.
ResultTable read_csv(std::istream& is);

}  // namespace ctmrng
