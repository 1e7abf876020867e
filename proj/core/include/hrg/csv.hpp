#pragma once

#include <string>
#include <vector>

namespace hrg {

/// Minimal CSV table. Values round-trip exactly: doubles are written with
/// max_digits10 precision and cells are quoted only when they contain a
/// delimiter, quote, or newline.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const CsvTable&) const = default;
};

void write_csv(const CsvTable& table, const std::string& path);
CsvTable read_csv(const std::string& path);

/// Shortest representation that parses back to exactly the same double.
std::string csv_double(double x);
std::string csv_u64(std::uint64_t x);

} // namespace hrg
