#include "hrg/csv.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hrg/error.hpp"

namespace hrg {

namespace {

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\n\r") != std::string::npos;
}

void write_cell(std::ostream& out, const std::string& s) {
    if (!needs_quoting(s)) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

void write_row(std::ostream& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        write_cell(out, row[i]);
    }
    out << '\n';
}

std::vector<std::string> parse_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    cells.push_back(std::move(cell));
    return cells;
}

} // namespace

void write_csv(const CsvTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_row(out, table.header);
    for (const auto& row : table.rows) write_row(out, row);
    if (!out) throw IoError("write failure on " + path);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == EOF) break;
        auto row = parse_row(line);
        if (first) {
            table.header = std::move(row);
            first = false;
        } else {
            table.rows.push_back(std::move(row));
        }
    }
    if (first) throw IoError(path + ": empty csv");
    return table;
}

std::string csv_double(double x) {
    char buf[64];
    // Shortest round-trip: try increasing precision until it parses back.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::stod(buf) == x) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_u64(std::uint64_t x) { return std::to_string(x); }

} // namespace hrg
