#include "auxmean/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "auxmean/errors.hpp"

namespace auxmean {

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view token) {
    if (token == "nan") {
        return std::nan("");
    }
    if (token == "inf") {
        return INFINITY;
    }
    if (token == "-inf") {
        return -INFINITY;
    }
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ConfigError("not a number: '" + std::string(token) + "'");
    }
    return value;
}

namespace {

std::vector<std::string> split_commas(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            cells.emplace_back(line.substr(start));
            return cells;
        }
        cells.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

void append_line(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += cells[i];
    }
    out += '\n';
}

}  // namespace

std::string CsvTable::to_string() const {
    std::string out;
    append_line(out, header);
    for (const auto& row : rows) {
        append_line(out, row);
    }
    return out;
}

CsvTable CsvTable::parse(std::string_view text) {
    CsvTable table;
    bool first = true;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (first) {
            table.header = split_commas(line);
            first = false;
            continue;
        }
        auto cells = split_commas(line);
        if (cells.size() != table.header.size()) {
            throw ConfigError("csv: row width does not match header");
        }
        table.rows.push_back(std::move(cells));
    }
    return table;
}

}  // namespace auxmean
