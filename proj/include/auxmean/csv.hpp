#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace auxmean {

/// Shortest decimal that parses back to the same binary64 (std::to_chars).
std::string format_double(double x);

/// Strict parse of a full token; throws ConfigError on trailing garbage.
double parse_double(std::string_view token);

// A flat table: header plus rows of already-formatted cells. Cells never
// contain commas or newlines, so no quoting is needed.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
    static CsvTable parse(std::string_view text);
};

}  // namespace auxmean
