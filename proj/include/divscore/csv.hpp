#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace divscore::csv {

using Row = std::vector<std::string>;

/// Parses RFC 4180 style text: quoted fields, doubled quotes, CRLF or LF
/// line ends. A leading UTF-8 BOM is dropped and blank lines are skipped.
std::vector<Row> parse(std::string_view text, char delimiter = ',');

/// Quotes a field only when it contains the delimiter, a quote or a newline.
std::string escape(std::string_view field, char delimiter = ',');

std::string join(const Row& row, char delimiter = ',');

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Strict integer / real parsing of a whole field (surrounding blanks allowed).
bool parse_int(std::string_view text, long long& out);
bool parse_double(std::string_view text, double& out);

std::string_view trim(std::string_view text);

}  // namespace divscore::csv
