#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace concern_scan::csv {

using Row = std::vector<std::string>;

/// Splits delimited text into records following RFC-4180 quoting: fields may
/// be wrapped in double quotes, `""` inside a quoted field is a literal quote,
/// and quoted fields may span line breaks. Both LF and CRLF terminate a record.
/// Blank lines are skipped. An unterminated quote throws ParseError.
std::vector<Row> parse(std::string_view text, char delimiter = ',');

/// Quotes a field only when it contains the delimiter, a quote, CR or LF.
std::string escape(std::string_view field, char delimiter = ',');

void write_row(std::ostream& out, std::span<const std::string> fields, char delimiter = ',');
void write_row(std::ostream& out, std::initializer_list<std::string> fields, char delimiter = ',');

/// Shortest fixed-notation text that parses back to exactly `value`.
/// Negative zero prints as "0".
std::string format_real(double value);

/// Strict whole-string parse; false on trailing garbage or empty input.
bool parse_real(std::string_view text, double& value);
bool parse_int(std::string_view text, long long& value);

std::string_view trim(std::string_view s);

/// Reads a whole file; throws FileNotReadable.
std::string read_file(const std::string& path);

}  // namespace concern_scan::csv
