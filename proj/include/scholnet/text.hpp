#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scholnet::text {

// Lowercases ASCII plus the Latin-1 supplement block (À..Þ) in UTF-8 input;
// other bytes pass through unchanged.
std::string to_lower(const std::string& s);

// Canonical form used for cross-source matching and catalog lookups:
// lowercase, every non-alphanumeric run (except internal spaces) removed,
// whitespace collapsed, trimmed. Bytes >= 0x80 count as letters.
std::string normalize_title(const std::string& s);

// Lowercased word tokens: split on any non-letter (digits and hyphens split),
// tokens shorter than 2 letters dropped. Multibyte UTF-8 sequences count as
// one letter each.
std::vector<std::string> tokenize(const std::string& s);

std::string trim(const std::string& s);

bool starts_with(const std::string& s, const std::string& prefix);

// Joins with a single separator character.
std::string join(const std::vector<std::string>& parts, char sep);

// --- CSV ---------------------------------------------------------------

// Quotes a field if it contains the delimiter, a quote, or a newline.
std::string csv_escape(const std::string& field, char delim = ',');

std::string csv_row(const std::vector<std::string>& fields, char delim = ',');

// Parses a single line; handles quoted fields with "" escapes. Embedded
// newlines are not supported (none of our formats produce them).
std::vector<std::string> parse_csv_line(const std::string& line, char delim = ',');

// --- numbers -----------------------------------------------------------

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);

std::uint64_t fnv1a64(const std::string& s);

} // namespace scholnet::text
