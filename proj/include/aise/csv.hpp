#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace aise::csv {

using Row = std::vector<std::string>;

// RFC-4180-style parsing: double-quoted fields may contain commas, escaped
// quotes ("") and newlines. Accepts both LF and CRLF line endings.
std::vector<Row> parse(std::string_view content);

// Reads and parses a whole file; throws Errc::missing_file.
std::vector<Row> read_file(const std::filesystem::path& path);

// Quotes a field only when it needs quoting (comma, quote, CR or LF).
std::string escape(std::string_view field);

std::string format_row(const Row& fields);

}  // namespace aise::csv
