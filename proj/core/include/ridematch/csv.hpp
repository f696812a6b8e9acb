#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ridematch {

/// Quotes a field when it contains a comma, quote, CR or LF; embedded quotes
/// are doubled.
std::string csv_escape(std::string_view field);

/// Writes one CRLF-free record terminated by '\n'.
void write_csv_row(std::ostream& out, std::span<const std::string> fields);

/// Parses RFC 4180 style records (quoted fields may span lines). Blank lines
/// are skipped.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

}  // namespace ridematch
