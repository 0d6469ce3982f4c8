#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "pnc/circuit.hpp"
#include "pnc/nesting.hpp"

namespace pnc {

/// One circuit per line: whitespace-separated labels, first label repeated
/// at the end. Blank lines and lines starting with '#' are skipped. Throws
/// Error(ParseError) naming the offending line.
std::vector<Circuit> parse_circuits(std::istream& in);

/// Parses a single line; throws the underlying validation error.
Circuit parse_circuit(std::string_view line);

std::string format_circuit(const Circuit& c);

/// "link <j>: <labels>" for each link then "joint <j>: <label>" for each joint.
std::string format_chain(const ChainOfCycles& chain);

/// Double-quoted DOT identifier with '"' and '\' escaped.
std::string dot_quote(std::string_view text);

/// Writes `<path>.tmp` and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace pnc
