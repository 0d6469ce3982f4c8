#include "pnc/text_format.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "pnc/error.hpp"

namespace pnc {

Circuit parse_circuit(std::string_view line) {
  std::istringstream tokens{std::string(line)};
  std::vector<Label> labels;
  for (std::string token; tokens >> token;) labels.push_back(std::move(token));
  return validate_circuit(std::move(labels));
}

std::vector<Circuit> parse_circuits(std::istream& in) {
  std::vector<Circuit> out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r\n\v\f");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_circuit(line));
    } catch (const Error& e) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string format_circuit(const Circuit& c) {
  std::string out;
  for (const Label& label : c.vertices()) {
    if (!out.empty()) out += ' ';
    out += label;
  }
  return out;
}

std::string format_chain(const ChainOfCycles& chain) {
  std::ostringstream out;
  for (std::size_t j = 0; j < chain.links.size(); ++j)
    out << "link " << j << ": " << format_circuit(chain.links[j]) << '\n';
  for (std::size_t j = 0; j < chain.joints.size(); ++j)
    out << "joint " << j << ": " << chain.joints[j] << '\n';
  return out.str();
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot open " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace pnc
