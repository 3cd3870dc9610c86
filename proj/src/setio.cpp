#include "f2sumset/setio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace f2sumset {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

}  // namespace

PointSet parse_set_text(std::string_view text) {
  int n = 0;
  bool have_header = false;
  std::vector<Bits> elements;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      if (line.substr(0, 2) != "n=") throw FormatError(where + "expected header n=<dimension>");
      const auto digits = trim(line.substr(2));
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw FormatError(where + "bad dimension");
      }
      check_dimension(n);
      have_header = true;
      continue;
    }
    if (line.size() != static_cast<std::size_t>(n)) {
      throw FormatError(where + "element must have exactly " + std::to_string(n) + " bits");
    }
    Bits x = 0;
    for (char c : line) {
      if (c != '0' && c != '1') throw FormatError(where + "element must be a binary string");
      x = (x << 1) | static_cast<Bits>(c - '0');
    }
    elements.push_back(x);
  }
  if (!have_header) throw FormatError("missing header n=<dimension>");
  return PointSet::from_elements(n, elements);
}

PointSet read_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_set_text(ss.str());
}

std::string format_set_text(const PointSet& s) {
  std::string out = "n=" + std::to_string(s.dimension()) + "\n";
  out.reserve(out.size() + s.size() * static_cast<std::size_t>(s.dimension() + 1));
  s.for_each([&](Bits x) {
    out += to_binary(x, s.dimension());
    out += '\n';
  });
  return out;
}

void write_set_file(const std::string& path, const PointSet& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << format_set_text(s);
}

}  // namespace f2sumset
