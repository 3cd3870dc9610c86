#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "f2sumset/gf2core.hpp"

namespace f2sumset {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Set file: a header line `n=<dimension>`, then one element per line as a
// binary string of exactly n characters, most significant bit first. Blank
// lines and `#` comments are ignored; repeated elements collapse.
PointSet parse_set_text(std::string_view text);
PointSet read_set_file(const std::string& path);

std::string format_set_text(const PointSet& s);
void write_set_file(const std::string& path, const PointSet& s);

}  // namespace f2sumset
