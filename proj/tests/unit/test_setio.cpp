#include <doctest.h>

#include "f2sumset/setio.hpp"

using namespace f2sumset;

TEST_CASE("set text round trip") {
  const std::string text =
      "# a comment\n"
      "n=4\n"
      "\n"
      "0011\n"
      "1000\n"
      "0011\n"
      "  # trailing comment\n";
  const PointSet a = parse_set_text(text);
  CHECK(a.dimension() == 4);
  CHECK(a.elements() == std::vector<Bits>{0b0011, 0b1000});
  CHECK(format_set_text(a) == "n=4\n0011\n1000\n");
  CHECK(parse_set_text(format_set_text(a)) == a);
  CHECK(parse_set_text("n=3\n").empty());
}

TEST_CASE("set text errors") {
  CHECK_THROWS_AS(parse_set_text("0101\n"), FormatError);
  CHECK_THROWS_AS(parse_set_text("n=3\n0101\n"), FormatError);
  CHECK_THROWS_AS(parse_set_text("n=3\n01x\n"), FormatError);
  CHECK_THROWS_AS(parse_set_text("n=x\n"), FormatError);
  CHECK_THROWS(parse_set_text("n=0\n"));
  CHECK_THROWS_AS(read_set_file("/nonexistent/set.txt"), FormatError);
}
