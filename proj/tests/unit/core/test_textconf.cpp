#include <doctest.h>

#include "common/error.hpp"
#include "textconf/textconf.hpp"

using namespace gaugeline;
using namespace gaugeline::textconf;

TEST_CASE("sections, comments and positions") {
  const Document d = parse(
      "# header\n"
      "mode: lineshape   # trailing\n"
      "grid:\n"
      "  min: 0.5\n"
      "  max: 2\n",
      "s.scn");
  REQUIRE(d.top.size() == 1);
  CHECK(d.top[0].value == "lineshape");
  const Section* g = d.section("grid");
  REQUIRE(g != nullptr);
  CHECK(g->entries[1].line == 5);
  CHECK(g->entries[1].value_column == 8);
}

TEST_CASE("strict reader rejects unread keys") {
  const Document d = parse("a: 1\nb: 2\n", "s");
  Reader r(d, d.top, "top");
  CHECK(r.number("a") == 1.0);
  CHECK_THROWS_AS(r.finish(), ParseError);
  r.find("b");
  CHECK_NOTHROW(r.finish());
}

TEST_CASE("malformed documents carry line and column") {
  const auto expect_at = [](const char* text, int line, int col) {
    try {
      parse(text, "f");
      FAIL("no error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == col);
    }
  };
  expect_at("a: 1\nnot a pair\n", 2, 1);
  expect_at("a: 1\na: 2\n", 2, 1);
  expect_at("  x: 1\n", 1, 3);
  expect_at("s:\n  k: 1\n  k: 2\n", 3, 3);
  expect_at("s:\n  k:\n", 2, 5);
}

TEST_CASE("typed values") {
  const Document d = parse("n: 1e-3\ni: 42\nb: yes\nl: a, b ,c\nbad: 1x\n", "s");
  Reader r(d, d.top, "top");
  CHECK(r.optional_number("n") == 1e-3);
  CHECK(r.optional_integer("i") == 42);
  CHECK(r.optional_bool("b") == true);
  CHECK(*r.optional_list("l") == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(r.optional_number("bad"), ParseError);
  CHECK_FALSE(r.optional_number("missing").has_value());
  bool ok = true;
  parse_number("nan", &ok);
  CHECK_FALSE(ok);
  parse_number("1e999", &ok);
  CHECK_FALSE(ok);
}
