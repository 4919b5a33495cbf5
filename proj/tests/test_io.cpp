#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "lideal/fixtures.hpp"
#include "lideal/io.hpp"

using namespace lideal;

TEST_CASE("fixtures round-trip through the file format") {
  for (const auto& name : fixture_names()) {
    auto orig = fixture_raw(name);
    std::ostringstream out;
    write_algebra(out, orig);
    std::istringstream in(out.str());
    auto back = parse_algebra(in);
    INFO("fixture " << name);
    CHECK(back.name == orig.name);
    CHECK(back.elements == orig.elements);
    CHECK(back.bottom == orig.bottom);
    CHECK(back.top == orig.top);
    CHECK(back.imp == orig.imp);
    CHECK(back.otimes == orig.otimes);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in(
      "# two-element chain\n"
      "algebra c2\n"
      "\n"
      "elements 0 1   # index order\n"
      "bottom 0\n"
      "top 1\n"
      "imp:\n"
      "1 1\n"
      "0 1\n");
  auto alg = parse_algebra(in);
  CHECK(alg.name == "c2");
  CHECK(alg.n == 2);
  CHECK(alg.imp == Table{{1, 1}, {0, 1}});
}

TEST_CASE("parse errors cite line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      parse_algebra(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("algebra x\nelements 0 1\nbottom 0\ntop 1\nimp:\n1 1\n0 q\n", 7);
  expect_line("algebra x\nbogus\n", 2);
  expect_line("algebra x\nelements 0 0\n", 2);
  expect_line("algebra x\nelements 0 1\nbottom 2\n", 3);
  expect_line("algebra x\nelements 0 1\nbottom 0\ntop 1\nimp:\n1 1\n", 6);
}

TEST_CASE("subset parsing and rendering") {
  auto ca = fixture("ex4.3");
  CHECK(parse_subset(ca.alg, "0,a") == Subset{0b000011});
  CHECK(parse_subset(ca.alg, " a , 0 ") == Subset{0b000011});
  CHECK(parse_subset(ca.alg, "") == Subset{0});
  CHECK_THROWS_AS(parse_subset(ca.alg, "0,zz"), AlgebraError);
  CHECK(subset_to_string(ca.alg, 0b000011) == "{0, a}");
  CHECK(subset_to_string(ca.alg, 0) == "{}");
  CHECK(subset_to_string(ca.alg, full_subset(6)) == "{0, a, b, c, d, 1}");
}

TEST_CASE("a parsed file analyzes like the built-in fixture") {
  std::ostringstream out;
  write_algebra(out, fixture_raw("ex4.3"));
  std::istringstream in(out.str());
  auto ca = analyze(parse_algebra(in));
  CHECK(ca.cls.is_mtl);
  CHECK_FALSE(ca.cls.is_lia);
}
