#include "doctest.h"
#include "helpers.hpp"
#include "khr/dsl.hpp"

using namespace khr;

namespace {

ParseErrorKind kind_of(std::string_view text) {
  try {
    parse_hyperring(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no ParseError");
  return ParseErrorKind::Syntax;
}

}  // namespace

TEST_CASE("hand-written H3 file matches the builder") {
  auto parsed = test::load("H3.khr");
  auto built = build_h3();
  CHECK(parsed.names() == built.names());
  CHECK(parsed.add_table() == built.add_table());
  CHECK(parsed.mul_table() == built.mul_table());
  CHECK(parsed.zero() == built.zero());
}

TEST_CASE("serialize then parse is the identity") {
  for (const auto& t : {build_classical_zn(6), build_h3(), build_chain(4), build_product(build_h3(), build_classical_zn(2))})
    CHECK(parse_hyperring(serialize_hyperring(t)) == t);
}

TEST_CASE("mirrored cells and comments") {
  auto t = parse_hyperring(
      "# two elements\n"
      "hyperring Z2\n"
      "elements: 0 1\n"
      "zero: 0\n"
      "one: 1\n"
      "add:\n"
      "  0 0 -> {0}\n"
      "  0 1 -> {1}   # mirrored to 1 0\n"
      "  1 1 -> {0}\n"
      "mul:\n"
      "  0 0 -> 0\n"
      "  0 1 -> 0\n"
      "  1 1 -> 1\n");
  CHECK(t == build_classical_zn(2).renamed("Z2"));
}

TEST_CASE("parse error kinds") {
  const std::string head = "hyperring t\nelements: 0 a\nzero: 0\n";
  const std::string full_add = "add:\n 0 0 -> {0}\n 0 a -> {a}\n a a -> {0}\n";
  const std::string full_mul = "mul:\n 0 0 -> 0\n 0 a -> 0\n a a -> 0\n";
  CHECK_NOTHROW(parse_hyperring(head + full_add + full_mul));
  CHECK(kind_of(head + full_add + "mul:\n 0 0 -> 0\n 0 b -> 0\n a a -> 0\n") == ParseErrorKind::UnknownElement);
  CHECK(kind_of(head + full_add + "mul:\n 0 0 -> 0\n a a -> 0\n") == ParseErrorKind::MissingCell);
  CHECK(kind_of(head + full_add + "mul:\n 0 0 -> 0\n 0 a -> 0\n 0 a -> a\n a a -> 0\n") ==
        ParseErrorKind::DuplicateCell);
  CHECK(kind_of("hyperring t\nelements: 0 a\n" + full_add + full_mul) == ParseErrorKind::BadHeader);
  CHECK(kind_of(head + "add:\n 0 0 -> {}\n 0 a -> {a}\n a a -> {0}\n" + full_mul) == ParseErrorKind::EmptySet);
  CHECK(kind_of(head + "add:\n 0 0 -> {0\n") == ParseErrorKind::Syntax);
}

TEST_CASE("explicit mirror cells may disagree, which validation then reports") {
  auto t = parse_hyperring(
      "hyperring t\nelements: 0 a\nzero: 0\nadd:\n 0 0 -> {0}\n 0 a -> {a}\n a a -> {0}\n"
      "mul:\n 0 0 -> 0\n 0 a -> 0\n a 0 -> a\n a a -> 0\n");
  CHECK(t.mul(1, 0) == 1);
  CHECK(t.mul(0, 1) == 0);
  CHECK_FALSE(validate_krasner_hyperring(t).passed());
}

TEST_CASE("broken fixture reports line and column") {
  try {
    test::load("broken.khr");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::Syntax);
    CHECK(e.span() == SourceSpan{7, 11});
    CHECK(std::string(e.what()).find("7:11") != std::string::npos);
  }
}

TEST_CASE("builders") {
  CHECK_THROWS_AS(build_classical_zn(1), ParamOutOfRange);
  CHECK_THROWS_AS(build_classical_zn(65), ParamOutOfRange);
  CHECK_THROWS_AS(build_chain(1), ParamOutOfRange);
  CHECK_THROWS_AS(build_product(build_classical_zn(8), build_classical_zn(9)), ParamOutOfRange);
  CHECK_THROWS_AS(build_from_tables("x", {"0"}, {ElementSubset::of({0})}, {0}, 0), ParamOutOfRange);

  auto c = build_chain(4);
  CHECK(c.order() == 4);
  // x + x = {0..x}, x + y = {max} otherwise
  CHECK(c.add(2, 2) == ElementSubset::of({0, 1, 2}));
  CHECK(c.add(1, 3) == ElementSubset::of({3}));
  CHECK(c.mul(2, 3) == 2);

  auto p = build_product(build_classical_zn(2), build_classical_zn(3));
  CHECK(p.order() == 6);
  CHECK(p.mul(1 * 3 + 2, 1 * 3 + 2) == 1 * 3 + 1);
  CHECK(p.one() == 1 * 3 + 1);
}
