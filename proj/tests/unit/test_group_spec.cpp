#include <doctest.h>

#include "hkc/errors.hpp"
#include "hkc/group_spec.hpp"

using namespace hkc;

TEST_CASE("named families parse and resolve") {
  GroupSpec s = parse_group_spec("Sn(5)");
  CHECK(s.family == GroupSpec::Family::Sn);
  CHECK(s.parameter == 5);
  CHECK(resolve_group(s).order() == 120);

  CHECK(resolve_group(parse_group_spec("An(5)")).order() == 60);
  CHECK(resolve_group(parse_group_spec("Cn(12)")).order() == 12);
  CHECK(resolve_group(parse_group_spec("Dn(7)")).order() == 14);
  CHECK(resolve_group(parse_group_spec("PGL2(5)")).order() == 120);
  CHECK(resolve_group(parse_group_spec("PGammaL2(9)")).order() == 1440);
  CHECK(resolve_group(parse_group_spec("AGL1(8)")).order() == 56);
}

TEST_CASE("whitespace inside a named spec is ignored") {
  CHECK(parse_group_spec(" Sn ( 5 ) ") == parse_group_spec("Sn(5)"));
  CHECK(parse_group_spec("PGammaL2( 8 )").parameter == 8);
}

TEST_CASE("explicit generator lists parse into groups") {
  GroupSpec s = parse_group_spec("gens: (0 1 2)(3 4), (0 1)");
  CHECK(s.family == GroupSpec::Family::explicit_generators);
  REQUIRE(s.generators.size() == 2);
  CHECK(s.generators[0].degree() == 5);
  CHECK(s.generators[1].degree() == 5);  // padded up to the common degree
  CHECK(resolve_group(s).degree() == 5);

  // a one-generator cyclic group
  GroupSpec c = parse_group_spec("gens:(0 1 2 3)");
  CHECK(resolve_group(c).order() == 4);
}

TEST_CASE("spec text round-trips") {
  for (const char* text : {"Sn(5)", "An(9)", "Cn(3)", "Dn(4)", "PGL2(8)", "PGammaL2(9)",
                           "AGL1(5)"}) {
    GroupSpec s = parse_group_spec(text);
    CHECK(s.text() == text);
    CHECK(parse_group_spec(s.text()) == s);
  }
  // generator specs round-trip through the canonical form even when the top
  // point is fixed (a singleton cycle pins the degree)
  for (const char* text : {"gens: (0 1 2), (0 1)", "gens: (0 1)(2 3)", "gens: (1 2)(4)"}) {
    GroupSpec s = parse_group_spec(text);
    CHECK(parse_group_spec(s.text()) == s);
  }
}

TEST_CASE("unknown names and bad parameters are distinct failures") {
  CHECK_THROWS_AS(parse_group_spec("Xn(5)"), Error);
  try {
    parse_group_spec("Xn(5)");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unknown_family);
  }
  // case-sensitive
  CHECK_THROWS_AS(parse_group_spec("sn(5)"), Error);
  CHECK_THROWS_AS(parse_group_spec("pgl2(5)"), Error);

  CHECK_THROWS_AS(parse_group_spec("Sn(0)"), Error);
  CHECK_THROWS_AS(parse_group_spec("Dn(2)"), Error);
  CHECK_THROWS_AS(parse_group_spec("PGL2(6)"), Error);
  CHECK_THROWS_AS(parse_group_spec("AGL1(6)"), Error);
  try {
    parse_group_spec("AGL1(6)");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_parameter);
  }
}

TEST_CASE("malformed text raises parse errors with the failing offset") {
  CHECK_THROWS_AS(parse_group_spec("Sn(5"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Sn 5)"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(""), ParseError);
  CHECK_THROWS_AS(parse_group_spec("gens:"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("gens: (0 1,"), ParseError);
  try {
    parse_group_spec("Sn(x)");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
}
