#include "doctest.h"
#include "hecke/error.hpp"
#include "hecke/parse.hpp"

using namespace hecke;

namespace {

bool throws_parse(const Field& f, const char* text) {
  try {
    parse_ratf(f, text);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::Parse;
  }
  return false;
}

}  // namespace

TEST_CASE("rational function grammar") {
  const Field& f3 = field_of_order(3);
  CHECK(parse_ratf(f3, "2*t^3 + t^-2") == RatF::monomial(f3, 2, 3) + RatF::monomial(f3, 1, -2));
  CHECK(parse_ratf(f3, "(1+t)/t") == RatF(Poly(f3, {1, 1}), Poly::t_power(f3, 1)));
  CHECK(parse_ratf(f3, " - t ") == RatF::monomial(f3, 2, 1));
  CHECK(parse_ratf(f3, "4") == RatF::one(f3));
  CHECK(parse_ratf(f3, "(t+1)^2") == RatF(Poly(f3, {1, 2, 1})));
  CHECK(parse_ratf(f3, "t*t/t^3") == RatF::monomial(f3, 1, -1));
  CHECK(parse_ratf(f3, "0").is_zero());
}

TEST_CASE("generator notation for extension fields") {
  const Field& f4 = field_of_order(4);
  const std::uint32_t g = f4.generator();
  CHECK(parse_ratf(f4, "g*t") == RatF::monomial(f4, g, 1));
  CHECK(parse_ratf(f4, "g^2 + 1") == RatF::constant(f4, f4.add(f4.exp(2), 1)));
  CHECK(parse_ratf(f4, "g^3") == RatF::one(f4));
}

TEST_CASE("parse errors") {
  const Field& f2 = field_of_order(2);
  CHECK(throws_parse(f2, "t^"));
  CHECK(throws_parse(f2, "(t+1"));
  CHECK(throws_parse(f2, "x"));
  CHECK(throws_parse(f2, ""));
  CHECK(throws_parse(f2, "t + + "));
  CHECK_THROWS_AS(parse_poly(f2, "1/t"), Error);
  CHECK_THROWS_AS(parse_ratf(f2, "1/(t+t)"), Error);
}

TEST_CASE("matrix grammar") {
  const Field& f2 = field_of_order(2);
  const Mat2 M = parse_matrix(f2, "t^-3, (1+t)/t ; 0, 1");
  CHECK(M.a == RatF::monomial(f2, 1, -3));
  CHECK(M.b == RatF(Poly(f2, {1, 1}), Poly::t_power(f2, 1)));
  CHECK(M.c.is_zero());
  CHECK(M.d.is_one());
  CHECK(parse_matrix(f2, "t^-3,0;0,1") == Mat2::p_power(f2, 3));
  CHECK_THROWS_AS(parse_matrix(f2, "1,0;0"), Error);
  CHECK_THROWS_AS(parse_matrix(f2, "1,0;0,1;1"), Error);
}

TEST_CASE("polynomial text round trips") {
  const Field& f5 = field_of_order(5);
  const Poly p(f5, {3, 0, 4, 1});
  CHECK(parse_poly(f5, p.to_string()) == p);
  const RatF r(Poly(f5, {1, 2}), Poly(f5, {0, 0, 1, 3}));
  CHECK(parse_ratf(f5, r.to_string()) == r);
}
