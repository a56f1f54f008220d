#include <random>

#include "doctest.h"
#include "hecke/error.hpp"
#include "hecke/lambda.hpp"

using namespace hecke;

namespace {

const LambdaScalar L = LambdaScalar::lambda();

LambdaScalar random_scalar(std::mt19937_64& rng) {
  auto poly = [&](int deg) {
    std::vector<mpq_class> c(static_cast<std::size_t>(deg + 1));
    for (auto& x : c) x = mpq_class(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 4));
    for (auto& x : c) x.canonicalize();
    return QPoly(c);
  };
  for (;;) {
    QPoly d = poly(static_cast<int>(rng() % 3));
    if (!d.is_zero()) return LambdaScalar(poly(static_cast<int>(rng() % 4)), d);
  }
}

}  // namespace

TEST_CASE("field operations in Q(lambda)") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    LambdaScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LambdaScalar(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // evaluation is a ring homomorphism away from poles
    const mpq_class x(7, 3);
    try {
      CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
      CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    } catch (const Error&) {
    }
  }
}

TEST_CASE("canonical form and printing") {
  CHECK(((L * L - LambdaScalar(6)) / L).to_string() == "(l^2-6)/l");
  CHECK((LambdaScalar(3) / L).to_string() == "3/l");
  CHECK((L / LambdaScalar(3)).to_string() == "l/3");
  CHECK(((L * L - LambdaScalar(1)) / (L - LambdaScalar(1))) == L + LambdaScalar(1));
  CHECK((LambdaScalar(2) / (LambdaScalar(3) * L)).den().lead() == 1);
  CHECK(LambdaScalar(0).to_string() == "0");
  CHECK((-L).to_string() == "-l");
}

TEST_CASE("parse round trip") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    LambdaScalar a = random_scalar(rng);
    CHECK(parse_lambda(a.to_string()) == a);
  }
  CHECK(parse_lambda("lambda^2/3") == L * L / LambdaScalar(3));
  CHECK_THROWS_AS(parse_lambda("q"), Error);
}

TEST_CASE("poles and division by zero") {
  CHECK_THROWS_AS((LambdaScalar(1) / L).eval(0), Error);
  CHECK_THROWS_AS(L / LambdaScalar(0), Error);
  CHECK((LambdaScalar(1) / L).eval(4) == mpq_class(1, 4));
}

TEST_CASE("exact integer polynomial division") {
  const ZPoly a(std::vector<mpz_class>{-1, 0, 1});  // l^2 - 1
  const ZPoly b(std::vector<mpz_class>{-1, 1});     // l - 1
  CHECK(a.exact_div(b) == ZPoly(std::vector<mpz_class>{1, 1}));
  CHECK_THROWS_AS(a.exact_div(ZPoly(std::vector<mpz_class>{0, 2})), Error);
  CHECK_THROWS_AS(a.exact_div(ZPoly()), Error);
  CHECK((a * b).exact_div(a) == b);
}
