#include <vector>

#include "doctest.h"
#include "hecke/error.hpp"
#include "hecke/field.hpp"

using namespace hecke;

namespace {

// Independent F_p[x]/(m) multiplication on base-p digit codes.
std::uint32_t slow_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.p(), e = f.e();
  std::vector<std::uint32_t> x(e), y(e), prod(2 * e, 0);
  for (std::uint32_t i = 0; i < e; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  const auto& m = f.modulus();
  for (std::uint32_t k = 2 * e - 1; k >= e; --k) {
    const std::uint32_t c = prod[k];
    if (!c) continue;
    for (std::uint32_t i = 0; i <= e; ++i) prod[k - e + i] = (prod[k - e + i] + p * p - c * m[i] % p) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = e; i-- > 0;) out = out * p + prod[i];
  return out;
}

}  // namespace

TEST_CASE("make_field examples") {
  const Field& f2 = make_field(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.modulus() == std::vector<std::uint32_t>{0, 1});
  const Field& f4 = make_field(2, 2);
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK_THROWS_AS(make_field(4, 1), Error);
  try {
    make_field(4, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPrime);
  }
  CHECK(&make_field(2, 2) == &f4);
  CHECK(&field_of_order(4) == &f4);
  CHECK_THROWS_AS(field_of_order(6), Error);
}

TEST_CASE("smallest irreducible modulus") {
  // x^3 + x + 1 is the smallest irreducible cubic over F_2; x^2 + 1 over F_3.
  CHECK(make_field(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(make_field(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("field axioms, exhaustive for q <= 9") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field& f = field_of_order(q);
    CAPTURE(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(a, b) == slow_mul(f, a, b));
        CHECK(f.sub(f.add(a, b), b) == a);
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("generator, log and pow") {
  for (std::uint32_t q : {3u, 4u, 8u, 9u, 25u}) {
    const Field& f = field_of_order(q);
    std::vector<bool> seen(q, false);
    std::uint32_t x = 1;
    for (std::uint32_t j = 0; j + 1 < q; ++j) {
      CHECK(f.exp(j) == x);
      CHECK(f.log(x) == j);
      CHECK(f.pow(f.generator(), j) == x);
      seen[x] = true;
      x = f.mul(x, f.generator());
    }
    CHECK(x == 1);
    for (std::uint32_t a = 1; a < q; ++a) CHECK(seen[a]);
  }
}

TEST_CASE("square roots") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const Field& f = field_of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      bool is_square = false;
      for (std::uint32_t b = 0; b < q; ++b) is_square = is_square || f.mul(b, b) == a;
      std::uint32_t r = 0;
      CHECK(f.sqrt(a, r) == is_square);
      if (is_square) CHECK(f.mul(r, r) == a);
    }
  }
}

TEST_CASE("element formatting") {
  CHECK(field_of_order(5).format(3) == "3");
  const Field& f4 = field_of_order(4);
  CHECK(f4.format(0) == "0");
  CHECK(f4.format(1) == "1");
  CHECK(f4.format(f4.generator()) == "g");
  CHECK(f4.format(f4.exp(2)) == "g^2");
  CHECK(field_of_order(7).from_int(-1) == 6);
}
