#include <random>

#include "doctest.h"
#include "hecke/error.hpp"
#include "hecke/parse.hpp"
#include "hecke/places.hpp"

using namespace hecke;

TEST_CASE("proj_normalize examples") {
  const Field& f = field_of_order(5);
  CHECK(proj_normalize(f, 0, 1) == ProjPoint::finite(0));
  CHECK(proj_normalize(f, 1, 0) == ProjPoint::at_infinity());
  CHECK(proj_normalize(f, 3, 1) == ProjPoint::finite(3));
  CHECK_THROWS_AS(proj_normalize(f, 0, 0), Error);
}

TEST_CASE("proj_normalize separates rows exactly by proportionality") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& f = field_of_order(q);
    for (std::uint32_t c = 0; c < q; ++c)
      for (std::uint32_t d = 0; d < q; ++d) {
        if (!c && !d) continue;
        for (std::uint32_t c2 = 0; c2 < q; ++c2)
          for (std::uint32_t d2 = 0; d2 < q; ++d2) {
            if (!c2 && !d2) continue;
            const bool prop = f.mul(c, d2) == f.mul(c2, d);
            CHECK((proj_normalize(f, c, d) == proj_normalize(f, c2, d2)) == prop);
          }
      }
  }
}

TEST_CASE("projective point indices") {
  for (std::uint32_t q : {2u, 3u, 4u, 7u}) {
    const Field& f = field_of_order(q);
    CHECK(ProjPoint::finite(0).index(f) == 0);
    CHECK(ProjPoint::at_infinity().index(f) == q);
    for (std::uint32_t j = 0; j + 1 < q; ++j) CHECK(ProjPoint::finite(f.exp(j)).index(f) == 1 + j);
    for (std::uint32_t i = 0; i <= q; ++i) CHECK(ProjPoint::from_index(f, i).index(f) == i);
  }
  CHECK(ProjPoint::at_infinity().to_string(field_of_order(3)) == "[0:1]");
  CHECK(ProjPoint::finite(2).to_string(field_of_order(3)) == "[1:2]");
}

TEST_CASE("divisor examples") {
  const Field& f2 = field_of_order(2);
  Divisor dt = divisor_of(RatF::monomial(f2, 1, 1));
  CHECK(dt.mult.size() == 2);
  CHECK(dt.mult.at(Place::x()) == 1);
  CHECK(dt.mult.at(Place::infinity()) == -1);

  const Poly p = Poly(f2, {1, 1, 1});
  Divisor de = divisor_of(RatF(p, Poly::t_power(f2, 2)));
  CHECK(de == Divisor::of_place(Place::finite(p), 1) + Divisor::of_place(Place::x(), -2));
  CHECK(divisor_of(RatF::one(f2)).mult.empty());
  CHECK_THROWS_AS(divisor_of(RatF(f2)), Error);
}

TEST_CASE("divisors are additive with degree zero") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    auto rand_ratf = [&] {
      for (;;) {
        std::vector<std::uint32_t> a(1 + rng() % 5), b(1 + rng() % 4);
        for (auto& x : a) x = static_cast<std::uint32_t>(rng() % q);
        for (auto& x : b) x = static_cast<std::uint32_t>(rng() % q);
        Poly n(f, a), d(f, b);
        if (!n.is_zero() && !d.is_zero()) return RatF(n, d);
      }
    };
    for (int i = 0; i < 60; ++i) {
      RatF a = rand_ratf(), b = rand_ratf();
      CHECK(divisor_of(a).degree() == 0);
      CHECK(divisor_of(a * b) == divisor_of(a) + divisor_of(b));
    }
  }
}

TEST_CASE("uniformizer examples") {
  const Field& f3 = field_of_order(3);
  const Poly y1 = parse_poly(f3, "t - 1");
  const RatF u1 = uniformizer_for(Place::finite(y1));
  CHECK(u1 == RatF(y1, Poly::t_power(f3, 1)));
  CHECK(divisor_of(u1) == Divisor::of_place(Place::finite(y1), 1) - Divisor::of_place(Place::x(), 1));

  const Field& f2 = field_of_order(2);
  const Poly y2 = parse_poly(f2, "t^2 + t + 1");
  const RatF u2 = uniformizer_for(Place::finite(y2));
  CHECK(u2 == RatF(y2, Poly::t_power(f2, 2)));
  CHECK(divisor_of(u2) == Divisor::of_place(Place::finite(y2), 1) - Divisor::of_place(Place::x(), 2));

  CHECK_THROWS_AS(uniformizer_for(Place::x()), Error);
  CHECK_THROWS_AS(uniformizer_for(Place::infinity()), Error);
}

TEST_CASE("uniformizer divisor for every place up to degree 4 over F_2") {
  const Field& f = field_of_order(2);
  for (unsigned d = 1; d <= 4; ++d)
    for (std::uint64_t i = 0; i < count_monic(f, d); ++i) {
      const Poly p = monic_by_index(f, d, i);
      if (!is_irreducible(p) || p == Poly::t_power(f, 1)) continue;
      const Place y = Place::finite(p);
      CHECK(y.degree() == d);
      CHECK(divisor_of(uniformizer_for(y)) ==
            Divisor::of_place(y, 1) - Divisor::of_place(Place::x(), static_cast<int>(d)));
    }
}

TEST_CASE("place validation") {
  const Field& f2 = field_of_order(2);
  CHECK_THROWS_AS(Place::finite(Poly::t_power(f2, 1)), Error);
  CHECK_THROWS_AS(Place::finite(Poly(f2, {1, 0, 1})), Error);  // (t+1)^2
  CHECK(Place::x().degree() == 1);
  CHECK(Place::infinity().degree() == 1);
}
