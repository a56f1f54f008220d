#include <random>

#include "doctest.h"
#include "hecke/error.hpp"
#include "hecke/ratfunc.hpp"

using namespace hecke;

namespace {

Poly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<std::uint32_t> c(0, f.q() - 1);
  std::vector<std::uint32_t> v(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : v) x = c(rng);
  return Poly(f, v);
}

RatF random_nonzero_ratf(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    Poly n = random_poly(f, rng, 4), d = random_poly(f, rng, 3);
    if (!n.is_zero() && !d.is_zero()) return RatF(n, d) * RatF::monomial(f, 1, static_cast<int>(rng() % 7) - 3);
  }
}

// Count of monic irreducibles of degree n: (1/n) sum_{k | n} mu(k) q^(n/k).
long long necklace(long long q, int n) {
  auto mu = [](int k) {
    int m = 1;
    for (int p = 2; p * p <= k; ++p) {
      if (k % p) continue;
      k /= p;
      if (k % p == 0) return 0;
      m = -m;
    }
    return k > 1 ? -m : m;
  };
  long long s = 0;
  for (int k = 1; k <= n; ++k) {
    if (n % k) continue;
    long long pw = 1;
    for (int i = 0; i < n / k; ++i) pw *= q;
    s += mu(k) * pw;
  }
  return s / n;
}

}  // namespace

TEST_CASE("polynomial division identity") {
  std::mt19937_64 rng(1);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& f = field_of_order(q);
    for (int i = 0; i < 200; ++i) {
      Poly a = random_poly(f, rng, 8), b = random_poly(f, rng, 4);
      if (b.is_zero()) continue;
      Poly quo, rem;
      Poly::divmod(a, b, quo, rem);
      CHECK(quo * b + rem == a);
      CHECK((rem.is_zero() || *rem.degree() < *b.degree()));
      if (!a.is_zero()) {
        Poly g = Poly::gcd(a, b);
        CHECK(g.lead() == 1);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
      }
    }
  }
}

TEST_CASE("zero polynomial degree sentinel") {
  const Field& f = field_of_order(3);
  CHECK_FALSE(Poly(f).degree().has_value());
  CHECK(*Poly::constant(f, 2).degree() == 0);
  CHECK(Poly(f, {1, 2, 0, 0}).coeffs().size() == 2);
}

TEST_CASE("irreducible counts match the necklace formula") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = field_of_order(q);
    for (unsigned n = 1; n <= (q == 2 ? 7u : 4u); ++n) {
      long long count = 0;
      for (std::uint64_t i = 0; i < count_monic(f, n); ++i) count += is_irreducible(monic_by_index(f, n, i));
      CHECK(count == necklace(q, static_cast<int>(n)));
    }
  }
}

TEST_CASE("trial factorization reconstructs") {
  std::mt19937_64 rng(2);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Field& f = field_of_order(q);
    for (int i = 0; i < 100; ++i) {
      Poly a = random_poly(f, rng, 8);
      if (a.is_zero()) continue;
      Factorization fa = factor_trial(a);
      Poly prod = Poly::constant(f, fa.unit);
      for (const auto& [p, m] : fa.factors) {
        CHECK(is_irreducible(p));
        CHECK(p.lead() == 1);
        for (int k = 0; k < m; ++k) prod = prod * p;
      }
      CHECK(prod == a);
      Poly sq = a.monic() * a.monic();
      auto r = sqrt_monic(sq);
      REQUIRE(r.has_value());
      CHECK(*r * *r == sq);
    }
  }
  const Field& f2 = field_of_order(2);
  CHECK_FALSE(sqrt_monic(Poly(f2, {0, 1})).has_value());
}

TEST_CASE("t-adic valuation examples") {
  const Field& f2 = field_of_order(2);
  CHECK(RatF::monomial(f2, 1, 2).valuation() == 2);
  CHECK(RatF(Poly(f2, {1, 1, 1}), Poly::t_power(f2, 2)).valuation() == -2);
  CHECK(RatF(Poly(f2, {1, 1})).valuation() == 0);
  CHECK_THROWS_AS(RatF(f2).valuation(), Error);
}

TEST_CASE("series coefficient examples") {
  const Field& f2 = field_of_order(2);
  const RatF inv1t = RatF::one(f2) / RatF(Poly(f2, {1, 1}));
  CHECK(inv1t.series_coeff(3) == 1);
  const RatF t2 = RatF::monomial(f2, 1, 2);
  CHECK(t2.series_coeff(2) == 1);
  CHECK(t2.series_coeff(0) == 0);
  CHECK(RatF(f2).series_coeff(5) == 0);
}

TEST_CASE("valuation is additive and series reproduce the function") {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = field_of_order(q);
    for (int i = 0; i < 100; ++i) {
      RatF a = random_nonzero_ratf(f, rng), b = random_nonzero_ratf(f, rng);
      CHECK((a * b).valuation() == a.valuation() + b.valuation());
      CHECK((a / b) * b == a);
      const int v = a.valuation();
      for (int N = v; N <= v + 6; ++N) {
        RatF partial = RatF::laurent(f, v, a.series(v, N));
        CHECK(valuation_at_least(a - partial, N + 1));
      }
    }
  }
}

TEST_CASE("canonical form") {
  const Field& f3 = field_of_order(3);
  RatF x(Poly(f3, {2, 2}), Poly(f3, {2, 2, 0, 0}));
  CHECK(x.is_one());
  RatF y(Poly(f3, {1}), Poly(f3, {0, 2}));
  CHECK(y.den().lead() == 1);
  CHECK(y == RatF::monomial(f3, 2, -1));
  CHECK_THROWS_AS(RatF(Poly(f3, {1}), Poly(f3)), Error);
  CHECK(RatF::monomial(f3, 1, -2).in_inverse_poly_ring());
  CHECK_FALSE(RatF::monomial(f3, 1, 1).in_inverse_poly_ring());
  CHECK(RatF(Poly(f3, {1, 1})).is_unit_at_t());
}
