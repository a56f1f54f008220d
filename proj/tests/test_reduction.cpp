#include <random>
#include <set>

#include "doctest.h"
#include "hecke/error.hpp"
#include "hecke/levels.hpp"
#include "hecke/perturb.hpp"

using namespace hecke;

namespace {

RatF tp(const Field& f, int k) { return RatF::monomial(f, 1, k); }
RatF c(const Field& f, std::uint32_t v) { return RatF::constant(f, v); }

Vertex pair(const Field& f, int n, const ProjPoint& w) { return {n, static_cast<int>(w.index(f))}; }

void check_audit(const Mat2& M) {
  const Decomposition d = decompose(M);
  CHECK(d.product() == M);
  CHECK(d.gamma.in_gamma_x());
  CHECK(d.k.in_k_x());
  CHECK(d.n >= 0);
}

}  // namespace

TEST_CASE("triangular form examples") {
  const Field& f = field_of_order(2);
  const TriangularForm a = iwasawa_triangularize(Mat2::p_power(f, 3));
  CHECK(a.m == -3);
  CHECK(a.h.is_zero());
  CHECK(a.k == Mat2::identity(f));

  const Mat2 B{RatF(f), tp(f, -1), tp(f, 1), RatF(f)};
  const TriangularForm b = iwasawa_triangularize(B);
  CHECK(b.h.is_zero());
  CHECK(std::abs(b.m) == 2);
  CHECK(b.k.mod_t() == FqMat2{0, 1, 1, 0});
  CHECK(decompose(B).n == 2);

  const Field& f3 = field_of_order(3);
  for (std::uint32_t av = 0; av < 3; ++av) {
    const Mat2 C{tp(f3, 1), RatF::monomial(f3, av, 1), RatF(f3), RatF::one(f3)};
    const TriangularForm t = iwasawa_triangularize(C);
    CHECK(t.m == 1);
    CHECK(t.h.is_zero());
    const FqMat2 kb = t.k.mod_t();
    CHECK(kb.c == 0);
    CHECK(kb.a == kb.d);
  }
  CHECK_THROWS_AS(iwasawa_triangularize(Mat2{RatF::one(f), RatF::one(f), RatF::one(f), RatF::one(f)}), Error);
}

TEST_CASE("descent examples") {
  const Field& f = field_of_order(2);
  auto run = [&](int m, const RatF& h) {
    TriangularForm form;
    form.m = m;
    form.h = h;
    form.gamma = Mat2::identity(f);
    form.k = Mat2::identity(f);
    form.z = RatF::one(f);
    return reduce_upper(form).n;
  };
  CHECK(run(1, RatF(f)) == 1);
  CHECK(run(3, tp(f, 1)) == 1);
  CHECK(run(4, tp(f, 1)) == 2);
  CHECK_THROWS_AS(run(3, tp(f, 3)), Error);
  CHECK_THROWS_AS(run(3, RatF::one(f)), Error);
}

TEST_CASE("unramified reduction examples") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    CHECK(reduce_unramified(Mat2::p_power(f, 5)) == 5);
    for (int d = 1; d <= 3; ++d)
      for (int n = 0; n <= 6; ++n) {
        CHECK(reduce_unramified(Mat2::diag(tp(f, -n), tp(f, d))) == n + d);
        if (n < d) continue;
        for (std::uint64_t i = 0; i < count_monic(f, static_cast<unsigned>(d)); ++i) {
          const Poly b = monic_by_index(f, static_cast<unsigned>(d), i) - Poly::t_power(f, static_cast<unsigned>(d));
          CHECK(reduce_unramified(Mat2{tp(f, d - n), RatF(b), RatF(f), RatF::one(f)}) == n - d);
        }
      }
  }
}

TEST_CASE("ramified reduction examples") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& f = field_of_order(q);
    CHECK(reduce_ramified1(Mat2::identity(f)) == Vertex::base());
    for (int n = 1; n <= 4; ++n)
      for (std::uint32_t i = 0; i <= q; ++i) {
        const ProjPoint w = ProjPoint::from_index(f, i);
        CHECK(reduce_ramified1(Mat2::p_power(f, n) * theta(f, w)) == pair(f, n, w));
      }
    for (std::uint32_t a = 1; a < q; ++a) {
      const Mat2 M{tp(f, 1), RatF::monomial(f, a, 1), RatF(f), RatF::one(f)};
      CHECK(reduce_ramified1(M) == pair(f, 1, ProjPoint::finite(f.inv(a))));
    }
  }
}

TEST_CASE("digression bijection") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Field& f = field_of_order(q);
    for (int n = 1; n <= 4; ++n) {
      const Mat2 pm = Mat2::p_power(f, -n);
      for (std::uint32_t a = 1; a < q; ++a) {
        const Mat2 th{RatF::one(f), c(f, a), RatF(f), RatF::one(f)};
        CHECK(reduce_ramified1(pm * th) == pair(f, n, ProjPoint::finite(f.inv(a))));
      }
      CHECK(reduce_ramified1(pm * Mat2::swap(f)) == pair(f, n, ProjPoint::finite(0)));
      CHECK(reduce_ramified1(pm) == pair(f, n, ProjPoint::at_infinity()));
    }
  }
}

TEST_CASE("fiber sizes over GL2(F_q)") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    std::vector<FqMat2> gl2;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t cc = 0; cc < q; ++cc)
          for (std::uint32_t d = 0; d < q; ++d)
            if (FqMat2{a, b, cc, d}.det(f) != 0) gl2.push_back({a, b, cc, d});
    CHECK(gl2.size() == (q * q - 1) * (q * q - q));
    for (int n = 0; n <= 4; ++n) {
      std::set<Vertex> seen;
      for (const FqMat2& g : gl2) seen.insert(reduce_ramified1(Mat2::p_power(f, n) * Mat2::from_fq(f, g)));
      CHECK(seen.size() == (n == 0 ? 1u : q + 1));
    }
  }
}

TEST_CASE("perturbation examples and invariance") {
  const Field& f = field_of_order(2);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    CHECK(reduce_unramified(random_coset_perturb(Mat2::identity(f), 0, seed)) == 0);
    CHECK(reduce_ramified1(random_coset_perturb(Mat2::p_power(f, 3), 1, seed)) == pair(f, 3, ProjPoint::finite(0)));
    CHECK(reduce_ramified1(random_coset_perturb(Mat2::p_power(f, 2) * Mat2::swap(f), 1, seed)) ==
          pair(f, 2, ProjPoint::at_infinity()));
  }
  std::mt19937_64 rng(9);
  for (std::uint32_t q : {3u, 4u}) {
    const Field& g = field_of_order(q);
    for (int i = 0; i < 100; ++i) {
      const Vertex v{1 + static_cast<int>(rng() % 4), static_cast<int>(rng() % (q + 1))};
      const Mat2 R = ramified_representative(g, v);
      const Mat2 P = random_coset_perturb(R, 1, rng());
      CHECK(reduce_ramified1(P) == v);
      check_audit(P);
      const Mat2 P2 = random_coset_perturb(R, 2, rng());
      CHECK(reduce_ramified1(P2) == v);
    }
  }
}

TEST_CASE("factorization audit on structured inputs") {
  const Field& f = field_of_order(3);
  check_audit(Mat2::p_power(f, 4));
  check_audit(Mat2{tp(f, 2), tp(f, -1) + RatF::one(f), tp(f, 3), RatF(Poly(f, {2, 1}))});
  check_audit(Mat2{RatF(f), RatF::one(f), RatF::one(f), RatF(f)});
  check_audit(Mat2::diag(tp(f, 5), tp(f, -2)));
  check_audit(Mat2{RatF(Poly(f, {1, 2, 1})) / RatF(Poly(f, {2, 0, 1})), tp(f, -4), tp(f, 7), RatF::one(f)});
}

TEST_CASE("central Gamma membership examples") {
  const Field& f = field_of_order(3);
  CHECK(membership_central_gamma(Mat2::identity(f)));
  CHECK(membership_central_gamma(Mat2::diag(tp(f, 1), tp(f, 1))));
  CHECK_FALSE(membership_central_gamma(Mat2::diag(tp(f, 1), RatF::one(f))));
  const Mat2 g{RatF::one(f), tp(f, -2), RatF(f), RatF::one(f)};
  CHECK(membership_central_gamma(g.scaled(RatF(Poly(f, {1, 1})))));
  CHECK_FALSE(membership_central_gamma(Mat2{RatF::one(f), tp(f, 1), RatF(f), RatF::one(f)}));
}
