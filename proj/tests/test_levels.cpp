#include <cstdlib>
#include <map>
#include <random>

#include "doctest.h"
#include "hecke/error.hpp"
#include "hecke/levels.hpp"

using namespace hecke;

namespace {

using NbMap = std::map<Vertex, long long>;

LevelRElement elem(int n, std::vector<FqMat2> g) { return {n, std::move(g)}; }

}  // namespace

TEST_CASE("finite lift enumeration") {
  CHECK(klift_enum(field_of_order(2), 1).size() == 1);
  CHECK(klift_enum(field_of_order(2), 1)[0] == Mat2::identity(field_of_order(2)));
  const auto k2 = klift_enum(field_of_order(2), 2);
  CHECK(k2.size() == 16);
  for (const Mat2& k : k2) CHECK(in_principal_congruence(k, 2));
  CHECK(klift_enum(field_of_order(3), 2).size() == 81);
  CHECK_THROWS_AS(klift_enum(field_of_order(2), 3, 100), Error);
}

TEST_CASE("budget from the environment") {
  unsetenv("HECKE_BUDGET");
  CHECK(budget_from_env() == kDefaultBudget);
  setenv("HECKE_BUDGET", "1234", 1);
  CHECK(budget_from_env() == 1234);
  setenv("HECKE_BUDGET", "junk", 1);
  CHECK(budget_from_env(7) == 7);
  unsetenv("HECKE_BUDGET");
}

TEST_CASE("equivalence oracle examples") {
  const Field& f = field_of_order(2);
  const auto k1 = klift_enum(f, 1);
  const LevelRElement a = elem(2, {FqMat2{1, 1, 0, 1}});
  CHECK(equivalent_at_level(f, a, a, k1));
  for (int n = 1; n <= 3; ++n)
    CHECK_FALSE(equivalent_at_level(f, elem(n, {FqMat2::identity()}), elem(n, {FqMat2{0, 1, 1, 0}}), k1));
  CHECK(equivalent_at_level(f, elem(0, {FqMat2::identity()}), elem(0, {FqMat2{0, 1, 1, 0}}), k1));
}

TEST_CASE("r = 1 oracle agrees with level-one labels") {
  const Field& f = field_of_order(2);
  const auto k1 = klift_enum(f, 1);
  for (int n = 0; n <= 4; ++n) {
    const auto cand = fiber_candidates(f, n, 1);
    CHECK(cand.size() == 6);
    for (const auto& A : cand)
      for (const auto& B : cand) {
        const bool same = reduce_ramified1(A.matrix(f)) == reduce_ramified1(B.matrix(f));
        CHECK(equivalent_at_level(f, A, B, k1) == same);
        CHECK(orbit_equivalent(f, A, B) == same);
      }
  }
}

TEST_CASE("fiber classes at r = 1") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    for (ClassRoute route : {ClassRoute::Oracle, ClassRoute::Orbit}) {
      CHECK(enumerate_fiber_classes(f, 0, 1, route).reps.size() == 1);
      for (int n = 1; n <= 3; ++n) CHECK(enumerate_fiber_classes(f, n, 1, route).reps.size() == q + 1);
    }
  }
}

TEST_CASE("fiber reports") {
  const Field& f = field_of_order(2);
  const FiberReport r1 = fiber_report(f, 1, 6);
  CHECK(r1.counts == std::vector<std::size_t>{1, 3, 3, 3, 3, 3, 3});
  REQUIRE(r1.stabilized_at.has_value());
  CHECK(*r1.stabilized_at == 1);
  CHECK(r1.tail_count == std::optional<std::size_t>(3));
  const FiberReport r0 = fiber_report(f, 0, 4);
  CHECK(r0.counts == std::vector<std::size_t>(5, 1));
  const std::string js = r1.to_json();
  CHECK(js.find("\"counts\"") != std::string::npos);
  CHECK(js.find("\"stabilized_at\"") != std::string::npos);
  CHECK(js.find("\"tail_count\"") != std::string::npos);
  CHECK_THROWS_AS(fiber_report(f, 2, 2, ClassRoute::Oracle, 10), Error);
}

TEST_CASE("orbit route is sound: equivalences come with explicit witnesses") {
  // B := U A mod t^r with p_n U p_n^-1 in Gamma_x; then p_n (U A) = (p_n U p_n^-1) p_n A
  // and B^-1 U A lies in K^(r), so p_n A and p_n B are equivalent.
  std::mt19937_64 rng(41);
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    for (int r : {2, 3}) {
      if (q == 3 && r == 3) continue;
      for (int n = 0; n <= 3; ++n) {
        const auto cand = fiber_candidates(f, n, r);
        for (int trial = 0; trial < 20; ++trial) {
          const LevelRElement& A = cand[rng() % cand.size()];
          Mat2 U;
          for (;;) {
            auto coef = [&] { return static_cast<std::uint32_t>(rng() % q); };
            const int top = n == 0 ? 0 : std::min(n, r - 1);
            std::vector<std::uint32_t> P(static_cast<std::size_t>(top + 1));
            for (auto& x : P) x = coef();
            U = Mat2{RatF::constant(f, coef()), RatF::laurent(f, 0, P), RatF::constant(f, n == 0 ? coef() : 0),
                     RatF::constant(f, coef())};
            if (!U.det().is_zero() && U.det().is_constant()) break;
          }
          const Mat2 pn = Mat2::p_power(f, n);
          REQUIRE((pn * U * pn.inverse()).in_gamma_x());
          const Mat2 UA = U * A.unit_part(f);
          const LevelRElement B = truncate_cofactor(n, UA, r);
          CHECK(in_principal_congruence(B.unit_part(f).inverse() * UA, r));
          CHECK(orbit_equivalent(f, A, B));
          CHECK(orbit_canonical(f, A) == orbit_canonical(f, B));
        }
      }
    }
  }
}

TEST_CASE("finite-lift equivalences are orbit equivalences at r = 2") {
  const Field& f = field_of_order(2);
  for (int n = 0; n <= 2; ++n) {
    const auto a = enumerate_fiber_classes(f, n, 2, ClassRoute::Oracle);
    const auto b = enumerate_fiber_classes(f, n, 2, ClassRoute::Orbit);
    std::map<std::size_t, std::size_t> img;
    for (std::size_t i = 0; i < a.class_of.size(); ++i) {
      auto [it, fresh] = img.emplace(a.class_of[i], b.class_of[i]);
      CHECK(it->second == b.class_of[i]);
    }
    CHECK(b.reps.size() == predicted_fiber_size(2, 2, n));
  }
}

TEST_CASE("level-r model at r = 1 reproduces level-one neighbors") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field& f = field_of_order(q);
    LevelRModel model(f, 1);
    for (bool at_x : {false, true}) {
      const OperatorDesc lr = OperatorDesc::level_r(f, 1, at_x, 1);
      const OperatorDesc k1 = at_x ? OperatorDesc::ramified_at_x(f) : OperatorDesc::ramified(f, 1);
      auto km = make_level_model(k1);
      for (int n = 0; n <= 3; ++n)
        for (const Vertex& v : km->vertices_at(n)) {
          NbMap want, got;
          for (const auto& [u, m] : neighbors(k1, *km, v)) want[model.classify(km->representative(u))] += m;
          for (const auto& [u, m] : neighbors_general_r(lr, model, model.classify(km->representative(v)))) got[u] += m;
          CHECK(want == got);
        }
    }
  }
}

TEST_CASE("level-r representatives classify to themselves and sums match") {
  const Field& f = field_of_order(2);
  LevelRModel model(f, 2);
  for (int n = 0; n <= 3; ++n) {
    const auto vs = model.vertices_at(n);
    CHECK(vs.size() == predicted_fiber_size(2, 2, n));
    for (const Vertex& v : vs) {
      CHECK(model.classify(model.representative(v)) == v);
      for (bool at_x : {false, true}) {
        const OperatorDesc d = OperatorDesc::level_r(f, 2, at_x, at_x ? 1 : 2);
        long long s = 0;
        for (const auto& [u, m] : neighbors_general_r(d, model, v)) s += m;
        CHECK(s == d.out_degree());
      }
    }
  }
  CHECK(model.representative({0, 0}) == Mat2::identity(f));
  CHECK_THROWS_AS(neighbors_general_r(OperatorDesc::level_r(f, 3, true, 1), model, {0, 0}), Error);
}

TEST_CASE("predicted fiber sizes") {
  CHECK(predicted_fiber_size(2, 1, 0) == 1);
  CHECK(predicted_fiber_size(3, 1, 5) == 4);
  CHECK(predicted_fiber_size(2, 2, 0) == 8);
  CHECK(predicted_fiber_size(2, 2, 1) == 12);
  CHECK(predicted_fiber_size(2, 2, 4) == 12);
}
