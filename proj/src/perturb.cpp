#include "hecke/perturb.hpp"

#include <random>

namespace hecke {

namespace {

class Sampler {
 public:
  Sampler(const Field& f, std::uint64_t seed) : f_(f), rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::uint32_t elem() { return static_cast<std::uint32_t>(uniform(0, static_cast<int>(f_.q()) - 1)); }
  std::uint32_t unit() { return static_cast<std::uint32_t>(uniform(1, static_cast<int>(f_.q()) - 1)); }

  // sum_{i=lo}^{hi} c_i t^i
  RatF laurent(int lo, int hi) {
    std::vector<std::uint32_t> c;
    for (int i = lo; i <= hi; ++i) c.push_back(elem());
    return RatF::laurent(f_, lo, c);
  }

  Mat2 gamma_factor() {
    const RatF one = RatF::one(f_), zero(f_);
    switch (uniform(0, 3)) {
      case 0: return {one, laurent(-3, 0), zero, one};
      case 1: return {one, zero, laurent(-3, 0), one};
      case 2: return Mat2::diag(RatF::constant(f_, unit()), RatF::constant(f_, unit()));
      default: return Mat2::swap(f_);
    }
  }

  // Integral function congruent to 0 mod t^r.
  RatF integral(int r) {
    RatF p = laurent(r, r + 3);
    if (uniform(0, 1) == 0) return p;
    // rational with a unit denominator
    RatF den = RatF::one(f_) + RatF::monomial(f_, unit(), uniform(1, 2));
    return p / den;
  }

  // Unit of O_x congruent to 1 mod t^r (any unit for r = 0).
  RatF unit_series(int r) {
    const int s = std::max(r, 1);
    RatF base = r == 0 ? RatF::constant(f_, unit()) : RatF::one(f_);
    RatF u = RatF::one(f_) + RatF::monomial(f_, elem(), s);
    if (uniform(0, 1) == 0) u = u.inv();
    return base * u;
  }

  Mat2 k_factor(int r) {
    const RatF one = RatF::one(f_), zero(f_);
    const int kinds = r == 0 ? 4 : 3;
    switch (uniform(0, kinds - 1)) {
      case 0: return {one, integral(r), zero, one};
      case 1: return {one, zero, integral(r), one};
      case 2: return Mat2::diag(unit_series(r), unit_series(r));
      default: return Mat2::swap(f_);
    }
  }

 private:
  const Field& f_;
  std::mt19937_64 rng_;
};

}  // namespace

Mat2 random_coset_perturb(const Mat2& M, int r, std::uint64_t seed) {
  const Field& f = M.field();
  Sampler s(f, seed);
  Mat2 gamma = Mat2::identity(f), k = Mat2::identity(f);
  for (int i = s.uniform(0, 6); i > 0; --i) gamma = gamma * s.gamma_factor();
  for (int i = s.uniform(0, 6); i > 0; --i) k = k * s.k_factor(r);
  const RatF z = RatF::monomial(f, s.unit(), s.uniform(-3, 3));
  return gamma.scaled(z) * M * k;
}

}  // namespace hecke
