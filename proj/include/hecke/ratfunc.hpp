#pragma once

#include <string>
#include <vector>

#include "hecke/poly.hpp"

namespace hecke {

// Element of F_q(t) in lowest terms: gcd(num, den) = 1, den monic.
class RatF {
 public:
  RatF() = default;
  explicit RatF(const Field& f) : num_(f), den_(Poly::constant(f, 1)) {}
  explicit RatF(const Poly& p) : num_(p), den_(Poly::constant(p.field(), 1)) {}
  // Throws ZeroInput on den == 0.
  RatF(const Poly& num, const Poly& den);

  static RatF constant(const Field& f, std::uint32_t c) { return RatF(Poly::constant(f, c)); }
  static RatF one(const Field& f) { return constant(f, 1); }
  // c * t^k for any integer k.
  static RatF monomial(const Field& f, std::uint32_t c, int k);
  // sum_{i} coeffs[i] t^(lo + i)
  static RatF laurent(const Field& f, int lo, const std::vector<std::uint32_t>& coeffs);

  const Field& field() const { return den_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatF operator+(const RatF& o) const;
  RatF operator-(const RatF& o) const;
  RatF operator-() const;
  RatF operator*(const RatF& o) const;
  RatF operator/(const RatF& o) const;
  RatF inv() const;
  RatF scaled(std::uint32_t c) const;
  bool operator==(const RatF& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatF& o) const { return !(*this == o); }

  // t-adic valuation; ZeroInput for zero.
  int valuation() const;
  // Coefficient of t^i in the t-adic Laurent expansion.
  std::uint32_t series_coeff(int i) const;
  // Coefficients of t^lo .. t^(hi) inclusive (hi >= lo).
  std::vector<std::uint32_t> series(int lo, int hi) const;
  // No pole at t = 0.
  bool is_integral_at_t() const;
  // Unit of F_q[[t]]: integral with nonzero constant term.
  bool is_unit_at_t() const;
  // Element of F_q[1/t]: denominator t^k and deg num <= k.
  bool in_inverse_poly_ring() const;
  // Constant in F_q (possibly zero).
  bool is_constant() const { return den_.is_one() && (!num_.degree() || *num_.degree() == 0); }

  std::string to_string() const;

 private:
  void normalize();
  Poly num_, den_;
};

// Mirror of valuation for the zero sentinel: true when f is zero or v(f) >= k.
bool valuation_at_least(const RatF& f, int k);

}  // namespace hecke
