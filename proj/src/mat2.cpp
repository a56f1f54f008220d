#include "hecke/mat2.hpp"

#include <tuple>

#include "hecke/error.hpp"

namespace hecke {

FqMat2 FqMat2::mul(const Field& f, const FqMat2& o) const {
  return {f.add(f.mul(a, o.a), f.mul(b, o.c)), f.add(f.mul(a, o.b), f.mul(b, o.d)),
          f.add(f.mul(c, o.a), f.mul(d, o.c)), f.add(f.mul(c, o.b), f.mul(d, o.d))};
}

FqMat2 FqMat2::add(const Field& f, const FqMat2& o) const {
  return {f.add(a, o.a), f.add(b, o.b), f.add(c, o.c), f.add(d, o.d)};
}

bool FqMat2::operator<(const FqMat2& o) const {
  return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
}

Mat2 Mat2::identity(const Field& f) { return {RatF::one(f), RatF(f), RatF(f), RatF::one(f)}; }

Mat2 Mat2::diag(const RatF& x, const RatF& y) { return {x, RatF(x.field()), RatF(x.field()), y}; }

Mat2 Mat2::swap(const Field& f) { return {RatF(f), RatF::one(f), RatF::one(f), RatF(f)}; }

Mat2 Mat2::from_fq(const Field& f, const FqMat2& m) {
  return {RatF::constant(f, m.a), RatF::constant(f, m.b), RatF::constant(f, m.c), RatF::constant(f, m.d)};
}

Mat2 Mat2::p_power(const Field& f, int n) { return diag(RatF::monomial(f, 1, -n), RatF::one(f)); }

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::scaled(const RatF& z) const { return {z * a, z * b, z * c, z * d}; }

RatF Mat2::det() const { return a * d - b * c; }

Mat2 Mat2::inverse() const {
  RatF dt = det();
  if (dt.is_zero()) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  RatF di = dt.inv();
  return {d * di, -b * di, -c * di, a * di};
}

bool Mat2::in_gamma_x() const {
  if (!a.in_inverse_poly_ring() || !b.in_inverse_poly_ring() || !c.in_inverse_poly_ring() ||
      !d.in_inverse_poly_ring())
    return false;
  RatF dt = det();
  return !dt.is_zero() && dt.is_constant();
}

bool Mat2::in_k_x() const {
  if (!a.is_integral_at_t() || !b.is_integral_at_t() || !c.is_integral_at_t() || !d.is_integral_at_t())
    return false;
  return det().is_unit_at_t();
}

FqMat2 Mat2::mod_t() const {
  return {a.series_coeff(0), b.series_coeff(0), c.series_coeff(0), d.series_coeff(0)};
}

std::string Mat2::to_string() const {
  return a.to_string() + ", " + b.to_string() + " ; " + c.to_string() + ", " + d.to_string();
}

}  // namespace hecke
