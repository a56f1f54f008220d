#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hecke {

// Polynomial in the indeterminate lambda with rational coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> c);
  static QPoly constant(const mpq_class& c);
  static QPoly lambda();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const mpq_class& lead() const { return c_.back(); }
  mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const mpq_class& s) const;
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
  static QPoly gcd(QPoly a, QPoly b);  // monic
  QPoly monic() const;
  mpq_class eval(const mpq_class& x) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Polynomial in lambda with integer coefficients, for fraction-free elimination.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> c);
  static ZPoly constant(const mpz_class& c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  // Exact quotient; throws Inconsistent if b does not divide *this over Z.
  ZPoly exact_div(const ZPoly& b) const;
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Element of Q(lambda) in canonical form: gcd(num, den) = 1, den monic.
class LambdaScalar {
 public:
  LambdaScalar() : num_(), den_(QPoly::constant(1)) {}
  LambdaScalar(long v) : num_(QPoly::constant(v)), den_(QPoly::constant(1)) {}  // NOLINT
  explicit LambdaScalar(const mpq_class& v) : num_(QPoly::constant(v)), den_(QPoly::constant(1)) {}
  LambdaScalar(const QPoly& num, const QPoly& den);
  static LambdaScalar lambda() { return LambdaScalar(QPoly::lambda(), QPoly::constant(1)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LambdaScalar operator+(const LambdaScalar& o) const;
  LambdaScalar operator-(const LambdaScalar& o) const;
  LambdaScalar operator-() const;
  LambdaScalar operator*(const LambdaScalar& o) const;
  LambdaScalar operator/(const LambdaScalar& o) const;
  bool operator==(const LambdaScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const LambdaScalar& o) const { return !(*this == o); }

  // Value at lambda = x; throws ZeroInput when x is a pole.
  mpq_class eval(const mpq_class& x) const;
  // Reduced ratio of integer-coefficient polynomials in l, e.g. "(l^2-6)/(3*l)".
  std::string to_string() const;

 private:
  void normalize();
  QPoly num_, den_;
};

// Inverse of LambdaScalar::to_string; accepts l or lambda, integers, + - * / ^ and parentheses.
LambdaScalar parse_lambda(std::string_view text);

}  // namespace hecke
