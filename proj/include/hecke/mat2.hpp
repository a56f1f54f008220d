#pragma once

#include <string>

#include "hecke/ratfunc.hpp"

namespace hecke {

// 2x2 matrix over F_q, entries as field codes.
struct FqMat2 {
  std::uint32_t a = 1, b = 0, c = 0, d = 1;

  static FqMat2 identity() { return {1, 0, 0, 1}; }
  std::uint32_t det(const Field& f) const { return f.sub(f.mul(a, d), f.mul(b, c)); }
  FqMat2 mul(const Field& f, const FqMat2& o) const;
  FqMat2 add(const Field& f, const FqMat2& o) const;
  bool operator==(const FqMat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator<(const FqMat2& o) const;
};

// Row-major 2x2 matrix over F_q(t).
struct Mat2 {
  RatF a, b, c, d;

  static Mat2 identity(const Field& f);
  static Mat2 diag(const RatF& x, const RatF& y);
  // [[0,1],[1,0]]
  static Mat2 swap(const Field& f);
  static Mat2 from_fq(const Field& f, const FqMat2& m);
  // p_n = diag(t^-n, 1)
  static Mat2 p_power(const Field& f, int n);

  const Field& field() const { return a.field(); }
  Mat2 operator*(const Mat2& o) const;
  Mat2 scaled(const RatF& z) const;
  RatF det() const;
  // Throws SingularMatrix when det == 0.
  Mat2 inverse() const;
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  // Entries in F_q[1/t] and determinant in F_q^x.
  bool in_gamma_x() const;
  // Entries integral at t and determinant a unit there.
  bool in_k_x() const;
  // Reduction modulo t of an element of K_x.
  FqMat2 mod_t() const;

  std::string to_string() const;
};

}  // namespace hecke
