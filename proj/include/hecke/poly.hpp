#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/field.hpp"

namespace hecke {

// Polynomial in t over F_q, coefficients low to high with no trailing zeros.
// The zero polynomial has degree std::nullopt (the -infinity sentinel).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<std::uint32_t> coeffs);

  static Poly constant(const Field& f, std::uint32_t c);
  static Poly monomial(const Field& f, std::uint32_t c, unsigned k);
  static Poly t_power(const Field& f, unsigned k) { return monomial(f, 1, k); }

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::optional<unsigned> degree() const;
  // Largest power of t dividing a nonzero polynomial.
  unsigned valuation() const;
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator/(const Poly& o) const;
  Poly operator%(const Poly& o) const;
  Poly scaled(std::uint32_t c) const;
  Poly shifted_up(unsigned k) const;
  // Exact division by t^k; throws BadSupport if t^k does not divide.
  Poly shifted_down(unsigned k) const;
  Poly monic() const;
  std::uint32_t eval(std::uint32_t x) const;

  static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
  static Poly gcd(Poly a, Poly b);

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Degree first, then coefficient codes from the top down.
  bool operator<(const Poly& o) const;

  std::string to_string() const;

 private:
  void trim();
  const Field* f_ = nullptr;
  std::vector<std::uint32_t> c_;
};

// index-th monic polynomial of degree k in code order (lower coefficients as
// base-q digits, constant term least significant).
Poly monic_by_index(const Field& f, unsigned k, std::uint64_t index);
std::uint64_t count_monic(const Field& f, unsigned k);

bool is_irreducible(const Poly& f);
// Factorization of a nonzero polynomial by trial division: unit times
// monic irreducibles with multiplicity, factors sorted ascending.
struct Factorization {
  std::uint32_t unit = 1;
  std::vector<std::pair<Poly, int>> factors;
};
Factorization factor_trial(const Poly& f);
// Monic h with h^2 == f for monic f, if one exists.
std::optional<Poly> sqrt_monic(const Poly& f);

}  // namespace hecke
