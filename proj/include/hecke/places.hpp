#pragma once

#include <map>
#include <string>

#include "hecke/ratfunc.hpp"

namespace hecke {

// Point of P^1(F_q): [1:a] or [0:1].
struct ProjPoint {
  bool infinite = false;  // [0:1]
  std::uint32_t a = 0;    // for [1:a]

  static ProjPoint finite(std::uint32_t a) { return {false, a}; }
  static ProjPoint at_infinity() { return {true, 0}; }

  // [1:0] -> 0, [1:g^j] -> 1 + j, [0:1] -> q.
  std::uint32_t index(const Field& f) const;
  static ProjPoint from_index(const Field& f, std::uint32_t idx);
  std::string to_string(const Field& f) const;
  bool operator==(const ProjPoint& o) const { return infinite == o.infinite && (infinite || a == o.a); }
};

// [c:d] normalized; throws ZeroRow when c = d = 0.
ProjPoint proj_normalize(const Field& f, std::uint32_t c, std::uint32_t d);

// Closed point of P^1: the place x (t = 0), a finite place given by a monic
// irreducible other than t, or the place at infinity.
struct Place {
  enum class Kind { X, Finite, Infinity };
  Kind kind = Kind::X;
  Poly poly;  // Finite only

  static Place x() { return {Kind::X, Poly()}; }
  static Place infinity() { return {Kind::Infinity, Poly()}; }
  // Throws BadPlace unless p is monic irreducible and not t.
  static Place finite(const Poly& p);

  unsigned degree() const;
  bool operator<(const Place& o) const;
  bool operator==(const Place& o) const { return kind == o.kind && (kind != Kind::Finite || poly == o.poly); }
  std::string to_string() const;
};

struct Divisor {
  std::map<Place, int> mult;

  int degree() const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator+(const Divisor& o) const;
  bool operator==(const Divisor& o) const { return mult == o.mult; }
  std::string to_string() const;
  // d * place as a divisor.
  static Divisor of_place(const Place& p, int d);
};

// Principal divisor of a nonzero f; degree 0 by construction.
Divisor divisor_of(const RatF& f);

// f with div(f) = y - deg(y) x, namely p(t)/t^deg p; throws BadPlace for x or infinity.
RatF uniformizer_for(const Place& y);

}  // namespace hecke
