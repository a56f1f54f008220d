#include "hecke/places.hpp"

#include "hecke/error.hpp"

namespace hecke {

std::uint32_t ProjPoint::index(const Field& f) const {
  if (infinite) return f.q();
  if (a == 0) return 0;
  return 1 + f.log(a);
}

ProjPoint ProjPoint::from_index(const Field& f, std::uint32_t idx) {
  if (idx == f.q()) return at_infinity();
  if (idx == 0) return finite(0);
  if (idx > f.q()) throw Error(ErrorKind::ZeroInput, "projective index out of range");
  return finite(f.exp(idx - 1));
}

std::string ProjPoint::to_string(const Field& f) const {
  if (infinite) return "[0:1]";
  return "[1:" + f.format(a) + "]";
}

ProjPoint proj_normalize(const Field& f, std::uint32_t c, std::uint32_t d) {
  if (c == 0 && d == 0) throw Error(ErrorKind::ZeroRow, "zero row has no projective image");
  if (d == 0) return ProjPoint::at_infinity();
  return ProjPoint::finite(f.div(c, d));
}

Place Place::finite(const Poly& p) {
  if (p.is_zero() || p.lead() != 1) throw Error(ErrorKind::BadPlace, "place polynomial must be monic");
  if (p == Poly::t_power(p.field(), 1)) throw Error(ErrorKind::BadPlace, "t is the place x");
  if (!is_irreducible(p)) throw Error(ErrorKind::BadPlace, p.to_string() + " is not irreducible");
  return {Kind::Finite, p};
}

unsigned Place::degree() const {
  if (kind == Kind::Finite) return *poly.degree();
  return 1;
}

bool Place::operator<(const Place& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  if (kind == Kind::Finite) return poly < o.poly;
  return false;
}

std::string Place::to_string() const {
  switch (kind) {
    case Kind::X: return "x";
    case Kind::Infinity: return "inf";
    case Kind::Finite: return "(" + poly.to_string() + ")";
  }
  return "";
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [pl, m] : mult) d += m * static_cast<int>(pl.degree());
  return d;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [pl, m] : o.mult) {
    int v = (r.mult[pl] += m);
    if (v == 0) r.mult.erase(pl);
  }
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
  Divisor neg;
  for (const auto& [pl, m] : o.mult) neg.mult[pl] = -m;
  return *this + neg;
}

Divisor Divisor::of_place(const Place& p, int d) {
  Divisor r;
  if (d != 0) r.mult[p] = d;
  return r;
}

std::string Divisor::to_string() const {
  if (mult.empty()) return "0";
  std::string out;
  for (const auto& [pl, m] : mult) {
    if (!out.empty()) out += m < 0 ? " - " : " + ";
    else if (m < 0) out += "-";
    int a = m < 0 ? -m : m;
    if (a != 1) out += std::to_string(a) + "*";
    out += pl.to_string();
  }
  return out;
}

Divisor divisor_of(const RatF& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "divisor of zero");
  const Field& F = f.field();
  const Poly t = Poly::t_power(F, 1);
  Divisor out;
  auto add_poly = [&](const Poly& p, int sign) {
    for (const auto& [g, m] : factor_trial(p).factors) {
      Place pl = g == t ? Place::x() : Place{Place::Kind::Finite, g};
      out = out + Divisor::of_place(pl, sign * m);
    }
  };
  add_poly(f.num(), 1);
  add_poly(f.den(), -1);
  int v_inf = static_cast<int>(*f.den().degree()) - static_cast<int>(*f.num().degree());
  out = out + Divisor::of_place(Place::infinity(), v_inf);
  return out;
}

RatF uniformizer_for(const Place& y) {
  if (y.kind != Place::Kind::Finite) throw Error(ErrorKind::BadPlace, "uniformizer is defined for finite places other than x");
  const unsigned d = y.degree();
  const Field& F = y.poly.field();
  RatF u(y.poly, Poly::t_power(F, d));
  Divisor want = Divisor::of_place(y, 1) - Divisor::of_place(Place::x(), static_cast<int>(d));
  if (!(divisor_of(u) == want)) throw Error(ErrorKind::Inconsistent, "uniformizer divisor check failed");
  return u;
}

}  // namespace hecke
