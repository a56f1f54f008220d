#include "hecke/ratfunc.hpp"

#include "hecke/error.hpp"

namespace hecke {

RatF::RatF(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroInput, "zero denominator");
  normalize();
}

void RatF::normalize() {
  const Field& F = den_.field();
  if (num_.is_zero()) {
    num_ = Poly(F);
    den_ = Poly::constant(F, 1);
    return;
  }
  if (!den_.is_one()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    std::uint32_t lead = den_.lead();
    if (lead != 1) {
      std::uint32_t inv = F.inv(lead);
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
}

RatF RatF::monomial(const Field& f, std::uint32_t c, int k) {
  if (k >= 0) return RatF(Poly::monomial(f, c, static_cast<unsigned>(k)));
  return RatF(Poly::constant(f, c), Poly::t_power(f, static_cast<unsigned>(-k)));
}

RatF RatF::laurent(const Field& f, int lo, const std::vector<std::uint32_t>& coeffs) {
  Poly p(f, coeffs);
  if (lo >= 0) return RatF(p.shifted_up(static_cast<unsigned>(lo)));
  return RatF(p, Poly::t_power(f, static_cast<unsigned>(-lo)));
}

RatF RatF::operator+(const RatF& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatF(num_ + o.num_, den_);
  return RatF(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatF RatF::operator-(const RatF& o) const {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatF(num_ - o.num_, den_);
  return RatF(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatF RatF::operator-() const {
  RatF r = *this;
  r.num_ = -r.num_;
  return r;
}

RatF RatF::operator*(const RatF& o) const {
  if (is_zero() || o.is_zero()) return RatF(field());
  if (den_.is_one() && o.den_.is_one()) return RatF(num_ * o.num_);
  // cross-cancel first to keep operands small
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  RatF r;
  r.num_ = (num_ / g1) * (o.num_ / g2);
  r.den_ = (den_ / g2) * (o.den_ / g1);
  std::uint32_t lead = r.den_.lead();
  if (lead != 1) {
    std::uint32_t inv = field().inv(lead);
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RatF RatF::inv() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInput, "inverse of zero");
  return RatF(den_, num_);
}

RatF RatF::operator/(const RatF& o) const { return *this * o.inv(); }

RatF RatF::scaled(std::uint32_t c) const {
  if (c == 0) return RatF(field());
  RatF r = *this;
  r.num_ = r.num_.scaled(c);
  return r;
}

int RatF::valuation() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInput, "valuation of zero");
  return static_cast<int>(num_.valuation()) - static_cast<int>(den_.valuation());
}

std::vector<std::uint32_t> RatF::series(int lo, int hi) const {
  const Field& F = field();
  std::vector<std::uint32_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  if (is_zero() || hi < lo) return out;
  const unsigned vn = num_.valuation(), vd = den_.valuation();
  const int v = static_cast<int>(vn) - static_cast<int>(vd);
  if (hi < v) return out;
  const Poly n = num_.shifted_down(vn);
  const Poly d = den_.shifted_down(vd);
  const std::size_t len = static_cast<std::size_t>(hi - v + 1);
  std::vector<std::uint32_t> s(len, 0);
  const std::uint32_t inv_d0 = F.inv(d.coeff(0));
  const std::size_t dlen = d.coeffs().size();
  for (std::size_t j = 0; j < len; ++j) {
    std::uint32_t acc = n.coeff(j);
    for (std::size_t l = 1; l < dlen && l <= j; ++l) {
      if (d.coeff(l) != 0) acc = F.sub(acc, F.mul(d.coeff(l), s[j - l]));
    }
    s[j] = F.mul(acc, inv_d0);
  }
  for (int i = std::max(lo, v); i <= hi; ++i) out[static_cast<std::size_t>(i - lo)] = s[static_cast<std::size_t>(i - v)];
  return out;
}

std::uint32_t RatF::series_coeff(int i) const { return series(i, i)[0]; }

bool RatF::is_integral_at_t() const { return den_.coeff(0) != 0; }

bool RatF::is_unit_at_t() const { return den_.coeff(0) != 0 && num_.coeff(0) != 0; }

bool RatF::in_inverse_poly_ring() const {
  if (is_zero()) return true;
  const auto& dc = den_.coeffs();
  for (std::size_t i = 0; i + 1 < dc.size(); ++i)
    if (dc[i] != 0) return false;
  return *num_.degree() <= *den_.degree();
}

bool valuation_at_least(const RatF& f, int k) { return f.is_zero() || f.valuation() >= k; }

std::string RatF::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    bool plain = s.find('+') == std::string::npos;
    return plain ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace hecke
