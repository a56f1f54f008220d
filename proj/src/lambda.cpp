#include "hecke/lambda.hpp"

#include "hecke/detail/expr_parser.hpp"
#include "hecke/error.hpp"

namespace hecke {

QPoly::QPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPoly QPoly::constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }

QPoly QPoly::lambda() { return QPoly(std::vector<mpq_class>{0, 1}); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x *= s;
  return QPoly(std::move(r));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
  std::vector<mpq_class> r(a.c_);
  const std::size_t db = b.c_.size() - 1;
  if (r.size() <= db) {
    quo = QPoly();
    rem = QPoly(std::move(r));
    return;
  }
  std::vector<mpq_class> q(r.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    mpq_class c = r[i] / b.c_.back();
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b.c_[j];
  }
  r.resize(db);
  quo = QPoly(std::move(q));
  rem = QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = 1 / lead();
  return scaled(inv);
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

ZPoly::ZPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }

ZPoly ZPoly::constant(const mpz_class& c) { return ZPoly(std::vector<mpz_class>{c}); }

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] = c_[i];
    if (i < o.c_.size()) r[i] -= o.c_[i];
  }
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return ZPoly();
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
    }
  }
  return ZPoly(std::move(r));
}

ZPoly ZPoly::exact_div(const ZPoly& b) const {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
  if (is_zero()) return ZPoly();
  std::vector<mpz_class> r(c_);
  const std::size_t db = b.c_.size() - 1;
  if (r.size() <= db) throw Error(ErrorKind::Inconsistent, "inexact polynomial division");
  std::vector<mpz_class> q(r.size() - db);
  const mpz_class& lb = b.c_.back();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t()))
      throw Error(ErrorKind::Inconsistent, "inexact polynomial division");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      if (b.c_[j] != 0) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b.c_[j].get_mpz_t());
    }
    q[i - db] = std::move(c);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) throw Error(ErrorKind::Inconsistent, "inexact polynomial division");
  return ZPoly(std::move(q));
}

LambdaScalar::LambdaScalar(const QPoly& num, const QPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroInput, "zero denominator");
  normalize();
}

void LambdaScalar::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      QPoly q, r;
      QPoly::divmod(num_, g, q, r);
      num_ = q;
      QPoly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  if (den_.lead() != 1) {
    mpq_class inv = 1 / den_.lead();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

LambdaScalar LambdaScalar::operator+(const LambdaScalar& o) const {
  if (den_ == o.den_) return LambdaScalar(num_ + o.num_, den_);
  return LambdaScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LambdaScalar LambdaScalar::operator-(const LambdaScalar& o) const {
  if (den_ == o.den_) return LambdaScalar(num_ - o.num_, den_);
  return LambdaScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

LambdaScalar LambdaScalar::operator-() const { return LambdaScalar(num_.scaled(-1), den_); }

LambdaScalar LambdaScalar::operator*(const LambdaScalar& o) const {
  return LambdaScalar(num_ * o.num_, den_ * o.den_);
}

LambdaScalar LambdaScalar::operator/(const LambdaScalar& o) const {
  if (o.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero");
  return LambdaScalar(num_ * o.den_, den_ * o.num_);
}

mpq_class LambdaScalar::eval(const mpq_class& x) const {
  mpq_class d = den_.eval(x);
  if (d == 0) throw Error(ErrorKind::ZeroInput, "pole at specialization point");
  return num_.eval(x) / d;
}

namespace {

// Integer-coefficient representative of a rational polynomial, primitive with
// positive leading coefficient; returns the scale so that p = scale * out.
std::vector<mpz_class> integer_form(const QPoly& p, mpq_class& scale) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (g == 0) g = 1;
  if (!z.empty() && z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  scale = mpq_class(g, l);
  scale.canonicalize();
  return z;
}

std::string format_zpoly(const std::vector<mpz_class>& z) {
  std::string out;
  for (std::size_t i = z.size(); i-- > 0;) {
    const mpz_class& c = z[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (i == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "l";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool is_single_term(const std::string& s) {
  return s.find('+') == std::string::npos && s.find('-', 1) == std::string::npos;
}

}  // namespace

std::string LambdaScalar::to_string() const {
  mpq_class sn, sd;
  std::vector<mpz_class> zn = integer_form(num_, sn);
  std::vector<mpz_class> zd = integer_form(den_, sd);
  // num/den = (sn/sd) * zn/zd; fold the rational factor into both sides.
  mpq_class ratio = sn / sd;
  for (auto& v : zn) v *= ratio.get_num();
  for (auto& v : zd) v *= ratio.get_den();
  std::string n = format_zpoly(zn);
  if (zd.size() == 1 && zd[0] == 1) return n;
  std::string d = format_zpoly(zd);
  if (!is_single_term(n)) n = "(" + n + ")";
  if (!is_single_term(d) || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

struct LambdaOps {
  using Value = LambdaScalar;
  Value one() const { return LambdaScalar(1); }
  bool is_zero(const Value& v) const { return v.is_zero(); }
  Value number(const std::string& digits) const { return LambdaScalar(mpq_class(mpz_class(digits))); }
  std::optional<Value> variable(const std::string& name) const {
    if (name == "l" || name == "lambda") return LambdaScalar::lambda();
    return std::nullopt;
  }
};

}  // namespace

LambdaScalar parse_lambda(std::string_view text) {
  LambdaOps ops;
  return detail::ExprParser<LambdaOps>(ops, text).parse_all();
}

}  // namespace hecke
