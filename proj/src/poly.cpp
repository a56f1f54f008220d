#include "hecke/poly.hpp"

#include <algorithm>

#include "hecke/error.hpp"
#include "hecke/kernels/modp.hpp"

namespace hecke {

Poly::Poly(const Field& f, std::vector<std::uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Field& f, std::uint32_t c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, std::uint32_t c, unsigned k) {
  if (c == 0) return Poly(f);
  std::vector<std::uint32_t> v(k + 1, 0);
  v[k] = c;
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<unsigned> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<unsigned>(c_.size() - 1);
}

unsigned Poly::valuation() const {
  if (c_.empty()) throw Error(ErrorKind::ZeroInput, "valuation of zero polynomial");
  unsigned v = 0;
  while (c_[v] == 0) ++v;
  return v;
}

Poly Poly::operator+(const Poly& o) const {
  const Field& F = f_ ? *f_ : *o.f_;
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(i), o.coeff(i));
  return Poly(F, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  const Field& F = f_ ? *f_ : *o.f_;
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(coeff(i), o.coeff(i));
  return Poly(F, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<std::uint32_t> r(c_);
  for (auto& x : r) x = f_->neg(x);
  return Poly(*f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  const Field& F = f_ ? *f_ : *o.f_;
  if (c_.empty() || o.c_.empty()) return Poly(F);
  std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  if (F.is_prime()) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) kernels::axpy_mod(r.data() + i, o.c_.data(), o.c_.size(), c_[i], F.p());
    }
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
    }
  }
  return Poly(F, std::move(r));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "polynomial division by zero");
  const Field& F = *b.f_;
  std::vector<std::uint32_t> r(a.c_);
  const std::size_t db = b.c_.size() - 1;
  if (r.size() <= db) {
    quo = Poly(F);
    rem = Poly(F, std::move(r));
    return;
  }
  std::vector<std::uint32_t> qv(r.size() - db, 0);
  const std::uint32_t inv_lead = F.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    std::uint32_t c = F.mul(r[i], inv_lead);
    qv[i - db] = c;
    std::uint32_t nc = F.neg(c);
    if (F.is_prime()) {
      kernels::axpy_mod(r.data() + (i - db), b.c_.data(), db + 1, nc, F.p());
    } else {
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.add(r[i - db + j], F.mul(nc, b.c_[j]));
    }
  }
  r.resize(db);
  quo = Poly(F, std::move(qv));
  rem = Poly(F, std::move(r));
}

Poly Poly::operator/(const Poly& o) const {
  Poly q, r;
  divmod(*this, o, q, r);
  return q;
}

Poly Poly::operator%(const Poly& o) const {
  Poly q, r;
  divmod(*this, o, q, r);
  return r;
}

Poly Poly::scaled(std::uint32_t c) const {
  if (c == 0) return Poly(*f_);
  std::vector<std::uint32_t> r(c_.size());
  if (f_->is_prime()) {
    kernels::scale_mod(r.data(), c_.data(), c_.size(), c, f_->p());
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c, c_[i]);
  }
  return Poly(*f_, std::move(r));
}

Poly Poly::shifted_up(unsigned k) const {
  if (c_.empty()) return *this;
  std::vector<std::uint32_t> r(k, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(*f_, std::move(r));
}

Poly Poly::shifted_down(unsigned k) const {
  if (c_.empty()) return *this;
  if (valuation() < k) throw Error(ErrorKind::BadSupport, "t^k does not divide polynomial");
  return Poly(*f_, std::vector<std::uint32_t>(c_.begin() + k, c_.end()));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(f_->inv(lead()));
}

std::uint32_t Poly::eval(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string coef = f_->format(c_[i]);
    if (i == 0) {
      out += coef;
      continue;
    }
    if (c_[i] != 1) out += coef + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::uint64_t count_monic(const Field& f, unsigned k) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < k; ++i) n *= f.q();
  return n;
}

Poly monic_by_index(const Field& f, unsigned k, std::uint64_t index) {
  std::vector<std::uint32_t> c(k + 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = static_cast<std::uint32_t>(index % f.q());
    index /= f.q();
  }
  c[k] = 1;
  return Poly(f, std::move(c));
}

Factorization factor_trial(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "factorization of zero");
  const Field& F = f.field();
  Factorization out;
  out.unit = f.lead();
  Poly rest = f.monic();
  for (unsigned k = 1; rest.degree() && 2 * k <= *rest.degree(); ++k) {
    const std::uint64_t n = count_monic(F, k);
    for (std::uint64_t idx = 0; idx < n && 2 * k <= *rest.degree(); ++idx) {
      Poly g = monic_by_index(F, k, idx);
      int mult = 0;
      for (;;) {
        Poly q, r;
        Poly::divmod(rest, g, q, r);
        if (!r.is_zero()) break;
        rest = q;
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(g, mult);
    }
  }
  if (rest.degree() && *rest.degree() > 0) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const auto& pr) { return pr.first == rest; });
    if (it != out.factors.end()) {
      ++it->second;
    } else {
      out.factors.emplace_back(rest, 1);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const Poly& f) {
  auto d = f.degree();
  if (!d || *d == 0) return false;
  Factorization fac = factor_trial(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::optional<Poly> sqrt_monic(const Poly& f) {
  const Field& F = f.field();
  auto d = f.degree();
  if (!d) return Poly(F);
  if (*d % 2 != 0 || f.lead() != 1) return std::nullopt;
  const unsigned m = *d / 2;
  std::vector<std::uint32_t> h(m + 1, 0);
  if (F.p() == 2) {
    for (unsigned i = 0; i <= *d; ++i) {
      if (i % 2 == 1 && f.coeff(i) != 0) return std::nullopt;
    }
    for (unsigned i = 0; i <= m; ++i) F.sqrt(f.coeff(2 * i), h[i]);
  } else {
    h[m] = 1;
    const std::uint32_t inv2 = F.inv(F.from_int(2));
    for (unsigned i = 1; i <= m; ++i) {
      // coefficient of t^(2m-i) in h^2 is 2 h_m h_(m-i) plus products of known terms
      std::uint32_t acc = f.coeff(2 * m - i);
      for (unsigned j = m - i + 1; j < m; ++j) {
        unsigned k = 2 * m - i - j;
        if (k <= m && k > m - i) acc = F.sub(acc, F.mul(h[j], h[k]));
      }
      h[m - i] = F.mul(acc, inv2);
    }
  }
  Poly root(F, std::move(h));
  if (root * root != f) return std::nullopt;
  return root;
}

}  // namespace hecke
