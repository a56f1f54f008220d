#include "hecke/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "hecke/error.hpp"

namespace hecke {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::BadPlace: return "BadPlace";
    case ErrorKind::ZeroRow: return "ZeroRow";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::BadSupport: return "BadSupport";
    case ErrorKind::UnsupportedDescriptor: return "UnsupportedDescriptor";
    case ErrorKind::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorKind::Stuck: return "Stuck";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::SeedDomainMismatch: return "SeedDomainMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OracleInconsistent: return "OracleInconsistent";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs digits(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  Coeffs out(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t undigits(const Coeffs& c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

// Remainder of a modulo the monic m, over F_p.
Coeffs mod_monic(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t(p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

bool irreducible_over_prime(const Coeffs& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= deg; ++k) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Coeffs g = digits(c, p, k);
      g.push_back(1);
      if (mod_monic(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;

  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t c = 0; c < q_; ++c) {
      Coeffs f = digits(c, p, e);
      f.push_back(1);
      if (irreducible_over_prime(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Coeffs d = digits(a, p, e);
    for (auto& x : d) x = (p - x) % p;
    neg_[a] = undigits(d, p);
  }

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (e == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
    Coeffs da = digits(a, p, e), db = digits(b, p, e);
    Coeffs prod(2 * e, 0);
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = 0; j < e; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p);
    Coeffs r = mod_monic(prod, modulus_, p);
    r.resize(e, 0);
    return undigits(r, p);
  };

  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * std::max<std::uint32_t>(order, 1), 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_ = {1, 1};
    log_[1] = 0;
  } else {
    for (std::uint32_t g = 2; g < q_; ++g) {
      std::uint32_t x = 1, k = 0;
      do {
        x = slow_mul(x, g);
        ++k;
      } while (x != 1 && k <= order);
      if (k != order) continue;
      x = 1;
      for (std::uint32_t j = 0; j < order; ++j) {
        exp_[j] = exp_[j + order] = x;
        log_[x] = j;
        x = slow_mul(x, g);
      }
      break;
    }
  }

  if (e > 1 && q_ <= 1024) {
    add_table_.resize(std::size_t(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        add_table_[std::size_t(a) * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
  }
}

std::uint32_t Field::add_digits(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint32_t Field::log(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInput, "log of zero");
  return log_[a];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInput, "inverse of zero");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[static_cast<std::uint32_t>((std::uint64_t(log_[a]) * (k % order)) % order)];
}

bool Field::sqrt(std::uint32_t a, std::uint32_t& out) const {
  if (a == 0) {
    out = 0;
    return true;
  }
  if (p_ == 2) {
    out = pow(a, q_ / 2);
    return true;
  }
  std::uint32_t j = log_[a];
  if (j % 2 != 0) return false;
  out = exp_[j / 2];
  return true;
}

std::uint32_t Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::string Field::format(std::uint32_t a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  if (a == 1) return "1";
  std::uint32_t j = log_[a];
  return j == 1 ? "g" : "g^" + std::to_string(j);
}

const Field& make_field(std::uint32_t p, std::uint32_t e) {
  if (!is_prime_number(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorKind::NonPrime, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) throw Error(ErrorKind::NonPrime, "field order exceeds supported range");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, e}];
  if (!slot) slot = std::make_unique<Field>(p, e);
  return *slot;
}

const Field& field_of_order(std::uint32_t q) {
  if (q < 2) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
  return make_field(p, e);
}

}  // namespace hecke
