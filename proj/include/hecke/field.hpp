#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

// Finite field F_q, q = p^e. Elements are encoded as integers in [0, q):
// the code sum c_i p^i stands for sum c_i x^i modulo the field modulus.
// Fields are interned; a `const Field&` stays valid for the process lifetime.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  bool is_prime() const { return e_ == 1; }
  // Monic modulus over F_p, low to high, degree e. For e == 1 this is x.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
  // Square root in F_q if one exists; used by the square test in characteristic 2.
  bool sqrt(std::uint32_t a, std::uint32_t& out) const;

  // Smallest-code primitive element g.
  std::uint32_t generator() const { return exp_[1]; }
  // Discrete log base g of a nonzero element, in [0, q-1).
  std::uint32_t log(std::uint32_t a) const;
  std::uint32_t exp(std::uint32_t j) const { return exp_[j % (q_ - 1)]; }

  // Image of an integer in the prime subfield.
  std::uint32_t from_int(long long v) const;
  // Prime fields print integers 0..p-1; extension fields print 0, 1, g, g^j.
  std::string format(std::uint32_t a) const;

  Field(std::uint32_t p, std::uint32_t e);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_, e_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1), exp_[j] = g^j
  std::vector<std::uint32_t> log_;  // length q, log_[0] unused
  std::vector<std::uint16_t> add_table_;
};

bool is_prime_number(std::uint64_t n);

// Interned field of order p^e; throws NonPrime when p is not prime.
const Field& make_field(std::uint32_t p, std::uint32_t e);
// Same, from the order q; throws NonPrime when q is not a prime power.
const Field& field_of_order(std::uint32_t q);

// Field element bound to its field, for API boundaries and tests.
struct FqElem {
  const Field* field = nullptr;
  std::uint32_t v = 0;

  bool is_zero() const { return v == 0; }
  FqElem operator+(FqElem o) const { return {field, field->add(v, o.v)}; }
  FqElem operator-(FqElem o) const { return {field, field->sub(v, o.v)}; }
  FqElem operator-() const { return {field, field->neg(v)}; }
  FqElem operator*(FqElem o) const { return {field, field->mul(v, o.v)}; }
  FqElem operator/(FqElem o) const { return {field, field->div(v, o.v)}; }
  FqElem inv() const { return {field, field->inv(v)}; }
  bool operator==(const FqElem& o) const { return v == o.v && field == o.field; }
};

}  // namespace hecke
