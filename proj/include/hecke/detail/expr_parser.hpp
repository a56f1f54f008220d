#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "hecke/error.hpp"

namespace hecke::detail {

// Recursive-descent parser for  expr := term (('+'|'-') term)*
//   term := unary (('*'|'/') unary)*,  unary := '-' unary | power,
//   power := atom ('^' ['-'] digits)?,  atom := digits | name | '(' expr ')'.
// Ops supplies Value, number(digits), variable(name) and one().
template <class Ops>
class ExprParser {
 public:
  using Value = typename Ops::Value;

  ExprParser(const Ops& ops, std::string_view text) : ops_(ops), s_(text) {}

  Value parse_all() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  // Parses up to (not including) a top-level stop character.
  Value parse_until(char stop) {
    Value v = expr();
    skip();
    if (pos_ < s_.size() && s_[pos_] != stop) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  std::size_t position() const { return pos_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        Value d = unary();
        if (ops_.is_zero(d)) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return ops_.one() - ops_.one() - unary();
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    long long k = std::stoll(std::string(s_.substr(start, pos_ - start)));
    if (k > 100000) fail("exponent too large");
    Value out = ops_.one();
    for (long long i = 0; i < k; ++i) out = out * base;
    if (negative) {
      if (ops_.is_zero(out)) fail("negative power of zero");
      out = ops_.one() / out;
    }
    return out;
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ops_.number(std::string(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      std::optional<Value> v = ops_.variable(name);
      if (!v) fail("unknown symbol '" + name + "'");
      return *v;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  const Ops& ops_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace hecke::detail
