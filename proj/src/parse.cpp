#include "hecke/parse.hpp"

#include <string>
#include <vector>

#include "hecke/detail/expr_parser.hpp"

namespace hecke {

namespace {

struct RatFOps {
  using Value = RatF;
  const Field& f;

  Value one() const { return RatF::one(f); }
  bool is_zero(const Value& v) const { return v.is_zero(); }
  Value number(const std::string& digits) const {
    std::uint64_t r = 0;
    for (char ch : digits) r = (r * 10 + static_cast<std::uint64_t>(ch - '0')) % f.p();
    return RatF::constant(f, static_cast<std::uint32_t>(r));
  }
  std::optional<Value> variable(const std::string& name) const {
    if (name == "t") return RatF::monomial(f, 1, 1);
    if (name == "g") return RatF::constant(f, f.generator());
    return std::nullopt;
  }
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

RatF parse_ratf(const Field& f, std::string_view text) {
  RatFOps ops{f};
  return detail::ExprParser<RatFOps>(ops, text).parse_all();
}

Poly parse_poly(const Field& f, std::string_view text) {
  RatF r = parse_ratf(f, text);
  if (!r.den().is_one()) throw Error(ErrorKind::Parse, "expected a polynomial, got " + r.to_string());
  return r.num();
}

Mat2 parse_matrix(const Field& f, std::string_view text) {
  auto rows = split(text, ';');
  if (rows.size() != 2) throw Error(ErrorKind::Parse, "matrix needs two rows separated by ';'");
  std::vector<RatF> e;
  for (const auto& row : rows) {
    auto cols = split(row, ',');
    if (cols.size() != 2) throw Error(ErrorKind::Parse, "matrix row needs two entries separated by ','");
    for (const auto& c : cols) e.push_back(parse_ratf(f, c));
  }
  return {e[0], e[1], e[2], e[3]};
}

}  // namespace hecke
