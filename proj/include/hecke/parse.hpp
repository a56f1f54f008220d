#pragma once

#include <string_view>

#include "hecke/mat2.hpp"

namespace hecke {

// Expressions in t over F_q: sums of terms like 2*t^3, t^-2, g^2*t, with
// parentheses, products and quotients. Integers are read in the prime field;
// `g` is the field generator.
RatF parse_ratf(const Field& f, std::string_view text);
// As parse_ratf, rejecting anything with a nontrivial denominator.
Poly parse_poly(const Field& f, std::string_view text);
// "a, b ; c, d" with entries in the grammar above.
Mat2 parse_matrix(const Field& f, std::string_view text);

}  // namespace hecke
