#pragma once

#include <cstdint>

#include "hecke/mat2.hpp"

namespace hecke {

// gamma * z * M * k with gamma a product of up to 6 elementary matrices over
// F_q[1/t] (degree <= 3 in 1/t), z = c t^j, and k a product of up to 6
// elementary factors of K_x, each congruent to the identity mod t^r when
// r >= 1 (r = 0 is level K). The class of M at that level is unchanged.
Mat2 random_coset_perturb(const Mat2& M, int r, std::uint64_t seed);

}  // namespace hecke
