#include "hecke/kernels/modp.hpp"

namespace hecke::kernels::scalar {

void axpy_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] = static_cast<std::uint32_t>((acc[i] + std::uint64_t(c) * x[i]) % p);
  }
}

void scale_mod(std::uint32_t* dst, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(std::uint64_t(c) * x[i] % p);
  }
}

}  // namespace hecke::kernels::scalar
