#pragma once

#include <cstddef>
#include <cstdint>

// Coefficient-vector kernels over a prime field F_p, p < 2^26.
// Inputs and outputs are reduced residues in [0, p).
namespace hecke::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
// Overrides runtime selection; throws std::invalid_argument if unavailable.
void set_isa(Isa isa);

// acc[i] = acc[i] + c * x[i]  (mod p)
void axpy_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p);
// dst[i] = c * x[i]  (mod p); dst may alias x
void scale_mod(std::uint32_t* dst, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* dst, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
void axpy_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* dst, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace avx2

}  // namespace hecke::kernels
