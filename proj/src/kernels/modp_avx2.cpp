#include <immintrin.h>

#include "hecke/kernels/modp.hpp"

// Four lanes per step through double precision: c * x < 2^52 is exact, the
// quotient estimate is off by at most one and gets corrected by compare/blend.
namespace hecke::kernels::avx2 {

namespace {

inline __m256d reduce_product(__m256d prod, __m256d pd, __m256d invp) {
  __m256d qd = _mm256_floor_pd(_mm256_mul_pd(prod, invp));
  __m256d r = _mm256_sub_pd(prod, _mm256_mul_pd(qd, pd));
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
  return r;
}

}  // namespace

void axpy_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(double(p));
  const __m256d invp = _mm256_set1_pd(1.0 / double(p));
  const __m256d cd = _mm256_set1_pd(double(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
    __m128i ai = _mm_loadu_si128(reinterpret_cast<const __m128i*>(acc + i));
    __m256d r = reduce_product(_mm256_mul_pd(_mm256_cvtepi32_pd(xi), cd), pd, invp);
    __m256d s = _mm256_add_pd(_mm256_cvtepi32_pd(ai), r);
    s = _mm256_sub_pd(s, _mm256_and_pd(_mm256_cmp_pd(s, pd, _CMP_GE_OQ), pd));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(acc + i), _mm256_cvttpd_epi32(s));
  }
  for (; i < n; ++i) acc[i] = static_cast<std::uint32_t>((acc[i] + std::uint64_t(c) * x[i]) % p);
}

void scale_mod(std::uint32_t* dst, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(double(p));
  const __m256d invp = _mm256_set1_pd(1.0 / double(p));
  const __m256d cd = _mm256_set1_pd(double(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
    __m256d r = reduce_product(_mm256_mul_pd(_mm256_cvtepi32_pd(xi), cd), pd, invp);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r));
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>(std::uint64_t(c) * x[i] % p);
}

}  // namespace hecke::kernels::avx2
