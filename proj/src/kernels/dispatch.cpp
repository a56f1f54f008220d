#include <stdexcept>

#include "hecke/kernels/modp.hpp"

namespace hecke::kernels {

namespace {

using AxpyFn = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);
using ScaleFn = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);

bool cpu_has_avx2() {
#if defined(HECKE_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

struct Table {
  Isa isa;
  AxpyFn axpy;
  ScaleFn scale;
};

Table table_for(Isa isa) {
#if defined(HECKE_HAVE_AVX2_TU)
  if (isa == Isa::Avx2) return {Isa::Avx2, &avx2::axpy_mod, &avx2::scale_mod};
#endif
  (void)isa;
  return {Isa::Scalar, &scalar::axpy_mod, &scalar::scale_mod};
}

Table& active() {
  static Table t = table_for(cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar);
  return t;
}

}  // namespace

#if !defined(HECKE_HAVE_AVX2_TU)
namespace avx2 {
void axpy_mod(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t) {
  throw std::invalid_argument("avx2 kernels not compiled");
}
void scale_mod(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t) {
  throw std::invalid_argument("avx2 kernels not compiled");
}
}  // namespace avx2
#endif

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

Isa active_isa() { return active().isa; }

void set_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument(std::string("isa unavailable: ") + isa_name(isa));
  active() = table_for(isa);
}

void axpy_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p) {
  active().axpy(acc, x, n, c, p);
}

void scale_mod(std::uint32_t* dst, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p) {
  active().scale(dst, x, n, c, p);
}

}  // namespace hecke::kernels
