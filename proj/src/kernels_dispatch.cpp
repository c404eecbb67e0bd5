#include "weylgrowth/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace weylgrowth::kernels {

bool avx2_available() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* env = std::getenv("WEYLGROWTH_ISA");
    if (env && std::string_view(env) == "scalar") return Isa::scalar;
    return avx2_available() ? Isa::avx2 : Isa::scalar;
  }();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void min_affine(const double* soa, std::size_t count, std::size_t dim, const double* pieces, std::size_t npieces,
                double* out) {
  if (active_isa() == Isa::avx2) avx2::min_affine(soa, count, dim, pieces, npieces, out);
  else scalar::min_affine(soa, count, dim, pieces, npieces, out);
}

void dot_all(const double* soa, std::size_t count, std::size_t dim, const double* f, double* out) {
  if (active_isa() == Isa::avx2) avx2::dot_all(soa, count, dim, f, out);
  else scalar::dot_all(soa, count, dim, f, out);
}

}  // namespace weylgrowth::kernels
