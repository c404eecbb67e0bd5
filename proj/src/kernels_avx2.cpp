#include "weylgrowth/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

#include <limits>

namespace weylgrowth::kernels::avx2 {

void min_affine(const double* soa, std::size_t count, std::size_t dim, const double* pieces, std::size_t npieces,
                double* out) {
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t p = 0;
  for (; p + 4 <= count; p += 4) {
    __m256d best = _mm256_set1_pd(inf);
    for (std::size_t k = 0; k < npieces; ++k) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t j = 0; j < dim; ++j)
        acc = _mm256_fmadd_pd(_mm256_set1_pd(pieces[k * dim + j]), _mm256_loadu_pd(soa + j * count + p), acc);
      best = _mm256_min_pd(best, acc);
    }
    _mm256_storeu_pd(out + p, best);
  }
  for (; p < count; ++p) {
    double best = inf;
    for (std::size_t k = 0; k < npieces; ++k) {
      double acc = 0;
      for (std::size_t j = 0; j < dim; ++j) acc += pieces[k * dim + j] * soa[j * count + p];
      if (acc < best) best = acc;
    }
    out[p] = best;
  }
}

void dot_all(const double* soa, std::size_t count, std::size_t dim, const double* f, double* out) {
  std::size_t p = 0;
  for (; p + 4 <= count; p += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < dim; ++j)
      acc = _mm256_fmadd_pd(_mm256_set1_pd(f[j]), _mm256_loadu_pd(soa + j * count + p), acc);
    _mm256_storeu_pd(out + p, acc);
  }
  for (; p < count; ++p) {
    double acc = 0;
    for (std::size_t j = 0; j < dim; ++j) acc += f[j] * soa[j * count + p];
    out[p] = acc;
  }
}

}  // namespace weylgrowth::kernels::avx2

#else

namespace weylgrowth::kernels::avx2 {

void min_affine(const double* soa, std::size_t count, std::size_t dim, const double* pieces, std::size_t npieces,
                double* out) {
  scalar::min_affine(soa, count, dim, pieces, npieces, out);
}

void dot_all(const double* soa, std::size_t count, std::size_t dim, const double* f, double* out) {
  scalar::dot_all(soa, count, dim, f, out);
}

}  // namespace weylgrowth::kernels::avx2

#endif
