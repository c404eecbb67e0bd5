#include "weylgrowth/kernels.hpp"

#include <limits>

namespace weylgrowth::kernels::scalar {

void min_affine(const double* soa, std::size_t count, std::size_t dim, const double* pieces, std::size_t npieces,
                double* out) {
  for (std::size_t p = 0; p < count; ++p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < npieces; ++k) {
      double acc = 0;
      for (std::size_t j = 0; j < dim; ++j) acc += pieces[k * dim + j] * soa[j * count + p];
      if (acc < best) best = acc;
    }
    out[p] = best;
  }
}

void dot_all(const double* soa, std::size_t count, std::size_t dim, const double* f, double* out) {
  for (std::size_t p = 0; p < count; ++p) {
    double acc = 0;
    for (std::size_t j = 0; j < dim; ++j) acc += f[j] * soa[j * count + p];
    out[p] = acc;
  }
}

}  // namespace weylgrowth::kernels::scalar
