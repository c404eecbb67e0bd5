#pragma once

// Batched evaluation of piecewise-linear functions on many points.
// Points are stored structure-of-arrays: coordinate j of point p is soa[j * count + p].
// The scalar versions are the reference; the AVX2 versions are selected at run
// time when the CPU supports AVX2 and FMA, unless WEYLGROWTH_ISA=scalar.

#include <cstddef>

namespace weylgrowth::kernels {

enum class Isa { scalar, avx2 };

Isa active_isa();
const char* isa_name(Isa isa);
bool avx2_available();

/// out[p] = min_k pieces[k] . point_p, pieces row-major (npieces x dim).
void min_affine(const double* soa, std::size_t count, std::size_t dim, const double* pieces, std::size_t npieces,
                double* out);
/// out[p] = f . point_p.
void dot_all(const double* soa, std::size_t count, std::size_t dim, const double* f, double* out);

namespace scalar {
void min_affine(const double* soa, std::size_t count, std::size_t dim, const double* pieces, std::size_t npieces,
                double* out);
void dot_all(const double* soa, std::size_t count, std::size_t dim, const double* f, double* out);
}  // namespace scalar

namespace avx2 {
void min_affine(const double* soa, std::size_t count, std::size_t dim, const double* pieces, std::size_t npieces,
                double* out);
void dot_all(const double* soa, std::size_t count, std::size_t dim, const double* f, double* out);
}  // namespace avx2

}  // namespace weylgrowth::kernels
