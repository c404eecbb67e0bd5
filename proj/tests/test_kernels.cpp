#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylgrowth/kernels.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace weylgrowth::kernels;

TEST_CASE("scalar kernels on a small example") {
  // points (1,0), (0,1), (2,1) in SoA layout
  const std::vector<double> soa{1, 0, 2, 0, 1, 1};
  const std::vector<double> pieces{1, 1, 3, -1};
  std::vector<double> out(3);
  scalar::min_affine(soa.data(), 3, 2, pieces.data(), 2, out.data());
  CHECK(out == std::vector<double>{1, -1, 3});
  const std::vector<double> f{2, 5};
  scalar::dot_all(soa.data(), 3, 2, f.data(), out.data());
  CHECK(out == std::vector<double>{2, 5, 9});
}

TEST_CASE("avx2 kernels match the scalar reference") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available; dispatch uses the scalar kernels");
    return;
  }
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10, 10);
  for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 17u, 1000u}) {
    for (std::size_t dim : {1u, 2u, 3u, 5u}) {
      for (std::size_t np : {1u, 2u, 7u}) {
        std::vector<double> soa(count * dim), pieces(np * dim), f(dim);
        for (auto& x : soa) x = u(rng);
        for (auto& x : pieces) x = u(rng);
        for (auto& x : f) x = u(rng);
        std::vector<double> a(count), b(count);
        scalar::min_affine(soa.data(), count, dim, pieces.data(), np, a.data());
        avx2::min_affine(soa.data(), count, dim, pieces.data(), np, b.data());
        for (std::size_t p = 0; p < count; ++p) CHECK(std::abs(a[p] - b[p]) <= 1e-12 * (1 + std::abs(a[p])));
        scalar::dot_all(soa.data(), count, dim, f.data(), a.data());
        avx2::dot_all(soa.data(), count, dim, f.data(), b.data());
        for (std::size_t p = 0; p < count; ++p) CHECK(std::abs(a[p] - b[p]) <= 1e-12 * (1 + std::abs(a[p])));
      }
    }
  }
}

TEST_CASE("dispatch reports an isa") {
  const Isa isa = active_isa();
  CHECK((isa == Isa::scalar || isa == Isa::avx2));
  std::vector<double> soa{1, 2}, f{3}, out(2);
  dot_all(soa.data(), 2, 1, f.data(), out.data());
  CHECK(out == std::vector<double>{3, 6});
}
