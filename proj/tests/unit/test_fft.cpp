#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "qharmonics/fft.hpp"
#include "support/test_util.hpp"

using namespace qh;
using cd = std::complex<double>;

namespace {

std::vector<cd> naive_dft(const std::vector<cd>& x, int sign) {
  const std::size_t n = x.size();
  std::vector<cd> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t m = 0; m < n; ++m) {
      out[k] += x[m] * std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                           static_cast<double>(k * m % n) / static_cast<double>(n));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("radix-2 DFT matches the naive sum") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-1, 1);
  for (std::size_t n : {1u, 2u, 8u, 64u, 256u}) {
    std::vector<cd> x(n);
    for (auto& v : x) v = {d(rng), d(rng)};
    for (bool inverse : {false, true}) {
      auto y = x;
      fft_inplace(y, inverse);
      const auto ref = naive_dft(x, inverse ? 1 : -1);
      double worst = 0.0;
      for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(y[k] - ref[k]));
      CHECK(worst < 1e-12 * static_cast<double>(n));
    }
  }
}

TEST_CASE("impulse has a flat spectrum") {
  std::vector<cd> x(16);
  x[0] = 1.0;
  fft_inplace(x);
  for (const auto& v : x) CHECK(std::abs(v - cd(1.0)) < 1e-15);
}

TEST_CASE("non power of two is rejected") {
  std::vector<cd> x(12);
  CHECK_ERRC(fft_inplace(x), Errc::NotPowerOfTwo);
  CHECK(is_power_of_two(1024));
  CHECK_FALSE(is_power_of_two(0));
}

TEST_CASE("2D DFT equals row and column passes") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> d(-1, 1);
  const std::size_t nx = 8, ny = 4;
  std::vector<cd> x(nx * ny);
  for (auto& v : x) v = {d(rng), d(rng)};
  auto y = x;
  fft2d_inplace(y, nx, ny);
  for (std::size_t b = 0; b < ny; ++b) {
    for (std::size_t a = 0; a < nx; ++a) {
      cd ref;
      for (std::size_t q = 0; q < ny; ++q) {
        for (std::size_t p = 0; p < nx; ++p) {
          ref += x[q * nx + p] *
                 std::polar(1.0, -2.0 * std::numbers::pi *
                                     (static_cast<double>(a * p) / nx + static_cast<double>(b * q) / ny));
        }
      }
      CHECK(std::abs(y[b * nx + a] - ref) < 1e-12);
    }
  }
}
