#include "qharmonics/fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "qharmonics/error.hpp"

namespace qh {

void fft_inplace(std::span<std::complex<double>> data, bool inverse) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    throw Error(Errc::NotPowerOfTwo, "FFT length " + std::to_string(n));
  }
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    // Twiddles from direct cos/sin rather than a recurrence; keeps the error
    // at the level of a single rounding per factor.
    std::vector<std::complex<double>> w(half);
    for (std::size_t k = 0; k < half; ++k) {
      const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(len);
      w[k] = {std::cos(ang), std::sin(ang)};
    }
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> u = data[start + k];
        const std::complex<double> v = data[start + k + half] * w[k];
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

void fft2d_inplace(std::span<std::complex<double>> data, std::size_t nx, std::size_t ny,
                   bool inverse) {
  if (data.size() != nx * ny) {
    throw Error(Errc::ShapeMismatch, "fft2d buffer does not match nx * ny");
  }
  for (std::size_t y = 0; y < ny; ++y) fft_inplace(data.subspan(y * nx, nx), inverse);
  std::vector<std::complex<double>> column(ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) column[y] = data[y * nx + x];
    fft_inplace(column, inverse);
    for (std::size_t y = 0; y < ny; ++y) data[y * nx + x] = column[y];
  }
}

}  // namespace qh
