#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace qh {

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place iterative radix-2 DFT, X[k] = sum_m x[m] e^{-2 pi i k m / n}
/// (sign flipped when `inverse`; no normalization either way).
void fft_inplace(std::span<std::complex<double>> data, bool inverse = false);

/// 2D DFT of row-major data[y * nx + x]; both sizes powers of two.
void fft2d_inplace(std::span<std::complex<double>> data, std::size_t nx, std::size_t ny,
                   bool inverse = false);

}  // namespace qh
