#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qharmonics/grid.hpp"
#include "qharmonics/quaternion.hpp"

namespace qh {

struct QftKind {
  Side side = Side::TwoSided;
  AxisPair axes = AxisPair::canonical();
};

/// Frequency truncation [-u_max, u_max] x [-v_max, v_max] sampled at nu x nv
/// cell midpoints.
struct FreqWindow {
  double u_max = 8.0;
  double v_max = 8.0;
  std::size_t nu = 256;
  std::size_t nv = 256;

  /// Throws Errc::InvalidWindow.
  void validate() const;
  GridSpec grid() const;
  static FreqWindow square(double extent, std::size_t n) { return {extent, extent, n, n}; }
};

/// Midpoint quadrature of the forward transform onto the window grid.
///   two-sided: e^{-mu1 u s} f e^{-mu2 v t}
///   right:     f e^{-mu1 u s} e^{-mu2 v t}
///   left:      e^{-mu1 u s} e^{-mu2 v t} f
QSpectrum2D qft_forward(const QSignal2D& sig, const QftKind& kind, const FreqWindow& window);
/// Same onto an arbitrary frequency grid.
QSpectrum2D qft_forward(const QSignal2D& sig, const QftKind& kind, const GridSpec& freq_grid);

/// Midpoint quadrature of the inversion integral with the 1/(4 pi^2) factor,
/// evaluated on `out_grid`.
///   two-sided: e^{mu1 s u} F e^{mu2 t v}
///   right:     F e^{mu2 t v} e^{mu1 s u}
///   left:      e^{mu2 t v} e^{mu1 s u} F
/// Throws Errc::ProvenanceMismatch when the spectrum was not produced by `kind`.
QSignal2D qft_inverse(const QSpectrum2D& spec, const QftKind& kind, const GridSpec& out_grid);

/// Complex samples on a grid; index it * ns + is like SampledField.
struct ComplexField {
  GridSpec grid;
  std::vector<std::complex<double>> data;

  const std::complex<double>& at(std::size_t iu, std::size_t iv) const {
    return data[iv * grid.ns + iu];
  }
};

/// Classical 2D FT H(u, v) = sum h e^{sign i (u s + v t)} ds dt of a real
/// field onto `freq_grid`. Throws Errc::NonRealInput.
ComplexField ft2d_complex(const SampledField& real_field, const GridSpec& freq_grid,
                          int sign = -1);

/// H_T(u,v) = [H(u,v)(1 - k) + H(u,-v)(1 + k)] / 2, where the complex value
/// a + bi is read as a quaternion. The grid must be symmetric in v
/// (Errc::InvalidGrid otherwise). Result is tagged as a canonical two-sided QFT.
QSpectrum2D qft_from_ft(const ComplexField& ft);
/// H(u,v) = [H_T(u,v)(1 + k) + H_T(u,-v)(1 - k)] / 2. Throws Errc::NonRealInput
/// if the combination leaves a j or k part above 1e-9 relative.
ComplexField ft_from_qft(const QSpectrum2D& two_sided);

/// Frequency grid produced by the FFT path: u_k = (k - ns/2) 2 pi / (ns ds).
GridSpec fft_frequency_grid(const GridSpec& signal_grid);

/// FFT evaluation of qft_forward on fft_frequency_grid(sig.grid()).
/// Throws Errc::NotPowerOfTwo, Errc::NonCanonicalAxes.
QSpectrum2D qft_fast(const QSignal2D& sig, const QftKind& kind);

/// Two-sided: (mu1 u)^m F (mu2 v)^n. Right-sided spectra accept only n,
/// left-sided only m (Errc::SideMismatch otherwise).
QSpectrum2D derivative_multiplier(const QSpectrum2D& spec, int m, int n);

}  // namespace qh
