#pragma once

#include "qharmonics/grid.hpp"
#include "qharmonics/lct_params.hpp"
#include "qharmonics/qft.hpp"
#include "qharmonics/quaternion.hpp"

namespace qh {

struct LctKind {
  Side side = Side::TwoSided;
  LctParams a1 = LctParams::fourier();
  LctParams a2 = LctParams::fourier();
  AxisPair axes = AxisPair::canonical();
  /// Multiply every kernel built from (a, b, c, d) by e^{mu atan2(b, a) / 2}.
  /// For rotation matrices this removes the fixed e^{-mu alpha/2} phase that
  /// separates the QLCT from the fractional Fourier transform.
  bool phase_corrected = false;
};

/// e^{-sgn(b) mu pi/4} / sqrt(2 pi |b|) * e^{mu (a x^2/2b - x xi/b + d xi^2/2b)}.
/// Throws Errc::DegenerateB when b == 0.
Quaternion lct_kernel(const LctParams& A, const PureUnit& axis, double x, double xi);

/// Output grid for qlct_forward: the window along non-degenerate axes, the
/// input axis scaled by 1/d along b == 0 axes.
GridSpec qlct_output_grid(const GridSpec& signal_grid, const LctKind& kind,
                          const FreqWindow& window);

/// Midpoint quadrature of the kernel sandwich, same placement as the QFT sides.
/// A b == 0 axis applies sqrt(d) e^{mu c d xi^2/2} f(d xi, .) instead; its
/// output axis must be the input axis scaled by 1/d and d must be positive
/// (Errc::InvalidGrid / Errc::InvalidArgument).
QSpectrum2D qlct_forward(const QSignal2D& sig, const LctKind& kind, const GridSpec& out_grid);

struct QlctInverseOptions {
  /// Two-sided only: multiply by 1/(4 pi^2). Wrong on purpose; kept to
  /// demonstrate that the normalized kernels already invert exactly.
  bool include_prefactor = false;
  /// Sided only: apply the two inverse kernels in the opposite order.
  bool swap_kernel_order = false;
};

/// f = sum K_{A1^-1}(u,s) L(u,v) K_{A2^-1}(v,t) du dv.
/// Throws Errc::SideMismatch, Errc::ProvenanceMismatch, Errc::DegenerateB.
QSignal2D qlct_inverse_two_sided(const QSpectrum2D& spec, const LctKind& kind,
                                 const GridSpec& out_grid,
                                 const QlctInverseOptions& options = {});

/// Right: L K_{A2^-1} K_{A1^-1}; left: K_{A2^-1} K_{A1^-1} L.
QSignal2D qlct_inverse_sided(const QSpectrum2D& spec, const LctKind& kind,
                             const GridSpec& out_grid, const QlctInverseOptions& options = {});

/// Dispatches on kind.side.
QSignal2D qlct_inverse(const QSpectrum2D& spec, const LctKind& kind, const GridSpec& out_grid);

/// Two-sided QLCT through the QFT: chirp, QFT at (u/b1, v/b2), chirp.
/// Requires b1, b2 > 0 (Errc::DegenerateB for zero, Errc::InvalidArgument for negative).
QSpectrum2D qlct_via_qft(const QSignal2D& sig, const LctKind& kind, const GridSpec& out_grid);
/// Same with the FFT QFT; the output grid is fft_frequency_grid scaled by (b1, b2).
QSpectrum2D qlct_via_qft_fast(const QSignal2D& sig, const LctKind& kind);

/// Sided QLCT as two two-sided QLCTs of the symplectic parts:
///   right: L_T^{mu1,mu2}(f_a) + L_T^{-mu1,mu2}(f_b) mu2
///   left:  L_T^{mu1,mu2}(f_d) + mu1 L_T^{mu1,-mu2}(f_e)
QSpectrum2D sided_decompose_transform(const QSignal2D& sig, const LctKind& kind,
                                      const GridSpec& out_grid);

/// QLCT with rotation matrices A(alpha), A(beta). Throws Errc::DegenerateAngle
/// when sin(alpha) or sin(beta) vanishes.
QSpectrum2D qfrft(const QSignal2D& sig, double alpha, double beta, Side side,
                  const GridSpec& out_grid, bool phase_corrected = false,
                  const AxisPair& axes = AxisPair::canonical());

/// Inverse of a qfrft spectrum: the transform with (-alpha, -beta) applied in
/// the inversion order of its side.
QSignal2D qfrft_inverse(const QSpectrum2D& spec, const GridSpec& out_grid);

/// LctKind matching a QLCT spectrum's provenance.
LctKind lct_kind_from(const Provenance& provenance);

}  // namespace qh
