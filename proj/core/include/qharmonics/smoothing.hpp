#pragma once

// Partial-sum (Dirichlet) inversion, jump averages, Gauss-Weierstrass means
// and the LC-class diagnostic.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qharmonics/grid.hpp"
#include "qharmonics/qft.hpp"
#include "qharmonics/quaternion.hpp"

namespace qh {

/// Truncated inversion from a sampled QFT spectrum: midpoint sum over the
/// cells with |u| <= M, |v| <= N, kernel order per the spectrum's side,
/// times 1/(4 pi^2). Throws Errc::NonPositiveWindow, Errc::ProvenanceMismatch.
Quaternion dirichlet_partial_inverse(const QSpectrum2D& spec, double x0, double y0, double M,
                                     double N);

struct SpectrumQuadrature {
  /// Largest oscillation rate of the spectrum itself (e.g. the half-width of
  /// the signal support); panels are half periods of the combined rate.
  double bandwidth = 1.0;
  std::size_t order = 16;
};

/// Truncated inversion from an analytic two-sided spectrum handle,
/// (1/4 pi^2) int_{-M}^{M} int_{-N}^{N} e^{mu1 u x0} F e^{mu2 v y0} du dv,
/// by Gauss-Legendre panels.
Quaternion dirichlet_partial_inverse(const QFunction& spectrum, const AxisPair& axes, double x0,
                                     double y0, double M, double N,
                                     const SpectrumQuadrature& quad = {});

struct SincQuadrature {
  /// The signal is treated as zero outside [s_lo, s_hi] x [t_lo, t_hi].
  double s_lo = -8.0;
  double s_hi = 8.0;
  double t_lo = -8.0;
  double t_hi = 8.0;
  /// Jump lines of the signal; panels are split there.
  std::vector<double> s_breaks;
  std::vector<double> t_breaks;
  std::size_t order = 16;
};

/// Signal-domain form of the truncated inversion:
/// int int f(x0 - s, y0 - t) sin(M s)/(pi s) sin(N t)/(pi t) ds dt, with
/// panels between consecutive zeros of the sines.
Quaternion dirichlet_sinc_inverse(const QFunction& f, double x0, double y0, double M, double N,
                                  const SincQuadrature& quad = {});

/// int_0^R int_0^R sin(M s)/(pi s) sin(N t)/(pi t) ds dt by panel quadrature.
double sinc_quadrant_mass(double M, double N, double R);

struct JumpAverage {
  Quaternion value;
  /// Order (+,+), (+,-), (-,+), (-,-) in (s, t).
  std::array<Quaternion, 4> quadrant_values;
  std::vector<double> h_sequence;
};

struct JumpOptions {
  double h0 = 1e-2;
  std::size_t levels = 11;
  double tol = 1e-6;
};

/// Quadrant limits f(x0 +- 0, y0 +- 0) from f(x0 +- h, y0 +- h) along
/// h_k = h0 2^{-k}, extrapolated by R_k = 2 g(h_{k+1}) - g(h_k).
/// Throws Errc::NonConvergent when the last two extrapolants differ by more
/// than tol (relative to max(1, |value|)).
JumpAverage eta_jump_average(const QFunction& f, double x0, double y0,
                             const JumpOptions& options = {});

inline constexpr double kSincIntegralBound = 6.0;

/// |int_a^b sin t / t dt| = |Si(b) - Si(a)|.
double sinc_integral_bound_check(double a, double b);

/// W(s,t) = (1/4 pi alpha) e^{-(s^2 + t^2)/4 alpha} sampled on `grid`.
/// Throws Errc::InvalidArgument for alpha <= 0.
QSignal2D gauss_weierstrass_kernel(double alpha, const GridSpec& grid);

/// f * W_alpha on the signal grid by separable midpoint quadrature.
QSignal2D gauss_convolve(const QSignal2D& sig, double alpha);

struct GaussMeanParams {
  std::vector<double> schedule{1.0, 0.1, 0.01};

  /// Throws Errc::InvalidArgument unless positive and strictly decreasing.
  void validate() const;
};

struct GaussMeanStep {
  double alpha = 0.0;
  QSignal2D signal;
  std::optional<double> l1_error;
};

/// For each alpha: inversion of spec e^{-alpha (u^2 + v^2)} onto `out_grid`,
/// and its L1 distance to `reference` when given.
std::vector<GaussMeanStep> gauss_mean_inverse(const QSpectrum2D& spec,
                                              const GaussMeanParams& params,
                                              const GridSpec& out_grid,
                                              const std::optional<QSignal2D>& reference = {});

struct LcOptions {
  std::size_t order = 16;
  double outer_panel = 0.25;
  /// Dyadic refinement levels of the inner [0, eps] integral toward 0.
  std::size_t inner_levels = 30;
  /// Candidate sections tried in order; the first admissible one is used.
  std::vector<double> a_candidates{0.0, 0.5, 1.0, 2.0};
  std::vector<double> b_candidates{0.0, 0.5, 1.0, 2.0};
};

struct LcDiagnostic {
  double val1 = 0.0;  // int_{eps2}^{R} int_0^{eps1} |(g(s,t) - g(a,t)) / s| ds dt
  double val2 = 0.0;  // int_{eps1}^{R} int_0^{eps2} |(g(s,t) - g(s,b)) / t| dt ds
  double a = 0.0;
  double b = 0.0;
};

/// g is the quadrant sum f(x0-s,y0-t) + f(x0+s,y0+t) + f(x0-s,y0+t) + f(x0+s,y0-t).
/// A section is admissible when its 1D mass over [-R, R] is finite and changes
/// by less than 5% when R doubles. Throws Errc::InvalidArgument for bad eps/R,
/// Errc::NoIntegrableSection.
LcDiagnostic lc_class_diagnostic(const QFunction& f, double x0, double y0, double eps1,
                                 double eps2, double R, const LcOptions& options = {});

/// One row of a partial-sum sweep.
struct SweepRow {
  double M = 0.0;
  double N = 0.0;
  Quaternion value;
  double error = 0.0;  // |value - eta|
};

/// "M,N,w,x,y,z,abs_error".
std::string sweep_csv_header();
std::string to_csv_row(const SweepRow& row);

}  // namespace qh
