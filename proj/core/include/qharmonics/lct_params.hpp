#pragma once

namespace qh {

/// Unit-determinant 2x2 real matrix (a b; c d) parameterizing one LCT axis.
///
/// `make` enforces ad - bc = 1 within 1e-10. Negative b is kept as is: the
/// kernel prefactor 1/sqrt(mu 2 pi b) is evaluated on the branch
/// e^{-sgn(b) mu pi/4} / sqrt(2 pi |b|), so A and A^{-1} = (d, -b, -c, a)
/// are both usable directly. b == 0 is flagged `degenerate()`: only the
/// forward chirp branch is defined for it.
class LctParams {
 public:
  static LctParams make(double a, double b, double c, double d);

  /// (0 1; -1 0): the LCT reduces to the Fourier transform.
  static LctParams fourier() { return LctParams(0.0, 1.0, -1.0, 0.0); }
  /// (cos t, sin t; -sin t, cos t): fractional Fourier rotation.
  static LctParams rotation(double angle);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  bool degenerate() const { return b_ == 0.0; }
  double determinant() const { return a_ * d_ - b_ * c_; }

  /// (d, -b, -c, a).
  LctParams inverse() const { return LctParams(d_, -b_, -c_, a_); }

  friend bool operator==(const LctParams&, const LctParams&) = default;

 private:
  LctParams(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}

  double a_, b_, c_, d_;
};

inline constexpr double kDeterminantTolerance = 1e-10;

}  // namespace qh
