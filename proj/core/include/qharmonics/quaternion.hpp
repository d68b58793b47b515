#pragma once

#include <cmath>
#include <numbers>

namespace qh {

/// q = w + x i + y j + z k over 64-bit reals.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }
  bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) &&
           std::isfinite(z);
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product: i j = k, j k = i, k i = j, i^2 = j^2 = k^2 = -1.
constexpr Quaternion qmul(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return qmul(p, q);
}

constexpr Quaternion qconj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double qnorm2(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
inline double qabs(const Quaternion& q) { return std::sqrt(qnorm2(q)); }

/// conj(q) / |q|^2. There is deliberately no division operator.
constexpr Quaternion qinverse(const Quaternion& q) {
  return qconj(q) * (1.0 / qnorm2(q));
}

/// Euclidean dot product of the four coefficients.
constexpr double qdot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Pure unit quaternion mu with mu^2 = -1. Construction normalizes inputs
/// whose norm lies within 1e-9 of one and rejects everything else.
class PureUnit {
 public:
  static PureUnit make(double x, double y, double z);
  static PureUnit make(const Quaternion& q);

  static PureUnit i() { return PureUnit(1.0, 0.0, 0.0); }
  static PureUnit j() { return PureUnit(0.0, 1.0, 0.0); }
  static PureUnit k() { return PureUnit(0.0, 0.0, 1.0); }

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  Quaternion as_quaternion() const { return {0.0, x_, y_, z_}; }
  PureUnit operator-() const { return PureUnit(-x_, -y_, -z_); }

  friend bool operator==(const PureUnit&, const PureUnit&) = default;

 private:
  PureUnit(double x, double y, double z) : x_(x), y_(y), z_(z) {}
  double x_, y_, z_;
};

inline constexpr double kUnitNormTolerance = 1e-9;
inline constexpr double kOrthogonalityTolerance = 1e-12;
inline constexpr double kPureScalarTolerance = 1e-12;

/// cos(theta) + mu sin(theta) = e^{mu theta}.
inline Quaternion qexp_pure(const PureUnit& mu, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, mu.x() * s, mu.y() * s, mu.z() * s};
}

/// Two orthogonal pure unit quaternions; the transform axes (mu1, mu2).
class AxisPair {
 public:
  static AxisPair make(const PureUnit& mu1, const PureUnit& mu2);
  static AxisPair make(const Quaternion& mu1, const Quaternion& mu2);
  static AxisPair canonical() { return AxisPair(PureUnit::i(), PureUnit::j()); }

  const PureUnit& mu1() const { return mu1_; }
  const PureUnit& mu2() const { return mu2_; }
  /// mu1 mu2, the third axis of the induced orthonormal frame.
  PureUnit mu3() const;
  bool is_canonical() const;

  friend bool operator==(const AxisPair&, const AxisPair&) = default;

 private:
  AxisPair(PureUnit a, PureUnit b) : mu1_(a), mu2_(b) {}
  PureUnit mu1_;
  PureUnit mu2_;
};

enum class SplitFlavor {
  Right,  // q = q_a + q_b mu2, q_a and q_b in span{1, mu1}
  Left,   // q = q_d + mu1 q_e, q_d and q_e in span{1, mu2}
};

/// Coordinates of the two commuting-subalgebra parts of a quaternion.
/// Right: a = a_re + a_im mu1, b = b_re + b_im mu1.
/// Left:  a = f_d = a_re + a_im mu2, b = f_e = b_re + b_im mu2.
struct SymplecticSplit {
  double a_re = 0.0;
  double a_im = 0.0;
  double b_re = 0.0;
  double b_im = 0.0;
  SplitFlavor flavor = SplitFlavor::Right;
};

SymplecticSplit symplectic_split(const Quaternion& q, SplitFlavor flavor,
                                 const AxisPair& axes = AxisPair::canonical());
Quaternion recompose(const SymplecticSplit& split,
                     const AxisPair& axes = AxisPair::canonical());

}  // namespace qh
