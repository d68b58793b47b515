#pragma once

// Test-only reference implementations. They share no code with the library
// beyond the Quaternion value type and the GridSpec geometry: kernels are
// rebuilt here from their defining formulas and every sum is a direct
// quadruple loop.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "qharmonics/grid.hpp"
#include "qharmonics/quaternion.hpp"

namespace oracle {

using qh::Quaternion;

constexpr double kPi = std::numbers::pi;

/// Hamilton product written out independently from the table i j = k etc.
inline Quaternion mul(const Quaternion& p, const Quaternion& q) {
  // (a + u)(b + v) = ab - u.v + a v + b u + u x v for vector parts u, v.
  const double dot = p.x * q.x + p.y * q.y + p.z * q.z;
  return {p.w * q.w - dot,
          p.w * q.x + q.w * p.x + (p.y * q.z - p.z * q.y),
          p.w * q.y + q.w * p.y + (p.z * q.x - p.x * q.z),
          p.w * q.z + q.w * p.z + (p.x * q.y - p.y * q.x)};
}

/// e^{axis * theta} for a unit pure axis given as a quaternion.
inline Quaternion exp_axis(const Quaternion& axis, double theta) {
  const double s = std::sin(theta);
  return {std::cos(theta), axis.x * s, axis.y * s, axis.z * s};
}

enum class Placement { Two, Right, Left };

/// Per-axis kernel evaluated at (input x, output xi).
struct AxisKernel {
  Quaternion axis;
  // Fourier: e^{-axis x xi}; LCT: full canonical kernel.
  bool lct = false;
  double a = 0, b = 1, c = 0, d = 0;
  double extra_phase = 0.0;

  Quaternion operator()(double x, double xi) const {
    if (!lct) return exp_axis(axis, -x * xi);
    const double sgn = b > 0 ? 1.0 : -1.0;
    const double phase =
        -sgn * kPi / 4 + extra_phase + (a * x * x - 2 * x * xi + d * xi * xi) / (2 * b);
    const double amp = 1.0 / std::sqrt(2 * kPi * std::abs(b));
    const Quaternion e = exp_axis(axis, phase);
    return {e.w * amp, e.x * amp, e.y * amp, e.z * amp};
  }
};

/// Direct O(n^4) quadrature of sum K1(s,u) f(s,t) K2(t,v) ds dt with the
/// given placement. `data` is row-major on `in` (index it * ns + is).
inline std::vector<Quaternion> sandwich(const std::vector<Quaternion>& data,
                                        const qh::GridSpec& in, const qh::GridSpec& out,
                                        const AxisKernel& k1, const AxisKernel& k2,
                                        Placement placement) {
  std::vector<Quaternion> result(out.size());
  for (std::size_t iv = 0; iv < out.nt; ++iv) {
    for (std::size_t iu = 0; iu < out.ns; ++iu) {
      Quaternion acc;
      for (std::size_t it = 0; it < in.nt; ++it) {
        for (std::size_t is = 0; is < in.ns; ++is) {
          const Quaternion a = k1(in.s(is), out.s(iu));
          const Quaternion b = k2(in.t(it), out.t(iv));
          const Quaternion& f = data[it * in.ns + is];
          Quaternion term;
          switch (placement) {
            case Placement::Two: term = mul(mul(a, f), b); break;
            case Placement::Right: term = mul(mul(f, a), b); break;
            case Placement::Left: term = mul(mul(a, b), f); break;
          }
          acc += term;
        }
      }
      result[iv * out.ns + iu] = acc * in.cell_area();
    }
  }
  return result;
}

/// Si(x) by its power series in long double; accurate for |x| <= 20.
inline double si_series(double xd) {
  const long double x = xd;
  long double term = x;  // x^{2n+1} / (2n+1)!
  long double sum = 0;
  for (int n = 0; n < 200; ++n) {
    sum += term / (2 * n + 1);
    term *= -x * x / ((2.0L * n + 2) * (2.0L * n + 3));
    if (std::abs(term) < 1e-30L) break;
  }
  return static_cast<double>(sum);
}

/// Si values frozen from an arbitrary-precision evaluation (30 digits).
struct FrozenSi {
  double x;
  double si;
};
inline const std::vector<FrozenSi>& frozen_si() {
  static const std::vector<FrozenSi> values{
      {1.0, 0.94608307036718301494},
      {kPi, 1.8519370519824661704},
      {10.0, 1.6583475942188740493},
      {64.0, 1.5644522502120305322},
      {65.0, 1.5792499558786023701},
      {100.0, 1.5622254668890562934},
      {1000.0, 1.5702331219687712181},
      {1e4, 1.5708915453859619157},
      {1e6, 1.5707953900431190815},
  };
  return values;
}

/// (Si(2M)/pi)^2: the partial-sum value of the square indicator at its corner,
/// frozen for M = 25, 50, 100.
struct FrozenCorner {
  double M;
  double corner;
  double center;
};
inline const std::vector<FrozenCorner>& frozen_indicator_sums() {
  static const std::vector<FrozenCorner> values{
      {25.0, 0.24393232411261552336, 0.95057054313482760467},
      {50.0, 0.24727925357650141834, 0.97572929645046209344},
      {100.0, 0.2492321943603377522, 0.98911701430600567334},
  };
  return values;
}

inline std::vector<Quaternion> random_data(std::size_t n, unsigned seed, bool real = false) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Quaternion> v(n);
  for (auto& q : v) {
    q.w = dist(rng);
    if (!real) {
      q.x = dist(rng);
      q.y = dist(rng);
      q.z = dist(rng);
    }
  }
  return v;
}

inline double max_abs_diff(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Quaternion d = a[k] - b[k];
    m = std::max(m, std::sqrt(d.w * d.w + d.x * d.x + d.y * d.y + d.z * d.z));
  }
  return m;
}

}  // namespace oracle
