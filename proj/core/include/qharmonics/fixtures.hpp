#pragma once

// Built-in analytic test signals with known transforms.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qharmonics/grid.hpp"

namespace qh::fixtures {

/// e^{-(s^2 + t^2)}.
QFunction gaussian();
/// Analytic partial derivatives of the Gaussian.
QFunction gaussian_ds();
QFunction gaussian_dt();
/// Two-sided QFT of the Gaussian (canonical axes): pi e^{-(u^2 + v^2)/4}.
QFunction gaussian_spectrum();

/// Fixed non-real coefficient used by the quaternion Gaussian fixture.
Quaternion quaternion_gaussian_coefficient();
/// q e^{-(s^2 + t^2)}.
QFunction quaternion_gaussian(const Quaternion& q = quaternion_gaussian_coefficient());

/// e^{-r^2} (1 + 0.5 s i + 0.3 t j + 0.2 s t k): every component non-trivial.
QFunction mixed();

/// 1 on the closed square [-1, 1]^2, 0 elsewhere.
QFunction indicator();
/// Two-sided QFT of the indicator: 4 sin(u) sin(v) / (u v).
QFunction indicator_spectrum();

/// (1 / 4 pi^2) e^{-alpha (x^2 + y^2)}.
QFunction gw_window(double alpha);
/// Gauss-Weierstrass kernel (1 / 4 pi alpha) e^{-(s^2 + t^2) / 4 alpha}.
QFunction gw_kernel(double alpha);

/// e^s e^t.
QFunction exp_product();

/// A named fixture with the metadata the CLI and smoothing code need.
struct Fixture {
  std::string name;
  QFunction fn;
  /// Coordinates of jump lines (empty for continuous fixtures).
  std::vector<double> s_breaks;
  std::vector<double> t_breaks;
  /// Two-sided QFT with canonical axes, when known in closed form.
  std::optional<QFunction> spectrum;
};

/// gaussian, qgaussian, mixed, indicator, gw-window, expprod.
std::vector<std::string> names();
/// Throws Errc::InvalidArgument for unknown names.
Fixture by_name(const std::string& name);

}  // namespace qh::fixtures
