#include "qharmonics/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "qharmonics/error.hpp"

namespace qh::fixtures {
namespace {

constexpr double kPi = std::numbers::pi;

double gauss(double s, double t) { return std::exp(-(s * s + t * t)); }

double sinc_mass(double u) {
  // 2 sin(u) / u with its limit at 0.
  if (std::abs(u) < 1e-8) return 2.0 - u * u / 3.0;
  return 2.0 * std::sin(u) / u;
}

}  // namespace

QFunction gaussian() {
  return [](double s, double t) { return Quaternion(gauss(s, t)); };
}

QFunction gaussian_ds() {
  return [](double s, double t) { return Quaternion(-2.0 * s * gauss(s, t)); };
}

QFunction gaussian_dt() {
  return [](double s, double t) { return Quaternion(-2.0 * t * gauss(s, t)); };
}

QFunction gaussian_spectrum() {
  return [](double u, double v) {
    return Quaternion(kPi * std::exp(-(u * u + v * v) / 4.0));
  };
}

Quaternion quaternion_gaussian_coefficient() { return {0.3, -0.5, 0.7, 0.4}; }

QFunction quaternion_gaussian(const Quaternion& q) {
  return [q](double s, double t) { return q * gauss(s, t); };
}

QFunction mixed() {
  return [](double s, double t) {
    return Quaternion(1.0, 0.5 * s, 0.3 * t, 0.2 * s * t) * gauss(s, t);
  };
}

QFunction indicator() {
  return [](double s, double t) {
    return Quaternion(std::abs(s) <= 1.0 && std::abs(t) <= 1.0 ? 1.0 : 0.0);
  };
}

QFunction indicator_spectrum() {
  return [](double u, double v) { return Quaternion(sinc_mass(u) * sinc_mass(v)); };
}

QFunction gw_window(double alpha) {
  return [alpha](double x, double y) {
    return Quaternion(std::exp(-alpha * (x * x + y * y)) / (4.0 * kPi * kPi));
  };
}

QFunction gw_kernel(double alpha) {
  return [alpha](double s, double t) {
    return Quaternion(std::exp(-(s * s + t * t) / (4.0 * alpha)) / (4.0 * kPi * alpha));
  };
}

QFunction exp_product() {
  return [](double s, double t) { return Quaternion(std::exp(s) * std::exp(t)); };
}

std::vector<std::string> names() {
  return {"gaussian", "qgaussian", "mixed", "indicator", "gw-window", "expprod"};
}

Fixture by_name(const std::string& name) {
  if (name == "gaussian") return {name, gaussian(), {}, {}, gaussian_spectrum()};
  if (name == "qgaussian") return {name, quaternion_gaussian(), {}, {}, std::nullopt};
  if (name == "mixed") return {name, mixed(), {}, {}, std::nullopt};
  if (name == "indicator") {
    return {name, indicator(), {-1.0, 1.0}, {-1.0, 1.0}, indicator_spectrum()};
  }
  if (name == "gw-window") return {name, gw_window(0.5), {}, {}, gw_kernel(0.5)};
  if (name == "expprod") return {name, exp_product(), {}, {}, std::nullopt};
  throw Error(Errc::InvalidArgument, "unknown fixture '" + name + "'");
}

}  // namespace qh::fixtures
