#include "qharmonics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "qharmonics/error.hpp"

namespace qh {
namespace {

constexpr double kPi = std::numbers::pi;

GaussLegendre compute_rule(std::size_t n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Newton iteration on P_n from the Chebyshev-type initial guess.
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussLegendre& GaussLegendre::get(std::size_t order) {
  if (order < 2) throw Error(Errc::InvalidArgument, "Gauss-Legendre order must be >= 2");
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendre> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

CompositeRule composite_rule(const std::vector<double>& breaks, std::size_t order) {
  const GaussLegendre& gl = GaussLegendre::get(order);
  CompositeRule rule;
  if (breaks.size() < 2) return rule;
  rule.nodes.reserve((breaks.size() - 1) * order);
  rule.weights.reserve((breaks.size() - 1) * order);
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double half = 0.5 * (breaks[p + 1] - breaks[p]);
    const double mid = 0.5 * (breaks[p + 1] + breaks[p]);
    for (std::size_t k = 0; k < order; ++k) {
      rule.nodes.push_back(mid + half * gl.nodes[k]);
      rule.weights.push_back(half * gl.weights[k]);
    }
  }
  return rule;
}

std::vector<double> panel_breaks(double lo, double hi, double period,
                                 const std::vector<double>& extra) {
  std::vector<double> b{lo};
  if (period > 0.0) {
    const double first = std::floor(lo / period) + 1.0;
    for (double k = first; k * period < hi; k += 1.0) b.push_back(k * period);
  }
  for (double e : extra) {
    if (e > lo && e < hi) b.push_back(e);
  }
  b.push_back(hi);
  std::sort(b.begin(), b.end());
  // Drop panels narrower than a few ulps of the interval.
  const double min_width = 1e-13 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  std::vector<double> out{b.front()};
  for (std::size_t k = 1; k < b.size(); ++k) {
    if (b[k] - out.back() > min_width) out.push_back(b[k]);
  }
  if (out.back() != hi) out.back() = hi;
  return out;
}

double integrate(const std::function<double(double)>& fn, const std::vector<double>& breaks,
                 std::size_t order) {
  const CompositeRule rule = composite_rule(breaks, order);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += rule.weights[k] * fn(rule.nodes[k]);
  return sum;
}

Quaternion integrate(const std::function<Quaternion(double)>& fn,
                     const std::vector<double>& breaks, std::size_t order) {
  const CompositeRule rule = composite_rule(breaks, order);
  Quaternion sum;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) sum += fn(rule.nodes[k]) * rule.weights[k];
  return sum;
}

double sine_integral(double x) {
  if (x < 0.0) return -sine_integral(-x);
  if (x == 0.0) return 0.0;
  if (x <= 64.0) {
    auto sinc = [](double t) { return std::sin(t) / t; };
    return integrate(sinc, panel_breaks(0.0, x, kPi), 20);
  }
  // Si(x) = pi/2 - f(x) cos x - g(x) sin x with
  // f ~ (1/x) sum (-1)^n (2n)!/x^{2n}, g ~ (1/x^2) sum (-1)^n (2n+1)!/x^{2n}.
  const double inv2 = 1.0 / (x * x);
  double f = 0.0;
  double g = 0.0;
  double tf = 1.0;  // (2n)! / x^{2n}
  double tg = 1.0;  // (2n+1)! / x^{2n}
  double last = std::numeric_limits<double>::infinity();
  for (int n = 0; n < 40; ++n) {
    if (n > 0) {
      tf *= (2.0 * n - 1.0) * (2.0 * n) * inv2;
      tg *= (2.0 * n) * (2.0 * n + 1.0) * inv2;
    }
    const double size = std::max(tf, tg);
    if (size > last) break;  // asymptotic series starts diverging
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    f += sign * tf;
    g += sign * tg;
    last = size;
    if (size < 1e-18) break;
  }
  f /= x;
  g *= inv2;
  return kPi / 2.0 - f * std::cos(x) - g * std::sin(x);
}

}  // namespace qh
