#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qharmonics/quaternion.hpp"

namespace qh {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Rules are computed once per order and cached.
  static const GaussLegendre& get(std::size_t order);
};

/// Nodes and weights of a composite rule over the panels between consecutive
/// sorted breakpoints.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
CompositeRule composite_rule(const std::vector<double>& breaks, std::size_t order);

/// Breakpoints lo = x0 < x1 < ... = hi: multiples of `period` inside
/// (lo, hi) merged with the extra points that fall inside.
std::vector<double> panel_breaks(double lo, double hi, double period,
                                 const std::vector<double>& extra = {});

double integrate(const std::function<double(double)>& fn, const std::vector<double>& breaks,
                 std::size_t order = 16);
Quaternion integrate(const std::function<Quaternion(double)>& fn,
                     const std::vector<double>& breaks, std::size_t order = 16);

/// Si(x) = int_0^x sin(t)/t dt. Panels between multiples of pi for |x| <= 64,
/// the auxiliary-function asymptotic series beyond.
double sine_integral(double x);

}  // namespace qh
