#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "qharmonics/error.hpp"
#include "qharmonics/quadrature.hpp"

using namespace qh;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (std::size_t order : {2u, 5u, 16u, 20u}) {
    const GaussLegendre& gl = GaussLegendre::get(order);
    REQUIRE(gl.nodes.size() == order);
    for (std::size_t p = 0; p < 2 * order; ++p) {
      double sum = 0.0;
      for (std::size_t k = 0; k < order; ++k) sum += gl.weights[k] * std::pow(gl.nodes[k], p);
      const double exact = p % 2 == 0 ? 2.0 / static_cast<double>(p + 1) : 0.0;
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
  }
  CHECK(&GaussLegendre::get(16) == &GaussLegendre::get(16));
  CHECK_THROWS_AS(GaussLegendre::get(1), Error);
}

TEST_CASE("composite rules and panel breaks") {
  const auto breaks = panel_breaks(-1.0, 7.0, 2.0, {0.5, 9.0});
  const std::vector<double> expected{-1.0, 0.0, 0.5, 2.0, 4.0, 6.0, 7.0};
  CHECK(breaks == expected);
  const CompositeRule rule = composite_rule(breaks, 4);
  CHECK(rule.nodes.size() == 4 * (breaks.size() - 1));
  double total = 0.0;
  for (double w : rule.weights) total += w;
  CHECK(total == doctest::Approx(8.0).epsilon(1e-14));

  CHECK(integrate([](double x) { return std::exp(x); }, {0.0, 1.0, 2.0}) ==
        doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-14));
  const Quaternion q = integrate([](double x) { return Quaternion(1, x, x * x, 0); }, {0.0, 3.0});
  CHECK(q.w == doctest::Approx(3.0));
  CHECK(q.x == doctest::Approx(4.5));
  CHECK(q.y == doctest::Approx(9.0));
}

TEST_CASE("sine integral against the series and frozen values") {
  for (double x : {0.0, 0.25, 1.0, 3.0, 7.5, 12.0, 20.0}) {
    CHECK(sine_integral(x) == doctest::Approx(oracle::si_series(x)).epsilon(1e-13));
    CHECK(sine_integral(-x) == doctest::Approx(-sine_integral(x)).epsilon(1e-15));
  }
  for (const auto& [x, si] : oracle::frozen_si()) {
    CAPTURE(x);
    CHECK(std::abs(sine_integral(x) - si) < 1e-13);
  }
}
