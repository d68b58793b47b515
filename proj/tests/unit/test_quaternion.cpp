#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "qharmonics/quaternion.hpp"
#include "support/test_util.hpp"

using namespace qh;
using testutil::dist;

namespace {
constexpr double kPi = std::numbers::pi;
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();
const Quaternion ONE = Quaternion::one();
}  // namespace

TEST_CASE("basis products match the multiplication table") {
  CHECK(I * J == K);
  CHECK(J * K == I);
  CHECK(K * I == J);
  CHECK(J * I == -K);
  CHECK(K * J == -I);
  CHECK(I * K == -J);
  CHECK(I * I == -ONE);
  CHECK(J * J == -ONE);
  CHECK(K * K == -ONE);
}

TEST_CASE("qmul examples") {
  const Quaternion q{1.5, -2.0, 0.25, 3.0};
  CHECK(ONE * q == q);
  CHECK((ONE + I) * (ONE + J) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("qmul agrees with the independent cross-product form") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int k = 0; k < 200; ++k) {
    const Quaternion p{d(rng), d(rng), d(rng), d(rng)};
    const Quaternion q{d(rng), d(rng), d(rng), d(rng)};
    CHECK(dist(qmul(p, q), oracle::mul(p, q)) < 1e-14);
  }
}

TEST_CASE("conjugate and modulus") {
  CHECK(qconj(I) == -I);
  CHECK(qabs(Quaternion(1, 1, 1, 1)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(qconj(I * J) == qconj(J) * qconj(I));
  CHECK(qconj(I * J) == -K);
  const Quaternion q{0.3, -1.2, 2.0, 0.7};
  CHECK(qconj(qconj(q)) == q);
  CHECK(dist(q * qinverse(q), ONE) < 1e-15);
}

TEST_CASE("qexp_pure") {
  CHECK(dist(qexp_pure(PureUnit::i(), kPi / 2), I) < 1e-15);
  CHECK(qexp_pure(PureUnit::j(), 0.0) == ONE);
  const Quaternion h = qexp_pure(PureUnit::i(), kPi / 4);
  CHECK(dist(h * h, I) < 1e-15);
  const PureUnit mu = PureUnit::make(1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0));
  CHECK(dist(qexp_pure(mu, 0.4) * qexp_pure(mu, 1.1), qexp_pure(mu, 1.5)) < 1e-15);
  CHECK(qabs(qexp_pure(mu, 2.3)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dist(mu.as_quaternion() * mu.as_quaternion(), -ONE) < 1e-15);
}

TEST_CASE("PureUnit validation") {
  CHECK_ERRC(PureUnit::make(1.0, 1.0, 0.0), Errc::NotUnit);
  CHECK_ERRC(PureUnit::make(Quaternion(0.1, 1, 0, 0)), Errc::NotPure);
  // Decimal rounding within 1e-9 is normalized.
  const PureUnit mu = PureUnit::make(0.7071067812, 0.7071067812, 0.0);
  CHECK(mu.x() * mu.x() + mu.y() * mu.y() + mu.z() * mu.z() ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("axis pairs") {
  CHECK_NOTHROW(AxisPair::make(PureUnit::i(), PureUnit::j()));
  CHECK_ERRC(AxisPair::make(PureUnit::i(), PureUnit::i()), Errc::NotOrthogonal);
  const double r = 1 / std::sqrt(2.0);
  const AxisPair diag = AxisPair::make(PureUnit::make(r, r, 0), PureUnit::make(r, -r, 0));
  CHECK_FALSE(diag.is_canonical());
  CHECK(AxisPair::canonical().is_canonical());
  // mu3 = mu1 mu2 is a pure unit orthogonal to both.
  const Quaternion m3 = diag.mu3().as_quaternion();
  CHECK(dist(diag.mu1().as_quaternion() * diag.mu2().as_quaternion(), m3) < 1e-15);
  CHECK(std::abs(qdot(m3, diag.mu1().as_quaternion())) < 1e-15);
  CHECK(AxisPair::canonical().mu3() == PureUnit::k());
  CHECK_ERRC(AxisPair::make(Quaternion(0, 1, 0, 0), Quaternion(0, 2, 0, 0)), Errc::NotUnit);
}

TEST_CASE("symplectic split") {
  const Quaternion q{1, 2, 3, 4};
  const SymplecticSplit r = symplectic_split(q, SplitFlavor::Right);
  CHECK(r.a_re == 1);
  CHECK(r.a_im == 2);
  CHECK(r.b_re == 3);
  CHECK(r.b_im == 4);
  // (1 + 2i) + (3 + 4i) j
  CHECK(Quaternion(1, 2, 0, 0) + Quaternion(3, 4, 0, 0) * J == q);
  const SymplecticSplit l = symplectic_split(q, SplitFlavor::Left);
  // (1 + 3j) + i (2 + 4j)
  CHECK(Quaternion(l.a_re, 0, l.a_im, 0) + I * Quaternion(l.b_re, 0, l.b_im, 0) == q);
  const SymplecticSplit five = symplectic_split(Quaternion(5.0), SplitFlavor::Left);
  CHECK(five.a_re == 5);
  CHECK(five.a_im == 0);
  CHECK(five.b_re == 0);
  CHECK(five.b_im == 0);
}

TEST_CASE("symplectic split recomposes for general axes") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-2, 2);
  const double r = 1 / std::sqrt(2.0);
  const AxisPair axes = AxisPair::make(PureUnit::make(0, r, r), PureUnit::make(1, 0, 0));
  for (int k = 0; k < 100; ++k) {
    const Quaternion q{d(rng), d(rng), d(rng), d(rng)};
    for (SplitFlavor f : {SplitFlavor::Right, SplitFlavor::Left}) {
      CHECK(dist(recompose(symplectic_split(q, f), AxisPair::canonical()), q) == 0.0);
      const SymplecticSplit s = symplectic_split(q, f, axes);
      CHECK(dist(recompose(s, axes), q) < 1e-14);
    }
    // Right flavor over general axes: q = f_a + f_b mu2 with f_a, f_b in span{1, mu1}.
    const SymplecticSplit s = symplectic_split(q, SplitFlavor::Right, axes);
    const Quaternion m1 = axes.mu1().as_quaternion();
    const Quaternion m2 = axes.mu2().as_quaternion();
    const Quaternion fa = Quaternion(s.a_re) + m1 * s.a_im;
    const Quaternion fb = Quaternion(s.b_re) + m1 * s.b_im;
    CHECK(dist(fa + fb * m2, q) < 1e-14);
  }
}
