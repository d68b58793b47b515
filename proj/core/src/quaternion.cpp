#include "qharmonics/quaternion.hpp"

#include <cmath>
#include <sstream>

#include "qharmonics/error.hpp"

namespace qh {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotUnit: return "NotUnit";
    case Errc::NotPure: return "NotPure";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::NonFinite: return "NonFinite";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::InvalidGrid: return "InvalidGrid";
    case Errc::Io: return "Io";
    case Errc::BadMagic: return "BadMagic";
    case Errc::BadVersion: return "BadVersion";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::BadPpm: return "BadPpm";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidNet: return "InvalidNet";
    case Errc::InvalidWindow: return "InvalidWindow";
    case Errc::ProvenanceMismatch: return "ProvenanceMismatch";
    case Errc::NonRealInput: return "NonRealInput";
    case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
    case Errc::NonCanonicalAxes: return "NonCanonicalAxes";
    case Errc::SideMismatch: return "SideMismatch";
    case Errc::InvalidDeterminant: return "InvalidDeterminant";
    case Errc::DegenerateB: return "DegenerateB";
    case Errc::DegenerateAngle: return "DegenerateAngle";
    case Errc::NonPositiveWindow: return "NonPositiveWindow";
    case Errc::NonConvergent: return "NonConvergent";
    case Errc::NoIntegrableSection: return "NoIntegrableSection";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

PureUnit PureUnit::make(double x, double y, double z) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw Error(Errc::NonFinite, "pure quaternion has non-finite coefficients");
  }
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (std::abs(norm - 1.0) > kUnitNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "axis norm " << norm << " is not within " << kUnitNormTolerance
        << " of 1";
    throw Error(Errc::NotUnit, msg.str());
  }
  return PureUnit(x / norm, y / norm, z / norm);
}

PureUnit PureUnit::make(const Quaternion& q) {
  if (std::abs(q.w) > kPureScalarTolerance) {
    throw Error(Errc::NotPure, "axis has a nonzero scalar part");
  }
  return make(q.x, q.y, q.z);
}

AxisPair AxisPair::make(const PureUnit& mu1, const PureUnit& mu2) {
  const double dot = mu1.x() * mu2.x() + mu1.y() * mu2.y() + mu1.z() * mu2.z();
  if (std::abs(dot) > kOrthogonalityTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "axes are not orthogonal (dot = " << dot << ")";
    throw Error(Errc::NotOrthogonal, msg.str());
  }
  return AxisPair(mu1, mu2);
}

AxisPair AxisPair::make(const Quaternion& mu1, const Quaternion& mu2) {
  return make(PureUnit::make(mu1), PureUnit::make(mu2));
}

PureUnit AxisPair::mu3() const {
  // Product of orthogonal pure units is pure and unit.
  const Quaternion p = qmul(mu1_.as_quaternion(), mu2_.as_quaternion());
  return PureUnit::make(p.x, p.y, p.z);
}

bool AxisPair::is_canonical() const {
  return mu1_ == PureUnit::i() && mu2_ == PureUnit::j();
}

namespace {

struct Frame {
  Quaternion e1, e2, e3;
};

Frame frame_of(const AxisPair& axes) {
  return {axes.mu1().as_quaternion(), axes.mu2().as_quaternion(),
          axes.mu3().as_quaternion()};
}

}  // namespace

SymplecticSplit symplectic_split(const Quaternion& q, SplitFlavor flavor,
                                 const AxisPair& axes) {
  double c0 = q.w, c1 = q.x, c2 = q.y, c3 = q.z;
  if (!axes.is_canonical()) {
    const Frame f = frame_of(axes);
    c1 = qdot(q, f.e1);
    c2 = qdot(q, f.e2);
    c3 = qdot(q, f.e3);
  }
  // q = c0 + c1 mu1 + c2 mu2 + c3 mu1 mu2
  //   = (c0 + c1 mu1) + (c2 + c3 mu1) mu2     (right)
  //   = (c0 + c2 mu2) + mu1 (c1 + c3 mu2)     (left)
  if (flavor == SplitFlavor::Right) {
    return {c0, c1, c2, c3, flavor};
  }
  return {c0, c2, c1, c3, flavor};
}

Quaternion recompose(const SymplecticSplit& s, const AxisPair& axes) {
  double c0 = s.a_re, c1, c2, c3 = s.b_im;
  if (s.flavor == SplitFlavor::Right) {
    c1 = s.a_im;
    c2 = s.b_re;
  } else {
    c1 = s.b_re;
    c2 = s.a_im;
  }
  if (axes.is_canonical()) {
    return {c0, c1, c2, c3};
  }
  const Frame f = frame_of(axes);
  return Quaternion(c0) + f.e1 * c1 + f.e2 * c2 + f.e3 * c3;
}

}  // namespace qh
