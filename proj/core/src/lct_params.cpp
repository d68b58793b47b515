#include "qharmonics/lct_params.hpp"

#include <cmath>
#include <sstream>

#include "qharmonics/error.hpp"

namespace qh {

LctParams LctParams::make(double a, double b, double c, double d) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d))) {
    throw Error(Errc::NonFinite, "LCT parameters must be finite");
  }
  const double det = a * d - b * c;
  if (std::abs(det - 1.0) > kDeterminantTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ad - bc = " << det << ", expected 1";
    throw Error(Errc::InvalidDeterminant, msg.str());
  }
  return LctParams(a, b, c, d);
}

LctParams LctParams::rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return make(c, s, -s, c);
}

}  // namespace qh
