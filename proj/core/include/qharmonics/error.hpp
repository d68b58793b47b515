#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qh {

enum class Errc {
  NotUnit,
  NotPure,
  NotOrthogonal,
  NonFinite,
  ShapeMismatch,
  InvalidGrid,
  Io,
  BadMagic,
  BadVersion,
  TruncatedPayload,
  BadPpm,
  IndexOutOfRange,
  InvalidNet,
  InvalidWindow,
  ProvenanceMismatch,
  NonRealInput,
  NotPowerOfTwo,
  NonCanonicalAxes,
  SideMismatch,
  InvalidDeterminant,
  DegenerateB,
  DegenerateAngle,
  NonPositiveWindow,
  NonConvergent,
  NoIntegrableSection,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// All library failures surface as this exception; `code()` identifies the
/// failure class so callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qh
