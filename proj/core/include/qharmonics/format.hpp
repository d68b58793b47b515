#pragma once

#include <cstdio>
#include <string>

namespace qh {

/// Shortest locale-independent text that round-trips a double ("%.17g").
inline std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace qh
