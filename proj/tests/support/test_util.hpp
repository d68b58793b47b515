#pragma once

#include "doctest.h"
#include "qharmonics/error.hpp"
#include "qharmonics/quaternion.hpp"

#define CHECK_ERRC(expr, errc)                       \
  do {                                               \
    bool qh_thrown_ = false;                         \
    try {                                            \
      (void)(expr);                                  \
    } catch (const qh::Error& qh_e_) {               \
      qh_thrown_ = true;                             \
      CHECK_MESSAGE(qh_e_.code() == (errc), qh_e_.what()); \
    }                                                \
    CHECK_MESSAGE(qh_thrown_, "expected " #errc);    \
  } while (0)

namespace testutil {

inline double dist(const qh::Quaternion& a, const qh::Quaternion& b) { return qh::qabs(a - b); }

}  // namespace testutil
