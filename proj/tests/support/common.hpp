#pragma once

#include <string>

#include "doctest.h"
#include "fintop/point_set.hpp"

namespace doctest {
template <>
struct StringMaker<fintop::PointSet> {
  static String convert(fintop::PointSet s) { return fintop::to_string(s).c_str(); }
};
}  // namespace doctest

#define CHECK_THROWS_CODE(expr, expected)               \
  do {                                                 \
    bool thrown_ = false;                              \
    try {                                              \
      (void)(expr);                                    \
    } catch (const fintop::Error& e) {                 \
      thrown_ = true;                                  \
      CHECK(e.code() == (expected));                   \
    }                                                  \
    CHECK_MESSAGE(thrown_, "expected fintop::Error");  \
  } while (false)
