#pragma once

#include <bdsym/error.hpp>

#include <string>

namespace bdsym::detail {

inline void require_same(int a, int b, const char* what) {
  if (a != b)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace bdsym::detail
