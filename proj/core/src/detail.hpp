#pragma once

#include <cstdio>
#include <string>

namespace skewcorr::detail {

inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace skewcorr::detail
