#include "betapend/format.hpp"

#include <cmath>
#include <cstdio>

namespace betapend {

std::string format_value(double v) {
  if (v == 0.0) return "0";  // covers -0 as well
  char buffer[48];
  const double magnitude = std::abs(v);
  if (magnitude >= 1e-4 && magnitude < 1e6)
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  else
    std::snprintf(buffer, sizeof(buffer), "%.16e", v);
  return buffer;
}

}  // namespace betapend
