#pragma once

#include <cstdint>
#include <string>

namespace betapend {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Best rational approximation of x with denominator <= max_den, found by
// walking the continued-fraction convergents.
Rational nearest_rational(double x, std::int64_t max_den);

// "p/q", or just "p" when q == 1.
std::string to_string(const Rational& r);

}  // namespace betapend
