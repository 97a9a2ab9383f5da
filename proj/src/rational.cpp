#include "betapend/rational.hpp"

#include <cmath>
#include <sstream>

#include "betapend/errors.hpp"

namespace betapend {

Rational nearest_rational(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw InvalidInput("nearest_rational: non-finite value");
  if (max_den < 1) throw InvalidInput("nearest_rational: max_den must be >= 1");

  const bool negative = x < 0.0;
  double y = std::abs(x);
  std::int64_t p_prev = 1, q_prev = 0;  // convergent h_{-1}/k_{-1}
  std::int64_t p = static_cast<std::int64_t>(std::floor(y));
  std::int64_t q = 1;
  double frac = y - std::floor(y);

  while (frac > 1e-15 * std::max(1.0, y)) {
    y = 1.0 / frac;
    const std::int64_t term = static_cast<std::int64_t>(std::floor(y));
    frac = y - std::floor(y);
    const std::int64_t p_next = term * p + p_prev;
    const std::int64_t q_next = term * q + q_prev;
    if (q_next > max_den || p_next < 0 || q_next < 0) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return Rational{negative ? -p : p, q};
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r.num;
  if (r.den != 1) out << "/" << r.den;
  return out.str();
}

}  // namespace betapend
