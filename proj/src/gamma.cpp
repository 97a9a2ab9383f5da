#include "betapend/gamma.hpp"

#include <cmath>
#include <sstream>

#include "betapend/errors.hpp"

namespace betapend {

namespace {

// Lanczos coefficients for g = 7 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

void require_positive(double x, const char* who) {
  if (!std::isfinite(x) || x <= 0.0) {
    std::ostringstream msg;
    msg << who << ": argument " << x << " outside the open domain (0, +inf)";
    throw DomainError(msg.str());
  }
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  // The coefficient set loses accuracy approaching the pole at 0 (and
  // c1/x overflows for subnormal x); step into [1, 1.5) by recurrence.
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x + kLanczosG - 0.5;
  return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

double euler_beta_closed(double x, double y) {
  require_positive(x, "euler_beta_closed");
  require_positive(y, "euler_beta_closed");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

QuadResult euler_beta_integral(double x, double y, const QuadConfig& config) {
  require_positive(x, "euler_beta_integral");
  require_positive(y, "euler_beta_integral");
  const double a = x - 1.0;
  const double b = y - 1.0;
  return integrate_1d(
      Integrand1D([a, b](double t, double one_minus_t) {
        return std::pow(t, a) * std::pow(one_minus_t, b);
      }),
      config);
}

}  // namespace betapend
