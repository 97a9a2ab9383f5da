#include "betapend/pendants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <sstream>

#include "betapend/gamma.hpp"

namespace betapend {

namespace {

// (e^u - 1)/u with the quotient replaced by its 3-term expansion when the
// log-ratio is small; keeps the diagonal limit exact to ~1e-13 without a
// 0/0 cancellation.
constexpr double kDiagonalSwitch = 1e-6;

double log_ratio_factor(double numer_diff, double pivot_shifted, double u) {
  if (std::abs(u) < kDiagonalSwitch) return 1.0 + u * (0.5 + u / 6.0);
  return numer_diff / (pivot_shifted * u);
}

void require_finite(std::span<const double> point, const char* who) {
  for (const double v : point) {
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << who << ": non-finite argument";
      throw InvalidInput(msg.str());
    }
  }
}

struct ArityRange {
  int lo;
  int hi;       // integral path ceiling
  int hi_closed;  // closed-form ceiling
};

ArityRange arity_range(Family family) {
  switch (family) {
    case Family::EulerExp:
    case Family::SineAdd:
      return {2, 2, 2};
    case Family::Mult:
    case Family::Add1:
      return {2, kMaxArity, kMaxArity};
    case Family::Add2:
    case Family::Log1:
    case Family::Log2:
      return {2, kMaxArity, 2};
  }
  throw InvalidInput("unknown family");
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::EulerExp: return "euler";
    case Family::Mult: return "mult";
    case Family::Add1: return "add1";
    case Family::Add2: return "add2";
    case Family::Log1: return "log1";
    case Family::Log2: return "log2";
    case Family::SineAdd: return "sine";
  }
  throw InvalidInput("unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "euler") return Family::EulerExp;
  if (name == "mult") return Family::Mult;
  if (name == "add1") return Family::Add1;
  if (name == "add2") return Family::Add2;
  if (name == "log1") return Family::Log1;
  if (name == "log2") return Family::Log2;
  if (name == "sine") return Family::SineAdd;
  return std::nullopt;
}

std::optional<double> family_lower_bound(Family family) {
  switch (family) {
    case Family::EulerExp: return 0.0;
    case Family::Mult:
    case Family::Log1:
    case Family::Log2: return 1.0;
    default: return std::nullopt;
  }
}

void validate(const FamilySpec& spec, bool closed_form) {
  const ArityRange range = arity_range(spec.family);
  const int ceiling = closed_form ? range.hi_closed : range.hi;
  if (spec.arity < range.lo || spec.arity > ceiling) {
    std::ostringstream msg;
    msg << "family '" << family_name(spec.family) << "' supports arity "
        << range.lo << ".." << ceiling
        << (closed_form && range.hi > range.hi_closed
                ? " in closed form (use the integral path above that)"
                : "")
        << "; got " << spec.arity;
    throw ArityError(msg.str());
  }
}

void check_point(const FamilySpec& spec, std::span<const double> point) {
  if (static_cast<int>(point.size()) != spec.arity) {
    std::ostringstream msg;
    msg << "family '" << family_name(spec.family) << "' with arity "
        << spec.arity << " got " << point.size() << " arguments";
    throw ArityError(msg.str());
  }
  require_finite(point, "check_point");
  if (const auto bound = family_lower_bound(spec.family)) {
    for (const double v : point) {
      if (!(v > *bound)) {
        std::ostringstream msg;
        msg << "family '" << family_name(spec.family)
            << "' requires every argument > " << *bound << "; got " << v;
        throw DomainError(msg.str());
      }
    }
  }
}

double mult_beta_closed(double x, double y) {
  const std::array<double, 2> ordered{std::max(x, y), std::min(x, y)};
  return mult_beta_k_closed(ordered);
}

double mult_beta_k_closed(std::span<const double> xs) {
  const FamilySpec spec{Family::Mult, static_cast<int>(xs.size())};
  validate(spec, /*closed_form=*/true);
  check_point(spec, xs);

  const double pivot = xs.back();
  const double pivot_shifted = pivot - 1.0;
  double result = pivot_shifted;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double u = std::log((xs[i] - 1.0) / pivot_shifted);
    result *= log_ratio_factor(xs[i] - pivot, pivot_shifted, u);
  }
  return result;
}

double add1_beta(std::span<const double> xs) {
  const FamilySpec spec{Family::Add1, static_cast<int>(xs.size())};
  validate(spec, /*closed_form=*/true);
  check_point(spec, xs);
  double product = add1_coefficient(static_cast<int>(xs.size()));
  for (const double v : xs) product *= v - 1.0;
  return product;
}

double add1_coefficient(int k) {
  if (k < 2 || k > kMaxArity) {
    std::ostringstream msg;
    msg << "add1_coefficient: k " << k << " outside [2, " << kMaxArity << "]";
    throw ArityError(msg.str());
  }

  struct Cache {
    std::once_flag flags[kMaxArity + 1];
    double values[kMaxArity + 1];
  };
  static Cache cache;

  std::call_once(cache.flags[k], [k] {
    // The integrand has degree <= 2 per axis, so any Gauss order >= 2 is
    // exact; order 8 keeps the five-dimensional sum short, which keeps
    // accumulated round-off well under the 1e-10 anchor tolerance.
    QuadConfig config;
    config.cubature_order = 8;
    config.cubature_refinements = 3;
    cache.values[k] =
        integrate_cube(
            [](std::span<const double> t) {
              double prod = 1.0;
              double sum = 0.0;
              for (const double ti : t) {
                prod *= ti;
                sum += ti;
              }
              return prod * (1.0 - sum);
            },
            k - 1, config)
            .value;
  });
  return cache.values[k];
}

double add2_beta(double x, double y) {
  const std::array<double, 2> point{x, y};
  check_point(FamilySpec{Family::Add2, 2}, point);
  return 0.5 * (x + y) - 1.0;
}

double log1_beta(double x, double y) {
  const std::array<double, 2> point{x, y};
  check_point(FamilySpec{Family::Log1, 2}, point);
  return std::log(x - 1.0) * std::log(y - 1.0) / 6.0;
}

double log2_beta(double x, double y) {
  const std::array<double, 2> point{x, y};
  check_point(FamilySpec{Family::Log2, 2}, point);
  return 0.5 * (std::log(x - 1.0) + std::log(y - 1.0));
}

double sine_add_beta(double x, double y) {
  const std::array<double, 2> point{x, y};
  check_point(FamilySpec{Family::SineAdd, 2}, point);
  return 0.5 * std::sin(x + y);
}

double pendant_closed(const FamilySpec& spec, std::span<const double> point) {
  validate(spec, /*closed_form=*/true);
  check_point(spec, point);
  switch (spec.family) {
    case Family::EulerExp: return euler_beta_closed(point[0], point[1]);
    case Family::Mult:
      return spec.arity == 2 ? mult_beta_closed(point[0], point[1])
                             : mult_beta_k_closed(point);
    case Family::Add1: return add1_beta(point);
    case Family::Add2: return add2_beta(point[0], point[1]);
    case Family::Log1: return log1_beta(point[0], point[1]);
    case Family::Log2: return log2_beta(point[0], point[1]);
    case Family::SineAdd: return sine_add_beta(point[0], point[1]);
  }
  throw InvalidInput("unknown family");
}

namespace {

// Integrand over [0,1]^(arity-1); the last variable carries the dual
// weight 1 - sum(t_i), matching the two-variable t/(1-t) pattern.
double pendant_integrand(const FamilySpec& spec, std::span<const double> x,
                         std::span<const double> t) {
  const std::size_t k = x.size();
  double weight_last = 1.0;
  for (const double ti : t) weight_last -= ti;

  switch (spec.family) {
    case Family::Mult: {
      double prod = std::pow(x[k - 1] - 1.0, weight_last);
      for (std::size_t i = 0; i + 1 < k; ++i)
        prod *= std::pow(x[i] - 1.0, t[i]);
      return prod;
    }
    case Family::Add1: {
      double prod = weight_last * (x[k - 1] - 1.0);
      for (std::size_t i = 0; i + 1 < k; ++i) prod *= t[i] * (x[i] - 1.0);
      return prod;
    }
    case Family::Add2: {
      double sum = weight_last * (x[k - 1] - 1.0);
      for (std::size_t i = 0; i + 1 < k; ++i) sum += t[i] * (x[i] - 1.0);
      return sum;
    }
    case Family::Log1: {
      double prod = weight_last * std::log(x[k - 1] - 1.0);
      for (std::size_t i = 0; i + 1 < k; ++i)
        prod *= t[i] * std::log(x[i] - 1.0);
      return prod;
    }
    case Family::Log2: {
      double sum = weight_last * std::log(x[k - 1] - 1.0);
      for (std::size_t i = 0; i + 1 < k; ++i)
        sum += t[i] * std::log(x[i] - 1.0);
      return sum;
    }
    case Family::SineAdd:
      return t[0] * std::sin(x[0]) * std::cos(x[1]) +
             weight_last * std::sin(x[1]) * std::cos(x[0]);
    case Family::EulerExp:
      break;  // integrates through euler_beta_integral
  }
  throw InvalidInput("unknown family");
}

}  // namespace

QuadResult pendant_integral(const FamilySpec& spec,
                            std::span<const double> point,
                            const QuadConfig& config) {
  validate(spec);
  check_point(spec, point);
  if (spec.family == Family::EulerExp)
    return euler_beta_integral(point[0], point[1], config);
  if (spec.arity == 2) {
    return integrate_1d(
        [&](double t) {
          return pendant_integrand(spec, point, std::span<const double>(&t, 1));
        },
        config);
  }
  return integrate_cube(
      [&](std::span<const double> t) { return pendant_integrand(spec, point, t); },
      spec.arity - 1, config);
}

}  // namespace betapend
