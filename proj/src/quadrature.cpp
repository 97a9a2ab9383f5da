#include "betapend/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace betapend {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
// (abscissae and weights from Piessens et al., QUADPACK).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Transformed integrand halves: side 0 covers t in (0, 1/2] through
// t = u^2, side 1 covers t in [1/2, 1) through t = 1 - v^2.  Both live on
// [0, 1/sqrt(2)].  The smaller of t and 1 - t is the exact square u^2, so
// the integrand sees both endpoint distances at full precision.
struct HalfIntegrand {
  const Integrand1D* f;
  mutable std::int64_t evaluations = 0;

  double operator()(int side, double u) const {
    const double near = u * u;
    const double far = 1.0 - near;
    const double t = (side == 0) ? near : far;
    const double fv = (side == 0) ? (*f)(near, far) : (*f)(far, near);
    ++evaluations;
    if (!std::isfinite(fv)) {
      std::ostringstream msg;
      msg << "integrand returned non-finite value at t=" << t;
      throw InvalidInput(msg.str());
    }
    return 2.0 * u * fv;
  }
};

struct Panel {
  int side;
  double a, b;
  double value;
  double error;
};

// Worst error first; ties broken by position so the pop order is a
// strict total order.
struct PanelOrder {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    if (lhs.side != rhs.side) return lhs.side > rhs.side;
    return lhs.a > rhs.a;
  }
};

Panel measure(const HalfIntegrand& g, int side, double a, double b) {
  const double center = 0.5 * (a + b);
  const double halfwidth = 0.5 * (b - a);

  const double fc = g(side, center);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = halfwidth * kXgk[j];
    const double f1 = g(side, center - dx);
    const double f2 = g(side, center + dx);
    const double fsum = f1 + f2;
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
  }
  const double value = resk * halfwidth;
  // |K15 - G7| bounds the Gauss error and overstates the Kronrod error;
  // the floor keeps the estimate honest once round-off dominates.
  const double err = std::max(std::abs((resk - resg) * halfwidth),
                              50.0 * kEps * resabs * halfwidth);
  return Panel{side, a, b, value, err};
}

// Index odometer over a d-dimensional tensor grid, fixed iteration order.
template <typename Body>
void for_each_multi_index(int dim, int extent, Body&& body) {
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  for (;;) {
    body(idx);
    int axis = dim - 1;
    while (axis >= 0 && ++idx[static_cast<std::size_t>(axis)] == extent) {
      idx[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
}

}  // namespace

void validate(const QuadConfig& config) {
  if (!(config.rel_tol > 0.0) || !std::isfinite(config.rel_tol))
    throw InvalidInput("QuadConfig: rel_tol must be positive");
  if (!(config.abs_tol > 0.0) || !std::isfinite(config.abs_tol))
    throw InvalidInput("QuadConfig: abs_tol must be positive");
  if (config.max_subdivisions < 1)
    throw InvalidInput("QuadConfig: max_subdivisions must be >= 1");
  if (config.cubature_order < 2 || config.cubature_order > 64)
    throw InvalidInput("QuadConfig: cubature_order must be in [2, 64]");
  if (config.cubature_refinements < 1)
    throw InvalidInput("QuadConfig: cubature_refinements must be >= 1");
}

std::vector<std::pair<double, double>> gauss_nodes(int order) {
  if (order < 2 || order > 64) {
    std::ostringstream msg;
    msg << "gauss_nodes: order " << order << " outside [2, 64]";
    throw InvalidOrder(msg.str());
  }

  const int n = order;
  std::vector<std::pair<double, double>> rule(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Tricomi initial guess.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    // Map from [-1, 1] to [0, 1]; exploit root symmetry.
    rule[static_cast<std::size_t>(i)] = {0.5 * (1.0 - z), 0.5 * w};
    rule[static_cast<std::size_t>(n - 1 - i)] = {0.5 * (1.0 + z), 0.5 * w};
  }
  return rule;
}

QuadResult integrate_1d(const std::function<double(double)>& f,
                        const QuadConfig& config) {
  return integrate_1d(Integrand1D([&f](double t, double) { return f(t); }),
                      config);
}

QuadResult integrate_1d(const Integrand1D& f, const QuadConfig& config) {
  validate(config);

  const HalfIntegrand g{&f};
  const double top = 1.0 / std::sqrt(2.0);

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  double total = 0.0;
  double total_err = 0.0;
  auto push = [&](const Panel& p) {
    total += p.value;
    total_err += p.error;
    queue.push(p);
  };

  push(measure(g, 0, 0.0, top));
  push(measure(g, 1, 0.0, top));

  int splits = 0;
  auto tolerance = [&] {
    return std::max(config.rel_tol * std::abs(total), config.abs_tol);
  };
  while (total_err > tolerance()) {
    if (splits >= config.max_subdivisions) {
      std::ostringstream msg;
      msg << "integrate_1d: error estimate " << total_err
          << " above tolerance " << tolerance() << " after "
          << config.max_subdivisions << " subdivisions";
      throw NonConvergence(msg.str());
    }
    const Panel worst = queue.top();
    queue.pop();
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    push(measure(g, worst.side, worst.a, mid));
    push(measure(g, worst.side, mid, worst.b));
    ++splits;
  }

  return QuadResult{total, total_err, g.evaluations};
}

QuadResult integrate_cube(
    const std::function<double(std::span<const double>)>& f, int dim,
    const QuadConfig& config) {
  validate(config);
  if (dim > 6) {
    std::ostringstream msg;
    msg << "integrate_cube: dimension " << dim << " above the ceiling 6";
    throw DimensionTooLarge(msg.str());
  }
  if (dim < 1) throw InvalidInput("integrate_cube: dimension must be >= 1");

  // Refinement ladder: orders halve from the finest level down.
  std::vector<int> orders(static_cast<std::size_t>(config.cubature_refinements));
  orders.back() = config.cubature_order;
  for (int i = static_cast<int>(orders.size()) - 2; i >= 0; --i)
    orders[static_cast<std::size_t>(i)] =
        std::max(2, orders[static_cast<std::size_t>(i + 1)] / 2);

  std::int64_t evaluations = 0;
  std::vector<double> level_values;
  level_values.reserve(orders.size());
  std::vector<double> point(static_cast<std::size_t>(dim));
  for (const int order : orders) {
    const auto rule = gauss_nodes(order);
    double sum = 0.0;
    for_each_multi_index(dim, order, [&](const std::vector<int>& idx) {
      double weight = 1.0;
      for (int axis = 0; axis < dim; ++axis) {
        const auto& [node, w] = rule[static_cast<std::size_t>(
            idx[static_cast<std::size_t>(axis)])];
        point[static_cast<std::size_t>(axis)] = node;
        weight *= w;
      }
      const double fv = f(point);
      ++evaluations;
      if (!std::isfinite(fv))
        throw InvalidInput("integrate_cube: integrand returned non-finite value");
      sum += weight * fv;
    });
    level_values.push_back(sum);
  }

  const double value = level_values.back();
  double err = 0.0;
  if (level_values.size() >= 2)
    err = std::abs(value - level_values[level_values.size() - 2]);
  return QuadResult{value, err, evaluations};
}

}  // namespace betapend
