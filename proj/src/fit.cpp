#include "betapend/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "betapend/gamma.hpp"
#include "betapend/sampling.hpp"

namespace betapend {

namespace {

bool combines_by_sum(QuotientClass quotient) {
  return quotient == QuotientClass::ExpQuotient ||
         quotient == QuotientClass::AddQuotient;
}

bool is_product_form(QuotientClass quotient) {
  return quotient == QuotientClass::ExpQuotient ||
         quotient == QuotientClass::MultQuotient;
}

double combine(QuotientClass quotient, double x, double y) {
  return combines_by_sum(quotient) ? x + y : x * y;
}

// Lattice of log-f unknowns.  Grid coordinates are plain x for the sum
// classes and log x for the product classes, which turns both combining
// rules into coordinate addition.
struct Lattice {
  bool geometric;
  double lo_coord;   // coordinate of unknown index 0
  double step;
  int size;          // number of unknowns
  int grid_offset;   // index of the problem's first grid node

  double coord_of(double x) const { return geometric ? std::log(x) : x; }
  double node_x(int index) const {
    const double c = lo_coord + step * index;
    return geometric ? std::exp(c) : c;
  }
};

Lattice build_lattice(const FitProblem& problem) {
  const bool geometric = !combines_by_sum(problem.quotient);
  if (geometric && !(problem.grid_lo > 0.0))
    throw DomainError(
        "fit_quotient: a product-combining quotient needs a positive grid "
        "(geometric spacing)");

  Lattice lat;
  lat.geometric = geometric;
  const double lo = geometric ? std::log(problem.grid_lo) : problem.grid_lo;
  const double hi = geometric ? std::log(problem.grid_hi) : problem.grid_hi;
  lat.step = (hi - lo) / (problem.grid_n - 1);

  // Combined coordinates of grid pairs span [2*lo, 2*hi]; extend the
  // lattice so interpolation never becomes extrapolation.
  const double need_lo = std::min(lo, 2.0 * lo);
  const double need_hi = std::max(hi, 2.0 * hi);
  int below = static_cast<int>(std::ceil((lo - need_lo) / lat.step - 1e-9));
  int above = static_cast<int>(
      std::ceil((need_hi - hi) / lat.step - 1e-9));
  lat.grid_offset = below;
  lat.lo_coord = lo - below * lat.step;
  lat.size = below + problem.grid_n + above;
  return lat;
}

// One least-squares term: the pair, its target value, and the sparse
// structure of the quotient's dependence on u.
struct PairTerm {
  double x, y;
  double target;
  int ix, iy;          // unknown indices of the pair components
  int ic0, ic1;        // bracketing indices for the combined argument
  double w0, w1;       // interpolation weights (w0 + w1 = 1)
};

double interpolated_u(const std::vector<double>& u, const PairTerm& term) {
  return term.w0 * u[static_cast<std::size_t>(term.ic0)] +
         term.w1 * u[static_cast<std::size_t>(term.ic1)];
}

// Quotient value and its sparse gradient wrt u, accumulated per index.
template <typename Emit>
double quotient_and_gradient(const PairTerm& term, QuotientClass quotient,
                             const std::vector<double>& u, Emit&& emit) {
  const double ux = u[static_cast<std::size_t>(term.ix)];
  const double uy = u[static_cast<std::size_t>(term.iy)];
  const double uc = interpolated_u(u, term);
  if (is_product_form(quotient)) {
    const double q = std::exp(ux + uy - uc);
    emit(term.ix, q);
    emit(term.iy, q);
    emit(term.ic0, -term.w0 * q);
    emit(term.ic1, -term.w1 * q);
    return q;
  }
  const double ex = std::exp(ux);
  const double ey = std::exp(uy);
  const double scale = std::exp(-uc);
  const double q = (ex + ey) * scale;
  emit(term.ix, ex * scale);
  emit(term.iy, ey * scale);
  emit(term.ic0, -term.w0 * q);
  emit(term.ic1, -term.w1 * q);
  return q;
}

double objective(const std::vector<PairTerm>& terms, QuotientClass quotient,
                 const std::vector<double>& u) {
  double sum = 0.0;
  for (const PairTerm& term : terms) {
    const double q = quotient_and_gradient(term, quotient, u,
                                           [](int, double) {});
    const double r = term.target - q;
    sum += r * r;
  }
  return sum;
}

// Dense Cholesky solve of (A + damping*I) delta = rhs; A is symmetric
// positive semidefinite.
std::vector<double> solve_damped(std::vector<double> a, std::vector<double> rhs,
                                 int n, double damping) {
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] += damping;
  // LL^T factorization in place.
  for (int j = 0; j < n; ++j) {
    double d = a[static_cast<std::size_t>(j * n + j)];
    for (int k = 0; k < j; ++k) {
      const double l = a[static_cast<std::size_t>(j * n + k)];
      d -= l * l;
    }
    d = std::sqrt(std::max(d, 1e-300));
    a[static_cast<std::size_t>(j * n + j)] = d;
    for (int i = j + 1; i < n; ++i) {
      double s = a[static_cast<std::size_t>(i * n + j)];
      for (int k = 0; k < j; ++k)
        s -= a[static_cast<std::size_t>(i * n + k)] *
             a[static_cast<std::size_t>(j * n + k)];
      a[static_cast<std::size_t>(i * n + j)] = s / d;
    }
  }
  // Forward then backward substitution.
  for (int i = 0; i < n; ++i) {
    double s = rhs[static_cast<std::size_t>(i)];
    for (int k = 0; k < i; ++k)
      s -= a[static_cast<std::size_t>(i * n + k)] * rhs[static_cast<std::size_t>(k)];
    rhs[static_cast<std::size_t>(i)] = s / a[static_cast<std::size_t>(i * n + i)];
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k)
      s -= a[static_cast<std::size_t>(k * n + i)] * rhs[static_cast<std::size_t>(k)];
    rhs[static_cast<std::size_t>(i)] = s / a[static_cast<std::size_t>(i * n + i)];
  }
  return rhs;
}

void validate(const FitProblem& problem) {
  if (problem.target.arity != 2)
    throw ArityError("fit_quotient: target must have arity 2");
  validate(problem.target, /*closed_form=*/true);
  if (problem.grid_n < 8)
    throw InvalidInput("fit_quotient: grid_n must be >= 8");
  if (!(problem.grid_hi > problem.grid_lo))
    throw InvalidInput("fit_quotient: grid_hi must exceed grid_lo");
  if (const auto bound = family_lower_bound(problem.target.family)) {
    if (!(problem.grid_lo > *bound)) {
      std::ostringstream msg;
      msg << "fit_quotient: grid_lo must exceed the target's open bound "
          << *bound;
      throw DomainError(msg.str());
    }
  }
  if (problem.max_iters < 1)
    throw InvalidInput("fit_quotient: max_iters must be >= 1");
  if (!(problem.tol > 0.0))
    throw InvalidInput("fit_quotient: tol must be positive");
  if (!(problem.damping_init > 0.0))
    throw InvalidInput("fit_quotient: damping_init must be positive");
}

}  // namespace

std::string quotient_name(QuotientClass quotient) {
  switch (quotient) {
    case QuotientClass::ExpQuotient: return "exp";
    case QuotientClass::MultQuotient: return "mult";
    case QuotientClass::AddQuotient: return "add";
    case QuotientClass::LogQuotient: return "log";
  }
  throw InvalidInput("unknown quotient class");
}

double quotient_residual(const FamilySpec& target, QuotientClass quotient,
                         const std::function<double(double)>& f, double x,
                         double y) {
  const std::array<double, 2> point{x, y};
  const double target_value = pendant_closed(target, point);

  const double fx = f(x);
  const double fy = f(y);
  const double fc = f(combine(quotient, x, y));
  if (is_product_form(quotient) && (fx <= 0.0 || fy <= 0.0 || fc <= 0.0))
    throw InvalidInput(
        "quotient_residual: f must be positive for a product-form quotient");

  double q;
  switch (quotient) {
    case QuotientClass::ExpQuotient:
    case QuotientClass::MultQuotient:
      q = fx * fy / fc;
      break;
    default:
      q = (fx + fy) / fc;
      break;
  }
  return target_value - q;
}

FitReport fit_quotient(const FitProblem& problem) {
  return fit_quotient(problem, [&problem](double x, double y) {
    const std::array<double, 2> point{x, y};
    return pendant_closed(problem.target, point);
  });
}

FitReport fit_quotient(const FitProblem& problem,
                       const std::function<double(double, double)>& target) {
  validate(problem);
  const Lattice lat = build_lattice(problem);

  // Unordered grid pairs; diagonal pairs enter with unit weight.
  std::vector<PairTerm> terms;
  for (int i = 0; i < problem.grid_n; ++i) {
    for (int j = i; j < problem.grid_n; ++j) {
      PairTerm term;
      term.ix = lat.grid_offset + i;
      term.iy = lat.grid_offset + j;
      term.x = lat.node_x(term.ix);
      term.y = lat.node_x(term.iy);
      term.target = target(term.x, term.y);

      const double c = lat.coord_of(combine(problem.quotient, term.x, term.y));
      double pos = (c - lat.lo_coord) / lat.step;
      pos = std::clamp(pos, 0.0, static_cast<double>(lat.size - 1));
      int i0 = std::min(static_cast<int>(pos), lat.size - 2);
      term.ic0 = i0;
      term.ic1 = i0 + 1;
      term.w1 = pos - i0;
      term.w0 = 1.0 - term.w1;
      terms.push_back(term);
    }
  }
  if (static_cast<int>(terms.size()) < problem.grid_n)
    throw DegenerateProblem("fit_quotient: fewer admissible pairs than nodes");

  // Gauge: pin u at the problem's first and last grid nodes to zero.
  const int pin0 = lat.grid_offset;
  const int pin1 = lat.grid_offset + problem.grid_n - 1;
  std::vector<int> column(static_cast<std::size_t>(lat.size), -1);
  int n_free = 0;
  for (int i = 0; i < lat.size; ++i)
    if (i != pin0 && i != pin1) column[static_cast<std::size_t>(i)] = n_free++;

  std::vector<double> u(static_cast<std::size_t>(lat.size), 0.0);
  double damping = problem.damping_init;
  double current = objective(terms, problem.quotient, u);

  FitReport report;
  report.objective_trace.push_back(current);
  report.converged = false;

  std::vector<double> normal(static_cast<std::size_t>(n_free * n_free));
  std::vector<double> rhs(static_cast<std::size_t>(n_free));
  std::vector<std::pair<int, double>> row;
  row.reserve(4);

  int iter = 0;
  while (iter < problem.max_iters) {
    ++iter;
    std::fill(normal.begin(), normal.end(), 0.0);
    std::fill(rhs.begin(), rhs.end(), 0.0);
    for (const PairTerm& term : terms) {
      row.clear();
      const double q = quotient_and_gradient(
          term, problem.quotient, u, [&](int index, double dq) {
            // residual r = target - q, so dr/du = -dq/du
            const int col = column[static_cast<std::size_t>(index)];
            if (col < 0) return;
            for (auto& [existing, value] : row) {
              if (existing == col) {
                value -= dq;
                return;
              }
            }
            row.emplace_back(col, -dq);
          });
      const double r = term.target - q;
      for (const auto& [ci, vi] : row) {
        rhs[static_cast<std::size_t>(ci)] -= vi * r;  // -J^T r
        for (const auto& [cj, vj] : row) {
          if (cj <= ci)
            normal[static_cast<std::size_t>(ci * n_free + cj)] += vi * vj;
        }
      }
    }
    for (int i = 0; i < n_free; ++i)
      for (int j = i + 1; j < n_free; ++j)
        normal[static_cast<std::size_t>(i * n_free + j)] =
            normal[static_cast<std::size_t>(j * n_free + i)];

    const std::vector<double> delta = solve_damped(normal, rhs, n_free, damping);
    std::vector<double> trial = u;
    for (int i = 0; i < lat.size; ++i) {
      const int col = column[static_cast<std::size_t>(i)];
      if (col >= 0) trial[static_cast<std::size_t>(i)] += delta[static_cast<std::size_t>(col)];
    }
    const double trial_objective = objective(terms, problem.quotient, trial);

    if (trial_objective < current) {
      const double decrease = current - trial_objective;
      u = std::move(trial);
      current = trial_objective;
      report.objective_trace.push_back(current);
      damping = std::max(damping * 0.5, 1e-14);
      if (decrease < problem.tol) {
        report.converged = true;
        break;
      }
    } else {
      damping *= 2.0;
      if (damping > 1e12) break;  // no downhill direction left
    }
  }
  report.iterations = iter;

  report.nodes.resize(static_cast<std::size_t>(problem.grid_n));
  report.logf_values.resize(static_cast<std::size_t>(problem.grid_n));
  for (int i = 0; i < problem.grid_n; ++i) {
    report.nodes[static_cast<std::size_t>(i)] = lat.node_x(lat.grid_offset + i);
    report.logf_values[static_cast<std::size_t>(i)] =
        u[static_cast<std::size_t>(lat.grid_offset + i)];
  }

  double sum_sq = 0.0;
  double max_abs = 0.0;
  for (const PairTerm& term : terms) {
    const double q =
        quotient_and_gradient(term, problem.quotient, u, [](int, double) {});
    const double r = term.target - q;
    sum_sq += r * r;
    max_abs = std::max(max_abs, std::abs(r));
  }
  report.rms_residual = std::sqrt(sum_sq / static_cast<double>(terms.size()));
  report.max_residual = max_abs;

  std::ostringstream gauge;
  gauge << "log f pinned to 0 at the grid endpoints x="
        << report.nodes.front() << " and x=" << report.nodes.back();
  report.gauge = gauge.str();
  return report;
}

std::string to_json(const FitReport& report) {
  nlohmann::json doc;
  doc["nodes"] = report.nodes;
  doc["logf_values"] = report.logf_values;
  doc["rms_residual"] = report.rms_residual;
  doc["max_residual"] = report.max_residual;
  doc["iterations"] = report.iterations;
  doc["converged"] = report.converged;
  doc["gauge"] = report.gauge;
  doc["objective_trace"] = report.objective_trace;
  return doc.dump(2);
}

double euler_identity_deviation(double x, double y) {
  QuadConfig config;
  config.abs_tol = 1e-14;  // headroom: Beta drops below 1e-6 on [0.5, 10]^2
  const double closed = euler_beta_closed(x, y);
  const QuadResult integral = euler_beta_integral(x, y, config);
  return std::abs(integral.value - closed) / closed;
}

double verify_euler_identity(int samples, std::uint64_t seed) {
  if (samples < 1)
    throw InvalidInput("verify_euler_identity: samples must be >= 1");
  QuasiRandomSequence sequence(2, seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto& point = sequence.next();
    const double x = 0.5 + 9.5 * point[0];
    const double y = 0.5 + 9.5 * point[1];
    worst = std::max(worst, euler_identity_deviation(x, y));
  }
  return worst;
}

}  // namespace betapend
