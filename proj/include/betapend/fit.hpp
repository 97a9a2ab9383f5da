#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "betapend/pendants.hpp"

namespace betapend {

// The four Cauchy quotient shapes.  Exp and Add combine arguments by x+y,
// Mult and Log by x*y.
enum class QuotientClass {
  ExpQuotient,   // f(x) f(y) / f(x+y)
  MultQuotient,  // f(x) f(y) / f(x*y)
  AddQuotient,   // (f(x) + f(y)) / f(x+y)
  LogQuotient,   // (f(x) + f(y)) / f(x*y)
};

std::string quotient_name(QuotientClass quotient);

// Least-squares search for a positive f whose Cauchy quotient reproduces a
// two-variable family on a grid.
//
// The unknowns are u_i = log f at the grid nodes (arithmetic spacing for
// the x+y classes, geometric for the x*y classes, so combined arguments
// land on or between nodes of the same lattice).  Internally the lattice
// is extended just far enough to cover every pair's combined argument;
// f there is obtained by linear interpolation of u in the grid coordinate.
struct FitProblem {
  FamilySpec target;  // arity 2
  QuotientClass quotient = QuotientClass::ExpQuotient;
  double grid_lo = 0.0;
  double grid_hi = 0.0;
  int grid_n = 0;
  int max_iters = 500;
  double tol = 1e-12;
  double damping_init = 1e-3;
};

struct FitReport {
  std::vector<double> nodes;        // grid node coordinates
  std::vector<double> logf_values;  // fitted u at the grid nodes
  double rms_residual = 0.0;
  double max_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string gauge;  // which two nodes are pinned, and at what value
  std::vector<double> objective_trace;  // objective after each accepted step
};

// target(x, y) minus the quotient of f at (x, y).  Throws DomainError when
// a point leaves the target's domain and InvalidInput when f is
// non-positive where the quotient needs a positive value.
double quotient_residual(const FamilySpec& target, QuotientClass quotient,
                         const std::function<double(double)>& f, double x,
                         double y);

// Damped Gauss-Newton fit of log f; see FitProblem.  The report is
// returned with converged = false when max_iters runs out first.
FitReport fit_quotient(const FitProblem& problem);

// Same solver against an arbitrary two-variable target, which makes it
// possible to pose problems whose exact solution is known.
FitReport fit_quotient(const FitProblem& problem,
                       const std::function<double(double, double)>& target);

// FitReport as a JSON document (field names match the struct).
std::string to_json(const FitReport& report);

// Max over `samples` quasi-random pairs in [0.5, 10]^2 of the relative gap
// between the Euler Beta integral and its Gamma-quotient closed form.
// Deterministic for a fixed seed; samples must be >= 1.
double verify_euler_identity(int samples, std::uint64_t seed);

// Relative gap |integral - closed| / closed at one pair.
double euler_identity_deviation(double x, double y);

}  // namespace betapend
