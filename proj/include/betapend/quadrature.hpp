#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "betapend/errors.hpp"

namespace betapend {

// Result of a numerical integration.
struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // >= 0
  std::int64_t evaluations = 0;     // >= 1 on success
};

// Tolerances and budgets for the integration engines.
struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 200;   // adaptive 1-D split budget
  int cubature_order = 32;      // Gauss order per axis at the finest level
  int cubature_refinements = 3; // number of nested refinement levels
};

// Throws InvalidInput if the config violates its invariants.
void validate(const QuadConfig& config);

// Gauss-Legendre nodes and weights on [0, 1].
//
// Nodes are strictly inside (0, 1), weights are positive and sum to 1.
// The rule is exact for polynomials of degree <= 2*order - 1.
// Throws InvalidOrder unless 2 <= order <= 64.
std::vector<std::pair<double, double>> gauss_nodes(int order);

// Integrand called as f(t, 1 - t); both arguments carry full relative
// precision, which an integrand singular at t = 1 needs (computing 1 - t
// from a rounded t loses every significant digit near the endpoint).
using Integrand1D = std::function<double(double, double)>;

// Adaptive integration of f over (0, 1).
//
// The interval is split at 1/2 and both halves are mapped by the
// substitutions t = u^2 and 1 - t = v^2, which regularizes endpoint power
// singularities t^a, (1-t)^b with a, b > -1.  Each subinterval is measured
// with an embedded 7/15-point Gauss-Kronrod pair and the worst interval is
// bisected until the summed error estimate meets
// max(rel_tol*|integral|, abs_tol).
//
// Throws NonConvergence when max_subdivisions is exhausted first, and
// InvalidInput if f returns a non-finite value at an interior node.
QuadResult integrate_1d(const Integrand1D& f, const QuadConfig& config = {});

// Convenience wrapper for integrands that only need t.
QuadResult integrate_1d(const std::function<double(double)>& f,
                        const QuadConfig& config = {});

// Tensor-product Gauss-Legendre cubature of f over [0, 1]^d, 1 <= d <= 6.
//
// The rule uses cubature_order points per axis; the error estimate is the
// difference between the finest and next-finest refinement level (orders
// halve per level).  Evaluation order is fixed, so results are bit-stable.
//
// Throws DimensionTooLarge for d > 6 and InvalidInput on non-finite
// integrand values.
QuadResult integrate_cube(const std::function<double(std::span<const double>)>& f,
                          int dim, const QuadConfig& config = {});

}  // namespace betapend
