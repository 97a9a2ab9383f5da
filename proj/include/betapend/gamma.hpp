#pragma once

#include "betapend/quadrature.hpp"

namespace betapend {

// Natural log of the gamma function for x > 0.
//
// Lanczos approximation (g = 7, 9 coefficients), relative accuracy better
// than 1e-13 on (0, 170].  Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

// Euler Beta via Gamma(x)Gamma(y)/Gamma(x+y), computed in log space so the
// quotient never overflows.  Symmetric in (x, y); throws DomainError on
// non-positive arguments.
double euler_beta_closed(double x, double y);

// Euler Beta by its defining integral over (0, 1); the endpoint
// singularities for x < 1 or y < 1 are handled by integrate_1d.
QuadResult euler_beta_integral(double x, double y,
                               const QuadConfig& config = {});

}  // namespace betapend
