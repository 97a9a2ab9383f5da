#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betapend/quadrature.hpp"

namespace betapend {

// The Beta-type function families.  Each one integrates the product or sum
// of a dual pair of Cauchy-equation solutions over the unit interval (or
// unit cube for more than two variables):
//
//   EulerExp  B(x,y)   = Int t^(x-1) (1-t)^(y-1) dt          on (0,inf)^2
//   Mult      M(x,y)   = Int (x-1)^t (y-1)^(1-t) dt          on (1,inf)^2
//   Add1      A1(x,y)  = Int t(x-1) * (1-t)(y-1) dt          on R^2
//   Add2      A2(x,y)  = Int [t(x-1) + (1-t)(y-1)] dt        on R^2
//   Log1      L1(x,y)  = Int t log(x-1) * (1-t) log(y-1) dt  on (1,inf)^2
//   Log2      L2(x,y)  = Int [t log(x-1) + (1-t) log(y-1)]dt on (1,inf)^2
//   SineAdd   S(x,y)   = Int [t sin x cos y + (1-t) sin y cos x] dt on R^2
enum class Family { EulerExp, Mult, Add1, Add2, Log1, Log2, SineAdd };

// A family together with the number of variables.  Mult and Add1 support
// arities 2..6 on both evaluation paths; Add2, Log1 and Log2 extend past
// arity 2 through the integral path only; EulerExp and SineAdd are
// two-variable functions.
struct FamilySpec {
  Family family = Family::EulerExp;
  int arity = 2;
};

constexpr int kMaxArity = 6;

// Short lowercase name used by the CLI ("euler", "mult", ...).
std::string family_name(Family family);
std::optional<Family> family_from_name(const std::string& name);

// Open lower bound every coordinate must strictly exceed, when the family
// has one (EulerExp: 0; Mult/Log1/Log2: 1; otherwise unconstrained).
std::optional<double> family_lower_bound(Family family);

// Throws ArityError when the spec's arity is outside the family's range.
// `closed_form` additionally restricts Add2/Log1/Log2 to arity 2.
void validate(const FamilySpec& spec, bool closed_form = false);

// Throws on a point that violates the spec: ArityError on size mismatch,
// InvalidInput on non-finite coordinates, DomainError below the family's
// open bound (the message names the bound).
void check_point(const FamilySpec& spec, std::span<const double> point);

// Multiplicative family, two variables: (x-y)/log((x-1)/(y-1)) away from
// the diagonal and x-1 on it; equal to the logarithmic mean of (x-1, y-1).
// Evaluation is symmetric under argument swap.
double mult_beta_closed(double x, double y);

// Multiplicative family of k = 2..6 variables:
//   (x_k - 1) * prod_i (x_i - x_k) / ((x_k - 1) log((x_i-1)/(x_k-1)))
// with each factor replaced by its limit 1 when x_i = x_k.
double mult_beta_k_closed(std::span<const double> xs);

// First additive family of k = 2..6 variables: c_k * prod (x_i - 1).
double add1_beta(std::span<const double> xs);

// Coefficient c_k = Int over [0,1]^(k-1) of t_1...t_(k-1)(1 - sum t_i),
// computed by cubature on first use and cached.
double add1_coefficient(int k);

// Second additive family: (x + y)/2 - 1, the arithmetic mean of the
// shifted arguments.
double add2_beta(double x, double y);

// Logarithmic families: (1/6) log(x-1) log(y-1) and the arithmetic mean of
// the shifted logs.
double log1_beta(double x, double y);
double log2_beta(double x, double y);

// Sine-addition family: sin(x+y)/2.
double sine_add_beta(double x, double y);

// Closed-form value of any family at a point of matching arity.  Throws
// ArityError for combinations that only exist through the integral path.
double pendant_closed(const FamilySpec& spec, std::span<const double> point);

// Defining integral of any family: integrate_1d over [0,1] for arity 2,
// integrate_cube over [0,1]^(arity-1) above that.
QuadResult pendant_integral(const FamilySpec& spec,
                            std::span<const double> point,
                            const QuadConfig& config = {});

}  // namespace betapend
