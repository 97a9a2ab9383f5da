// Acceptance suite: one test case per release criterion, each printing a
// single PASS/FAIL line.  Run directly or through ctest (-R acceptance).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "betapend/fit.hpp"
#include "betapend/gamma.hpp"
#include "betapend/pendants.hpp"
#include "betapend/sampling.hpp"
#include "cli_harness.hpp"

using namespace betapend;

namespace {

void report(int index, const char* name, bool ok) {
  std::printf("[acceptance] %2d %-42s %s\n", index, name, ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion ", index, " (", name, ")");
}

double affine_free_max_deviation(const std::vector<double>& values,
                                 const std::vector<double>& reference) {
  const std::size_t n = values.size();
  double sum_i = 0.0, sum_ii = 0.0, sum_d = 0.0, sum_id = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = values[i] - reference[i];
    sum_i += static_cast<double>(i);
    sum_ii += static_cast<double>(i) * static_cast<double>(i);
    sum_d += d;
    sum_id += static_cast<double>(i) * d;
  }
  const double count = static_cast<double>(n);
  const double det = count * sum_ii - sum_i * sum_i;
  const double b = (count * sum_id - sum_i * sum_d) / det;
  const double a = (sum_d - b * sum_i) / count;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, std::abs(values[i] - reference[i] -
                                     (a + b * static_cast<double>(i))));
  return worst;
}

}  // namespace

TEST_CASE("1. Euler Beta identity: integral vs Gamma quotient") {
  const double worst = verify_euler_identity(100, 42);
  report(1, "euler identity, 100 pairs, rel 1e-8", worst <= 1e-8);
}

TEST_CASE("2. multiplicative closed form vs integral, plus diagonal") {
  QuasiRandomSequence seq(2, 7);
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    const auto& u = seq.next();
    const std::array<double, 2> point{1.1 + 18.9 * u[0], 1.1 + 18.9 * u[1]};
    const double closed = mult_beta_closed(point[0], point[1]);
    const QuadResult integral =
        pendant_integral(FamilySpec{Family::Mult, 2}, point);
    ok = ok && std::abs(closed - integral.value) <=
                   std::max(1e-8 * std::abs(closed), 1e-9);
  }
  for (const double x : {1.5, 2.0, 5.0, 17.0})
    ok = ok && std::abs(mult_beta_closed(x, x) - (x - 1.0)) <= 1e-12 * (x - 1.0);
  report(2, "mult closed vs integral + diagonal", ok);
}

TEST_CASE("3. additive coefficient table") {
  const double expected[] = {1.0 / 6.0, -1.0 / 12.0, -1.0 / 8.0, -5.0 / 48.0};
  bool ok = true;
  for (int k = 2; k <= 5; ++k)
    ok = ok && std::abs(add1_coefficient(k) - expected[k - 2]) <= 1e-10;
  report(3, "coefficients 1/6, -1/12, -1/8, -5/48", ok);
}

TEST_CASE("4. arithmetic-mean identification on a 20x20 grid") {
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double x = -5.0 + 10.0 * i / 19.0;
      const double y = -5.0 + 10.0 * j / 19.0;
      ok = ok && std::abs(add2_beta(x, y) - (0.5 * (x + y) - 1.0)) <= 1e-14;
    }
  }
  report(4, "add2 equals the shifted arithmetic mean", ok);
}

TEST_CASE("5. logarithmic closed forms vs integrals and the mean identity") {
  QuasiRandomSequence seq(2, 19);
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    const auto& u = seq.next();
    const std::array<double, 2> point{1.1 + 48.9 * u[0], 1.1 + 48.9 * u[1]};
    const double l1 = log1_beta(point[0], point[1]);
    const double l2 = log2_beta(point[0], point[1]);
    ok = ok &&
         std::abs(l1 - pendant_integral(FamilySpec{Family::Log1, 2}, point)
                           .value) <= 1e-10;
    ok = ok &&
         std::abs(l2 - pendant_integral(FamilySpec{Family::Log2, 2}, point)
                           .value) <= 1e-10;
    const double geometric = std::sqrt((point[0] - 1.0) * (point[1] - 1.0));
    ok = ok && std::abs(std::exp(l2) - geometric) <= 1e-12 * geometric;
  }
  report(5, "log closed forms + geometric-mean identity", ok);
}

TEST_CASE("6. three-variable multiplicative closed form vs cubature") {
  QuasiRandomSequence seq(3, 11);
  std::vector<std::array<double, 3>> triples;
  for (int i = 0; i < 19; ++i) {
    const auto& u = seq.next();
    triples.push_back({1.5 + 4.5 * u[0], 1.5 + 4.5 * u[1], 1.5 + 4.5 * u[2]});
  }
  triples.push_back({2.5, 4.0, 2.5});  // x = z exercises the limit factor
  bool ok = true;
  for (const auto& xs : triples) {
    const double closed = mult_beta_k_closed(xs);
    const QuadResult cube = pendant_integral(FamilySpec{Family::Mult, 3}, xs);
    ok = ok && std::abs(closed - cube.value) <= 1e-7 * std::abs(closed);
  }
  report(6, "mult_3 closed vs cubature incl. x = z", ok);
}

TEST_CASE("7. sine-addition closed form vs integral") {
  QuasiRandomSequence seq(2, 13);
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    const auto& u = seq.next();
    const std::array<double, 2> point{
        -std::numbers::pi + 2.0 * std::numbers::pi * u[0],
        -std::numbers::pi + 2.0 * std::numbers::pi * u[1]};
    const double closed = sine_add_beta(point[0], point[1]);
    const QuadResult integral =
        pendant_integral(FamilySpec{Family::SineAdd, 2}, point);
    ok = ok && std::abs(closed - integral.value) <= 1e-10;
  }
  report(7, "sine pendant closed vs integral", ok);
}

TEST_CASE("8. fitter recovers log Gamma on [1, 2]") {
  FitProblem problem;
  problem.target = FamilySpec{Family::EulerExp, 2};
  problem.quotient = QuotientClass::ExpQuotient;
  problem.grid_lo = 1.0;
  problem.grid_hi = 2.0;
  problem.grid_n = 16;
  const FitReport result = fit_quotient(problem);

  std::vector<double> reference;
  for (const double x : result.nodes) reference.push_back(log_gamma(x));
  const bool ok =
      result.rms_residual <= 1e-6 &&
      affine_free_max_deviation(result.logf_values, reference) <= 1e-5;
  report(8, "fit recovery of log Gamma", ok);
}

TEST_CASE("9. logarithmic-mean bounds over 1000 pairs") {
  QuasiRandomSequence seq(2, 29);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const auto& u = seq.next();
    const double x = 1.001 + 39.0 * u[0];
    const double y = 1.001 + 39.0 * u[1];
    const double m = mult_beta_closed(x, y);
    ok = ok && m >= std::min(x, y) - 1.0 && m <= std::max(x, y) - 1.0;
    if (std::abs(x - y) > 1e-6)
      ok = ok && m > std::min(x, y) - 1.0 && m < std::max(x, y) - 1.0;
  }
  report(9, "mean bounds, strict off the diagonal", ok);
}

TEST_CASE("10. byte-identical verification transcripts") {
  const std::string families[] = {"euler", "mult", "add1", "add2",
                                  "log1",  "log2", "sine"};
  std::string first, second;
  bool all_pass = true;
  for (int round = 0; round < 2; ++round) {
    std::string& transcript = round == 0 ? first : second;
    for (const std::string& family : families) {
      const auto r = cli_harness::run(
          "verify --family " + family + " --samples 40 --seed 11", false);
      transcript += r.output;
      all_pass = all_pass && r.exit_code == 0;
    }
  }
  report(10, "deterministic verify transcripts", first == second && all_pass);
}
