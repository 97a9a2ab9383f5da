#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betapend/errors.hpp"
#include "betapend/fit.hpp"
#include "betapend/format.hpp"
#include "betapend/gamma.hpp"
#include "betapend/pendants.hpp"
#include "betapend/rational.hpp"
#include "betapend/sampling.hpp"

namespace {

using namespace betapend;

double parse_double(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) {
    std::ostringstream msg;
    msg << "cannot parse " << what << " '" << text << "'";
    throw InvalidInput(msg.str());
  }
  return value;
}

std::vector<double> parse_args_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ','))
    values.push_back(parse_double(item, "argument"));
  if (values.empty()) throw InvalidInput("--args is empty");
  return values;
}

Family parse_family(const std::string& name) {
  const auto family = family_from_name(name);
  if (!family) {
    std::ostringstream msg;
    msg << "unknown family '" << name
        << "' (expected euler|mult|add1|add2|log1|log2|sine)";
    throw InvalidInput(msg.str());
  }
  return *family;
}

QuotientClass parse_quotient(const std::string& name) {
  if (name == "exp") return QuotientClass::ExpQuotient;
  if (name == "mult") return QuotientClass::MultQuotient;
  if (name == "add") return QuotientClass::AddQuotient;
  if (name == "log") return QuotientClass::LogQuotient;
  std::ostringstream msg;
  msg << "unknown quotient class '" << name << "' (expected exp|mult|add|log)";
  throw InvalidInput(msg.str());
}

struct AxisRange {
  double start, stop, step;
  std::vector<double> points() const {
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> values(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
      values[static_cast<std::size_t>(i)] = start + i * step;
    return values;
  }
};

AxisRange parse_range(const std::string& text) {
  std::string body = text;
  if (const auto eq = body.find('='); eq != std::string::npos)
    body = body.substr(eq + 1);
  std::vector<std::string> parts;
  std::stringstream stream(body);
  std::string item;
  while (std::getline(stream, item, ':')) parts.push_back(item);
  if (parts.size() != 3)
    throw InvalidInput("range must look like [name=]start:stop:step");
  AxisRange range{parse_double(parts[0], "range start"),
                  parse_double(parts[1], "range stop"),
                  parse_double(parts[2], "range step")};
  if (!(range.step > 0.0)) throw InvalidInput("range step must be positive");
  if (!(range.start < range.stop))
    throw InvalidInput("range start must be below stop");
  return range;
}

QuadConfig config_for_tol(const std::optional<double>& tol) {
  QuadConfig config;
  if (tol) {
    if (!(*tol > 0.0)) throw InvalidInput("--tol must be positive");
    config.rel_tol = *tol;
    config.abs_tol = *tol / 100.0;
  }
  return config;
}

// In-domain sampling boxes used by `verify`, per family.
std::pair<std::vector<double>, std::vector<double>> verify_box(Family family) {
  switch (family) {
    case Family::EulerExp: return {{0.5, 0.5}, {10.0, 10.0}};
    case Family::Mult: return {{1.1, 1.1}, {20.0, 20.0}};
    case Family::Add1:
    case Family::Add2: return {{-5.0, -5.0}, {5.0, 5.0}};
    case Family::Log1:
    case Family::Log2: return {{1.1, 1.1}, {50.0, 50.0}};
    case Family::SineAdd:
      return {{-std::numbers::pi, -std::numbers::pi},
              {std::numbers::pi, std::numbers::pi}};
  }
  throw InvalidInput("unknown family");
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot open output file '" + out_path + "'");
  out << payload;
}

int run_eval(const std::string& family_name, const std::string& args_text,
             const std::string& method, const std::optional<double>& tol) {
  const Family family = parse_family(family_name);
  const std::vector<double> point = parse_args_list(args_text);
  const FamilySpec spec{family, static_cast<int>(point.size())};

  double value = 0.0;
  if (method == "closed") {
    value = pendant_closed(spec, point);
  } else if (method == "quad") {
    value = pendant_integral(spec, point, config_for_tol(tol)).value;
  } else {
    throw InvalidInput("--method must be 'closed' or 'quad'");
  }
  std::cout << format_value(value) << "\n";
  return 0;
}

int run_tabulate(const std::string& family_name,
                 const std::vector<std::string>& range_texts,
                 const std::string& method, const std::optional<double>& tol,
                 const std::string& out_path) {
  const Family family = parse_family(family_name);
  if (range_texts.empty()) throw InvalidInput("at least one --range is required");
  const FamilySpec spec{family, static_cast<int>(range_texts.size())};
  validate(spec, method == "closed");

  std::vector<std::vector<double>> axes;
  for (const std::string& text : range_texts)
    axes.push_back(parse_range(text).points());

  // Every lattice point must be in-domain before anything is evaluated;
  // with positive steps it suffices to check the axis minima.
  if (const auto bound = family_lower_bound(family)) {
    for (const auto& axis : axes) {
      if (!(axis.front() > *bound)) {
        std::ostringstream msg;
        msg << "family '" << family_name << "' requires every argument > "
            << *bound << "; range starts at " << axis.front();
        throw DomainError(msg.str());
      }
    }
  }

  const QuadConfig config = config_for_tol(tol);
  std::ostringstream csv;
  for (std::size_t axis = 0; axis < axes.size(); ++axis)
    csv << "x" << (axis + 1) << ",";
  csv << "value\n";

  std::vector<std::size_t> index(axes.size(), 0);
  std::vector<double> point(axes.size());
  for (;;) {
    for (std::size_t axis = 0; axis < axes.size(); ++axis)
      point[axis] = axes[axis][index[axis]];
    const double value = method == "closed"
                             ? pendant_closed(spec, point)
                             : pendant_integral(spec, point, config).value;
    for (const double coordinate : point)
      csv << format_value(coordinate) << ",";
    csv << format_value(value) << "\n";

    // row-major: last axis fastest
    std::size_t axis = axes.size();
    while (axis > 0 && ++index[axis - 1] == axes[axis - 1].size()) {
      index[axis - 1] = 0;
      --axis;
    }
    if (axis == 0) break;
  }

  emit(csv.str(), out_path);
  return 0;
}

int run_verify(const std::string& family_name, int samples,
               std::uint64_t seed, double tol) {
  const Family family = parse_family(family_name);
  if (samples < 1) throw InvalidInput("--samples must be >= 1");
  if (!(tol > 0.0)) throw InvalidInput("--tol must be positive");

  double worst = 0.0;
  if (family == Family::EulerExp) {
    worst = verify_euler_identity(samples, seed);
  } else {
    const auto [lo, hi] = verify_box(family);
    const FamilySpec spec{family, 2};
    QuasiRandomSequence sequence(2, seed);
    for (int i = 0; i < samples; ++i) {
      const auto& u = sequence.next();
      std::vector<double> point(2);
      for (int j = 0; j < 2; ++j)
        point[static_cast<std::size_t>(j)] =
            lo[static_cast<std::size_t>(j)] +
            (hi[static_cast<std::size_t>(j)] - lo[static_cast<std::size_t>(j)]) *
                u[static_cast<std::size_t>(j)];
      const double closed = pendant_closed(spec, point);
      double deviation = std::numeric_limits<double>::infinity();
      try {
        const double integral = pendant_integral(spec, point).value;
        deviation = std::abs(closed - integral) / std::max(1.0, std::abs(closed));
      } catch (const NonConvergence&) {
        // a sample that fails to integrate counts as a failed comparison
      }
      worst = std::max(worst, deviation);
    }
  }

  const bool pass = worst <= tol;
  std::cout << "verify family=" << family_name << " samples=" << samples
            << " seed=" << seed << " max_deviation=" << format_value(worst)
            << " tol=" << format_value(tol) << " : " << (pass ? "PASS" : "FAIL")
            << "\n";
  return pass ? 0 : 1;
}

int run_coeff(int k) {
  const double value = add1_coefficient(k);
  const Rational hint = nearest_rational(value, 1000);
  std::cout << format_value(value) << " ~ " << to_string(hint) << "\n";
  return 0;
}

int run_fit(const std::string& target_name, const std::string& class_name,
            const std::string& grid_text, int iters, double tol,
            const std::string& out_path) {
  FitProblem problem;
  problem.target = FamilySpec{parse_family(target_name), 2};
  problem.quotient = parse_quotient(class_name);

  std::vector<std::string> parts;
  std::stringstream stream(grid_text);
  std::string item;
  while (std::getline(stream, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw InvalidInput("--grid must look like lo:hi:n");
  problem.grid_lo = parse_double(parts[0], "grid lo");
  problem.grid_hi = parse_double(parts[1], "grid hi");
  problem.grid_n = static_cast<int>(parse_double(parts[2], "grid n"));
  problem.max_iters = iters;
  problem.tol = tol;

  const FitReport report = fit_quotient(problem);
  emit(to_json(report) + "\n", out_path);
  return report.converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Euler Beta function and its Cauchy-equation siblings: closed forms, "
      "defining integrals, and Cauchy-quotient least-squares exploration"};
  app.require_subcommand(1);

  std::string family = "euler";
  std::string args_text;
  std::string method = "closed";
  std::optional<double> tol_opt;
  auto* eval = app.add_subcommand("eval", "evaluate one family at one point");
  eval->add_option("--family", family, "euler|mult|add1|add2|log1|log2|sine")
      ->required();
  eval->add_option("--args", args_text, "comma-separated coordinates")->required();
  eval->add_option("--method", method, "closed|quad");
  eval->add_option("--tol", tol_opt, "quadrature relative tolerance");

  std::vector<std::string> ranges;
  std::string out_path;
  auto* tabulate = app.add_subcommand("tabulate", "emit a CSV value lattice");
  tabulate->add_option("--family", family)->required();
  tabulate->add_option("--range", ranges, "[name=]start:stop:step, one per axis")
      ->required();
  tabulate->add_option("--method", method, "closed|quad");
  tabulate->add_option("--tol", tol_opt);
  tabulate->add_option("--out", out_path, "output file (default: stdout)");

  int samples = 100;
  std::uint64_t seed = 0;
  double verify_tol = 1e-8;
  auto* verify =
      app.add_subcommand("verify", "closed form vs defining integral");
  verify->add_option("--family", family)->required();
  verify->add_option("--samples", samples)->required();
  verify->add_option("--seed", seed);
  verify->add_option("--tol", verify_tol);

  int coeff_k = 2;
  auto* coeff =
      app.add_subcommand("coeff", "additive-family coefficient c_k");
  coeff->add_option("--k", coeff_k, "number of variables, 2..6")->required();

  std::string class_name = "exp";
  std::string grid_text;
  int fit_iters = 500;
  double fit_tol = 1e-12;
  auto* fit = app.add_subcommand("fit", "least-squares Cauchy-quotient fit");
  fit->add_option("--target", family)->required();
  fit->add_option("--class", class_name, "exp|mult|add|log")->required();
  fit->add_option("--grid", grid_text, "lo:hi:n")->required();
  fit->add_option("--iters", fit_iters);
  fit->add_option("--tol", fit_tol);
  fit->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval(family, args_text, method, tol_opt);
    if (tabulate->parsed())
      return run_tabulate(family, ranges, method, tol_opt, out_path);
    if (verify->parsed()) return run_verify(family, samples, seed, verify_tol);
    if (coeff->parsed()) return run_coeff(coeff_k);
    if (fit->parsed())
      return run_fit(family, class_name, grid_text, fit_iters, fit_tol, out_path);
  } catch (const betapend::NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const betapend::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
