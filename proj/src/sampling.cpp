#include "betapend/sampling.hpp"

#include <cmath>

#include "betapend/errors.hpp"

namespace betapend {

namespace {

double fractional(double x) { return x - std::floor(x); }

// splitmix64, used only to derive the start point from the seed.
std::uint64_t mix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Root of x^(d+1) = x + 1; its inverse powers are the R_d recurrence steps.
double generalized_golden_ratio(int dim) {
  double phi = 2.0;
  for (int i = 0; i < 64; ++i)
    phi = std::pow(1.0 + phi, 1.0 / (dim + 1.0));
  return phi;
}

}  // namespace

QuasiRandomSequence::QuasiRandomSequence(int dim, std::uint64_t seed) {
  if (dim < 1) throw InvalidInput("QuasiRandomSequence: dim must be >= 1");
  const double phi = generalized_golden_ratio(dim);
  alpha_.resize(static_cast<std::size_t>(dim));
  state_.resize(static_cast<std::size_t>(dim));
  std::uint64_t s = seed;
  for (int j = 0; j < dim; ++j) {
    alpha_[static_cast<std::size_t>(j)] = fractional(std::pow(1.0 / phi, j + 1));
    state_[static_cast<std::size_t>(j)] =
        static_cast<double>(mix(s) >> 11) * 0x1.0p-53;
  }
}

const std::vector<double>& QuasiRandomSequence::next() {
  for (std::size_t j = 0; j < state_.size(); ++j)
    state_[j] = fractional(state_[j] + alpha_[j]);
  return state_;
}

}  // namespace betapend
