#pragma once

#include <cstdint>
#include <vector>

namespace betapend {

// Low-discrepancy point sequence in [0, 1)^dim (additive Kronecker
// recurrence on the generalized golden ratio).  The seed only shifts the
// start point, so identical (dim, seed) pairs replay the same points.
class QuasiRandomSequence {
 public:
  QuasiRandomSequence(int dim, std::uint64_t seed);

  // Next point of the sequence; the returned reference stays valid until
  // the following call.
  const std::vector<double>& next();

 private:
  std::vector<double> alpha_;
  std::vector<double> state_;
};

}  // namespace betapend
