#pragma once

// Simplicial beneath-beyond hull on full-dimensional integer point sets.

#include <vector>

#include "abx/linalg.hpp"

namespace abx::detail {

struct HullSummary {
    std::vector<std::pair<IntVector, Integer>> planes; // distinct supporting hyperplanes, outward
    std::vector<int> extreme;                          // indices of extreme points, ascending
    Integer fan_det_sum;                               // sum of |det| over the fan from extreme.front()
    std::vector<std::vector<int>> fan;                 // simplices of that fan, when requested
};

// pts: distinct points of Z^k whose affine hull is all of R^k, k >= 2.
// Runs in 128-bit integers whenever a Hadamard-type bound allows it, otherwise in mpz.
HullSummary hull_summary(const std::vector<IntVector>& pts, int k, bool want_fan);

} // namespace abx::detail
