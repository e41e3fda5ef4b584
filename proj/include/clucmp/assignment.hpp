#pragma once

#include <cstdint>
#include <vector>

namespace clucmp {

/// Maximum-weight one-to-one assignment on a rectangular nonnegative weight
/// matrix; unmatched rows/columns contribute zero. Exact O(s^3) Hungarian
/// algorithm with potentials on the zero-padded square matrix.
std::int64_t max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weights);

}  // namespace clucmp
