#pragma once

#include <vector>

#include "groupwalk/rational.hpp"

namespace groupwalk {

/// Rank of a dense rows x cols rational matrix (row-major) by exact
/// Gaussian elimination with partial (first nonzero) pivoting.
int rational_rank(int rows, int cols, std::vector<Rational> m);

}  // namespace groupwalk
