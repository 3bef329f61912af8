#pragma once

#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

/// In-place reduced row echelon form (leading 1s, zeros above and below).
/// Pivot search takes the first nonzero entry per column, so the result is
/// deterministic for a fixed row/column order.
void rref(RatMatrix& m);

int rank(RatMatrix m);

/// Canonical basis of {v : m v = 0}: the unique RREF spanning set of the
/// kernel, rows sorted by leading column.
RatMatrix nullspace(const RatMatrix& m, std::size_t ncols);

} // namespace umbral
