#pragma once

#include "bck/rational.hpp"

#include <optional>
#include <vector>

namespace bck {

using Mat = std::vector<Vec>;  // row-major

Rational determinant(Mat a);

int rank(Mat a);

// Unique solution of the square system a x = b, or nullopt if a is singular.
std::optional<Vec> solve(Mat a, Vec b);

// Basis of the right null space {x : a x = 0}; `cols` is needed when a has no rows.
std::vector<Vec> null_space(Mat a, std::size_t cols);

}  // namespace bck
