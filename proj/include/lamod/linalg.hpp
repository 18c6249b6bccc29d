#pragma once

#include <vector>

#include "lamod/eigen_traits.hpp"

namespace lamod {

/// Rank by fraction-free (Bareiss) elimination after clearing denominators row by row,
/// so every intermediate entry is a Gaussian integer.
Eigen::Index exact_rank(const GaussianMatrix& m);

/// Reduced row echelon form over Q(i); `pivots` receives the pivot columns.
GaussianMatrix rref(const GaussianMatrix& m, std::vector<Eigen::Index>* pivots = nullptr);

/// Columns spanning the right null space.
GaussianMatrix nullspace(const GaussianMatrix& m);

}  // namespace lamod
