#pragma once
// Brute-force walk counting by dynamic programming over the lattice.

#include "qkernel/models.hpp"

#include <gmpxx.h>

#include <vector>

namespace qkernel {

enum class Axis { x_axis, y_axis, origin };

/// S_0..S_N: quarter-plane walks of each length.
std::vector<mpz_class> count_all(ModelId model, int N);

/// Walks ending on the x-axis (j = 0), the y-axis (i = 0) or at the origin.
std::vector<mpz_class> count_axis(ModelId model, int N, Axis axis);

/// Walks confined to y >= 0 (x unconstrained) that end with y = 0.
std::vector<mpz_class> count_half_plane(ModelId model, int N);

}  // namespace qkernel
