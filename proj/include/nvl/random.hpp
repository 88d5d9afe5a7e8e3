#pragma once

#include "nvl/matrix.hpp"

#include <cstdint>
#include <random>

namespace nvl {

using Rng = std::mt19937_64;

/// Uniform over F_p; integers in [-9, 9] over Q.
Scalar random_scalar(FieldSpec field, Rng& rng);
Scalar random_nonzero_scalar(FieldSpec field, Rng& rng);
Vector random_vector(FieldSpec field, std::size_t n, Rng& rng);
Matrix random_matrix(FieldSpec field, std::size_t rows, std::size_t cols, Rng& rng);
/// Resamples until invertible.
Matrix random_invertible(FieldSpec field, std::size_t n, Rng& rng);
/// c_1 M + c_2 M^2 + ... + c_{n-1} M^{n-1} with random c.
Matrix random_polynomial_in(const Matrix& m, Rng& rng);

} // namespace nvl
