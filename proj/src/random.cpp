#include "nvl/random.hpp"

#include "nvl/linalg.hpp"

namespace nvl {

Scalar random_scalar(FieldSpec field, Rng& rng) {
  if (field.is_prime_field()) {
    std::uniform_int_distribution<std::uint64_t> d(0, field.modulus() - 1);
    return field.from_int(static_cast<long long>(d(rng)));
  }
  std::uniform_int_distribution<int> d(-9, 9);
  return field.from_int(d(rng));
}

Scalar random_nonzero_scalar(FieldSpec field, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(field, rng);
    if (!s.is_zero()) return s;
  }
}

Vector random_vector(FieldSpec field, std::size_t n, Rng& rng) {
  Vector v(field, n);
  for (std::size_t k = 0; k < n; ++k) v[k] = random_scalar(field, rng);
  return v;
}

Matrix random_matrix(FieldSpec field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(field, rng);
  }
  return m;
}

Matrix random_invertible(FieldSpec field, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

Matrix random_polynomial_in(const Matrix& m, Rng& rng) {
  const std::size_t n = m.rows();
  Matrix out(m.field(), n, n);
  Matrix pw = m;
  for (std::size_t k = 1; k < n; ++k) {
    out += random_scalar(m.field(), rng) * pw;
    pw = pw * m;
  }
  return out;
}

} // namespace nvl
