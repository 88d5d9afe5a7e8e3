#pragma once

#include "nvl/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace nvl {

/// Reduced row echelon form. Pivots are found by scanning each column top to
/// bottom for the first nonzero entry; there is no tolerance anywhere.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m);

/// Basis of {u : u M = 0}.
std::vector<Vector> left_nullspace(const Matrix& m);

struct Solution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// Solves A x = b for rectangular A. Returns nullopt iff the system is
/// inconsistent. The particular solution has all free variables set to zero.
std::optional<Solution> solve(const Matrix& a, const Vector& b);

/// Nullopt iff m is singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Throws PreconditionError when m is singular.
Matrix checked_inverse(const Matrix& m);

/// True iff M^n = 0, tested by repeated squaring.
bool is_nilpotent(const Matrix& m);

Matrix commutator(const Matrix& x, const Matrix& y);

/// [X, Y] + i j.
Matrix commutator_defect(const Matrix& x, const Matrix& y, const Vector& i, const Vector& j);

/// Incrementally maintained span with exact membership tests.
class SpanBuilder {
public:
  SpanBuilder(FieldSpec field, std::size_t ambient) : field_(field), n_(ambient) {}

  /// Adds v if it is independent of the current span; returns whether it was added.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

private:
  Vector reduce(Vector v) const;

  FieldSpec field_;
  std::size_t n_;
  // Echelon rows, each normalized to 1 at pivots_[k].
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t span_dim(const std::vector<Vector>& vs, FieldSpec field, std::size_t ambient);

/// Coordinates of v in the (independent) list basis, or nullopt if v is not in
/// their span.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v);

/// Extends independent vectors to a basis of K^n with standard unit vectors.
std::vector<Vector> complete_basis(const std::vector<Vector>& independent, FieldSpec field, std::size_t n);

/// Dimension of the cyclic subspace K[M] v = span{v, Mv, M^2 v, ...}.
std::size_t krylov_dim(const Matrix& m, const Vector& v);
/// Dimension of u K[M] = span{u, uM, uM^2, ...}.
std::size_t krylov_dim_left(const Vector& u, const Matrix& m);

/// Grows the columns of `flag` (which must span a subspace invariant under all
/// `ops`) one vector at a time, each new vector v satisfying op v in the current
/// span for every op, and lying in ker `constraint` when a constraint is given.
/// Stops once the span reaches `target_dim`. Returns nullopt if at some stage no
/// such v exists.
std::optional<std::vector<Vector>> extend_invariant_flag(std::span<const Matrix> ops,
                                                         std::vector<Vector> flag,
                                                         std::size_t target_dim,
                                                         const Matrix* constraint = nullptr);

} // namespace nvl
