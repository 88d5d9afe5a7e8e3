#include "nvl/linalg.hpp"

#include "nvl/errors.hpp"

namespace nvl {

RowEchelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t p = next;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != next) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(next, k));
    }
    Scalar inv = m(next, c).inverse();
    for (std::size_t k = c; k < cols; ++k) m(next, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!m(next, k).is_zero()) m(r, k) -= f * m(next, k);
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.field(), cols);
    v[f] = m.field().one();
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

std::optional<Solution> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw PreconditionError("solve: right-hand side has wrong length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  aug.set_col(a.cols(), b);
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  Vector x(a.field(), a.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.reduced(r, a.cols());
  return Solution{std::move(x), nullspace(a)};
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  RowEchelon e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Matrix checked_inverse(const Matrix& m) {
  auto inv = inverse(m);
  if (!inv) throw PreconditionError("matrix is singular");
  return *inv;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw PreconditionError("is_nilpotent: matrix is not square");
  const std::size_t n = m.rows();
  Matrix p = m;
  std::size_t e = 1;
  while (e < n && !p.is_zero()) {
    p = p * p;
    e *= 2;
  }
  return p.is_zero();
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Matrix commutator_defect(const Matrix& x, const Matrix& y, const Vector& i, const Vector& j) {
  if (!x.is_square() || x.rows() != y.rows() || y.cols() != x.cols() || i.size() != x.rows() ||
      j.size() != x.rows()) {
    throw PreconditionError("commutator_defect: inconsistent shapes");
  }
  return commutator(x, y) + Matrix::outer(i, j);
}

Vector SpanBuilder::reduce(Vector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = v[pivots_[k]];
    if (c.is_zero()) continue;
    for (std::size_t m = pivots_[k]; m < n_; ++m) {
      if (!rows_[k][m].is_zero()) v[m] -= c * rows_[k][m];
    }
  }
  return v;
}

bool SpanBuilder::add(const Vector& v) {
  if (v.size() != n_) throw PreconditionError("SpanBuilder: vector has wrong length");
  Vector r = reduce(v);
  std::size_t p = r.leading_index();
  if (p == n_) return false;
  r *= r[p].inverse();
  // Keep earlier rows reduced against the new pivot so reduce() stays a single pass.
  for (auto& row : rows_) {
    const Scalar c = row[p];
    if (c.is_zero()) continue;
    for (std::size_t m = p; m < n_; ++m) {
      if (!r[m].is_zero()) row[m] -= c * r[m];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(const Vector& v) const { return reduce(v).is_zero(); }

std::size_t span_dim(const std::vector<Vector>& vs, FieldSpec field, std::size_t ambient) {
  SpanBuilder s(field, ambient);
  for (const auto& v : vs) s.add(v);
  return s.dim();
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v) {
  Matrix b = Matrix::from_columns(v.field(), v.size(), basis);
  auto sol = solve(b, v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::vector<Vector> complete_basis(const std::vector<Vector>& independent, FieldSpec field, std::size_t n) {
  SpanBuilder s(field, n);
  std::vector<Vector> out;
  for (const auto& v : independent) {
    if (!s.add(v)) throw PreconditionError("complete_basis: vectors are dependent");
    out.push_back(v);
  }
  for (std::size_t k = 0; k < n && out.size() < n; ++k) {
    Vector e = Vector::unit(field, n, k);
    if (s.add(e)) out.push_back(std::move(e));
  }
  return out;
}

std::size_t krylov_dim(const Matrix& m, const Vector& v) {
  SpanBuilder s(m.field(), v.size());
  Vector w = v;
  while (s.add(w)) w = m * w;
  return s.dim();
}

std::size_t krylov_dim_left(const Vector& u, const Matrix& m) {
  SpanBuilder s(m.field(), u.size());
  Vector w = u;
  while (s.add(w)) w = w * m;
  return s.dim();
}

std::optional<std::vector<Vector>> extend_invariant_flag(std::span<const Matrix> ops,
                                                         std::vector<Vector> flag,
                                                         std::size_t target_dim,
                                                         const Matrix* constraint) {
  if (ops.empty()) throw PreconditionError("extend_invariant_flag: no operators");
  const FieldSpec field = ops.front().field();
  const std::size_t n = ops.front().rows();
  SpanBuilder span(field, n);
  for (const auto& v : flag) {
    if (!span.add(v)) throw PreconditionError("extend_invariant_flag: flag vectors are dependent");
  }
  while (flag.size() < target_dim) {
    // Rows cutting out the current span; v is admissible iff ann * op * v = 0 for all ops.
    std::vector<Vector> ann;
    if (flag.empty()) {
      for (std::size_t k = 0; k < n; ++k) ann.push_back(Vector::unit(field, n, k));
    } else {
      ann = left_nullspace(Matrix::from_columns(field, n, flag));
    }
    Matrix annihilator = Matrix::from_rows(field, n, ann);
    std::vector<Vector> eq_rows;
    for (const auto& op : ops) {
      Matrix cond = annihilator * op;
      for (std::size_t r = 0; r < cond.rows(); ++r) eq_rows.push_back(cond.row(r));
    }
    if (constraint != nullptr) {
      for (std::size_t r = 0; r < constraint->rows(); ++r) eq_rows.push_back(constraint->row(r));
    }
    Matrix system = eq_rows.empty() ? Matrix(field, 0, n) : Matrix::from_rows(field, n, eq_rows);
    bool grew = false;
    for (auto& v : nullspace(system)) {
      if (span.add(v)) {
        flag.push_back(std::move(v));
        grew = true;
        break;
      }
    }
    if (!grew) return std::nullopt;
  }
  return flag;
}

} // namespace nvl
