#include "nvl/s_variety.hpp"

#include "nvl/errors.hpp"
#include "nvl/normal_forms.hpp"

#include <algorithm>
#include <array>

namespace nvl {

bool is_in_S(const SQuadruple& q) {
  q.validate();
  return is_nilpotent(q.X) && is_nilpotent(q.Y) && (q.X + q.Y - Matrix::outer(q.i, q.j)).is_zero();
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

// Recursion on concrete coordinates: every level either splits off a common
// kernel vector at the bottom of the flag or a common left kernel vector at the top.
Matrix triangularize_rec(const Matrix& a, const Matrix& b, const Vector& i, const Vector& j) {
  const FieldSpec f = a.field();
  const std::size_t d = a.rows();
  if (d <= 1) return Matrix::identity(f, d);
  auto kb = nullspace(b);
  if (kb.empty()) throw InternalError("triangularize_S: B has trivial kernel");
  const Vector& v = kb.front();
  const Matrix one = Matrix::identity(f, 1);
  if (dot(j, v).is_zero()) {
    Matrix p = Matrix::from_columns(f, d, complete_basis({v}, f, d));
    Matrix pi = checked_inverse(p);
    Matrix a2 = pi * a * p;
    Matrix b2 = pi * b * p;
    Vector i2 = pi * i;
    Vector j2 = j * p;
    Matrix g = triangularize_rec(a2.block(1, 1, d - 1, d - 1), b2.block(1, 1, d - 1, d - 1), i2.slice(1, d - 1),
                                 j2.slice(1, d - 1));
    return p * block_diag(one, g);
  }
  auto la = left_nullspace(a);
  if (la.empty()) throw InternalError("triangularize_S: A has trivial left kernel");
  std::vector<Vector> rows = complete_basis({la.front()}, f, d);
  std::rotate(rows.begin(), rows.begin() + 1, rows.end()); // w becomes the last row
  Matrix qm = Matrix::from_rows(f, d, rows);
  Matrix p = checked_inverse(qm);
  Matrix a2 = qm * a * p;
  Matrix b2 = qm * b * p;
  Vector i2 = qm * i;
  Vector j2 = j * p;
  Matrix g = triangularize_rec(a2.block(0, 0, d - 1, d - 1), b2.block(0, 0, d - 1, d - 1), i2.slice(0, d - 1),
                               j2.slice(0, d - 1));
  return p * block_diag(g, one);
}

} // namespace

Matrix triangularize_S(const SQuadruple& q) {
  if (!is_in_S(q)) throw PreconditionError("triangularize_S: quadruple is not in S");
  Matrix g = triangularize_rec(q.X, q.Y, q.i, q.j);
  Matrix gi = checked_inverse(g);
  if (!(gi * q.X * g).is_strictly_upper_triangular() || !(gi * q.Y * g).is_strictly_upper_triangular()) {
    throw InternalError("triangularize_S: recursion produced a non-triangular frame");
  }
  return g;
}

SLabel classify_S(const SQuadruple& q) {
  if (!is_in_S(q)) throw PreconditionError("classify_S: quadruple is not in S");
  return {krylov_dim(q.X, q.i), krylov_dim_left(q.j, q.X)};
}

bool trace_pairing_check(const SQuadruple& q, std::size_t maxlen) {
  q.validate();
  std::vector<Vector> level{q.i};
  for (std::size_t len = 0;; ++len) {
    for (const auto& v : level) {
      if (!dot(q.j, v).is_zero()) return false;
    }
    if (len == maxlen) return true;
    std::vector<Vector> next;
    next.reserve(2 * level.size());
    for (const auto& v : level) {
      next.push_back(q.X * v);
      next.push_back(q.Y * v);
    }
    level = std::move(next);
  }
}

Matrix s_frame(const SQuadruple& q) {
  if (!is_in_S(q)) throw PreconditionError("s_frame: quadruple is not in S");
  const std::size_t r = krylov_dim(q.X, q.i);
  std::vector<Vector> chain;
  if (r > 0) {
    chain.assign(r, Vector());
    chain[r - 1] = q.i;
    for (std::size_t k = r - 1; k-- > 0;) chain[k] = q.X * chain[k + 1];
  }
  const std::array<Matrix, 2> ops{q.X, q.Y};
  auto flag = extend_invariant_flag(ops, chain, q.n);
  if (!flag) throw InternalError("s_frame: invariant flag stalled");
  return Matrix::from_columns(q.field, q.n, *flag);
}

SQuadruple s_deform(const SQuadruple& q, const Scalar& tau, std::optional<std::size_t> r_opt) {
  if (!is_in_S(q)) throw PreconditionError("s_deform: quadruple is not in S");
  if (!(tau.field() == q.field)) throw PreconditionError("s_deform: tau lies in a different field");
  const std::size_t n = q.n;
  const std::size_t r = r_opt ? *r_opt : krylov_dim(q.X, q.i);
  if (r > n) throw PreconditionError("s_deform: r exceeds n");
  const FieldSpec f = q.field;
  Matrix g = s_frame(q);
  Matrix gi = checked_inverse(g);
  Matrix a = gi * q.X * g;
  Vector i = gi * q.i;
  Vector j = q.j * g;
  for (std::size_t k = r; k < n; ++k) {
    if (!i[k].is_zero()) throw PreconditionError("s_deform: i is not supported on the first r frame vectors");
  }
  for (std::size_t k = 0; k < r; ++k) {
    if (!j[k].is_zero()) throw PreconditionError("s_deform: j does not vanish on the first r frame vectors");
  }
  const Matrix l = Matrix::jordan_block(f, n);
  Vector ir(f, n);
  Vector jr(f, n);
  if (r >= 1) ir[r - 1] = f.one();
  if (r < n) jr[r] = f.one();
  const Scalar s = f.one() - tau;
  SQuadruple out = Quadruple::zero(f, n);
  out.X = tau * a + s * l;
  out.i = tau * i + s * ir;
  out.j = tau * j + s * jr;
  out.Y = Matrix::outer(out.i, out.j) - out.X;
  if (!is_nilpotent(out.Y)) throw InternalError("s_deform: B(tau) is not nilpotent in the frame");
  return conjugate(out, g);
}

SQuadruple s_canonical(std::size_t n, std::size_t r, const Matrix& a_prime) {
  if (n == 0 || r >= n) throw PreconditionError("s_canonical: need 0 <= r <= n-1");
  if (a_prime.rows() != r || a_prime.cols() != n - r) throw PreconditionError("s_canonical: A' must be r x (n-r)");
  const FieldSpec f = a_prime.field();
  SQuadruple q = Quadruple::zero(f, n);
  q.X.set_block(0, 0, Matrix::jordan_block(f, r));
  q.X.set_block(r, r, Matrix::jordan_block(f, n - r));
  q.X.set_block(0, r, a_prime);
  if (r >= 1) q.i[r - 1] = f.one();
  q.j[r] = f.one();
  q.Y = Matrix::outer(q.i, q.j) - q.X;
  return q;
}

std::size_t s_stabilizer_dim(const SQuadruple& q) {
  if (!is_in_S(q)) throw PreconditionError("s_stabilizer_dim: quadruple is not in S");
  return stabilizer(q).dim;
}

} // namespace nvl
