#include "nvl/krylov_strata.hpp"

#include "nvl/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace nvl {

Quadruple Quadruple::zero(FieldSpec field, std::size_t n) {
  return {n, field, Matrix(field, n, n), Matrix(field, n, n), Vector(field, n), Vector(field, n)};
}

void Quadruple::validate() const {
  auto square = [&](const Matrix& m) { return m.rows() == n && m.cols() == n && m.field() == field; };
  if (!square(X) || !square(Y)) throw PreconditionError("quadruple: matrices must be n x n over the declared field");
  if (i.size() != n || j.size() != n || !(i.field() == field) || !(j.field() == field)) {
    throw PreconditionError("quadruple: vectors must have length n over the declared field");
  }
}

bool lexdeg_less(Cell u, Cell v) {
  if (u.a + u.b != v.a + v.b) return u.a + u.b < v.a + v.b;
  return u.b < v.b;
}

bool Staircase::contains(Cell c) const { return index_of(c) < size(); }

std::size_t Staircase::index_of(Cell c) const {
  auto it = std::find(monomials.begin(), monomials.end(), c);
  return static_cast<std::size_t>(it - monomials.begin());
}

std::vector<Cell> Staircase::cells() const {
  std::vector<Cell> out = monomials;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> Staircase::lambda_x() const {
  std::vector<Cell> out;
  for (auto c : cells()) {
    if (contains({c.a + 1, c.b})) out.push_back(c);
  }
  return out;
}

std::vector<Cell> Staircase::lambda_y() const {
  std::vector<Cell> out;
  for (auto c : cells()) {
    if (contains({c.a, c.b + 1})) out.push_back(c);
  }
  return out;
}

std::vector<Cell> Staircase::border() const {
  std::vector<Cell> out;
  for (auto c : monomials) {
    for (Cell nb : {Cell{c.a + 1, c.b}, Cell{c.a, c.b + 1}}) {
      if (!contains(nb) && std::find(out.begin(), out.end(), nb) == out.end()) out.push_back(nb);
    }
  }
  if (empty()) out.push_back({0, 0});
  std::sort(out.begin(), out.end());
  return out;
}

bool Staircase::is_young() const {
  for (auto c : monomials) {
    if (c.a > 0 && !contains({c.a - 1, c.b})) return false;
    if (c.b > 0 && !contains({c.a, c.b - 1})) return false;
  }
  return true;
}

std::string Staircase::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto c : cells()) {
    if (!first) os << ' ';
    first = false;
    os << '(' << c.a << ',' << c.b << ')';
  }
  return os.str();
}

bool is_in_N(const Quadruple& q) {
  q.validate();
  return is_nilpotent(q.X) && is_nilpotent(q.Y) && commutator_defect(q.X, q.Y, q.i, q.j).is_zero();
}

namespace {

// All (a, b) with a + b <= n - 1, largest first.
std::vector<Cell> descending_monomials(std::size_t n) {
  std::vector<Cell> out;
  for (int d = static_cast<int>(n) - 1; d >= 0; --d) {
    for (int b = d; b >= 0; --b) out.push_back({d - b, b});
  }
  return out;
}

Staircase greedy(Side side, const Matrix& X, const Matrix& Y, const Vector& v) {
  const std::size_t n = v.size();
  Staircase st;
  st.side = side;
  if (v.is_zero()) return st;
  // table[b][a] = X^a Y^b v on the right, (v X^a) Y^b on the left.
  std::vector<std::vector<Vector>> table(n);
  if (side == Side::Right) {
    std::vector<Vector> ypow{v};
    for (std::size_t b = 1; b < n; ++b) ypow.push_back(Y * ypow.back());
    for (std::size_t b = 0; b < n; ++b) {
      table[b].push_back(ypow[b]);
      for (std::size_t a = 1; a + b < n; ++a) table[b].push_back(X * table[b].back());
    }
  } else {
    std::vector<Vector> xpow{v};
    for (std::size_t a = 1; a < n; ++a) xpow.push_back(xpow.back() * X);
    for (std::size_t b = 0; b < n; ++b) table[b].resize(n - b);
    for (std::size_t a = 0; a < n; ++a) {
      Vector w = xpow[a];
      for (std::size_t b = 0; a + b < n; ++b) {
        table[b][a] = w;
        w = w * Y;
      }
    }
  }
  SpanBuilder span(v.field(), n);
  for (auto c : descending_monomials(n)) {
    const Vector& w = table[c.b][c.a];
    if (span.add(w)) {
      st.monomials.push_back(c);
      st.basis.push_back(w);
    }
  }
  return st;
}

} // namespace

Staircase right_module(const Matrix& X, const Matrix& Y, const Vector& i) { return greedy(Side::Right, X, Y, i); }

Staircase left_module(const Matrix& X, const Matrix& Y, const Vector& j) { return greedy(Side::Left, X, Y, j); }

StratumLabel classify(const Quadruple& q) {
  if (!is_in_N(q)) throw PreconditionError("classify: quadruple is not in N");
  return {right_module(q.X, q.Y, q.i).size(), left_module(q.X, q.Y, q.j).size(), commutator(q.X, q.Y).is_zero()};
}

Matrix adapted_basis(const Quadruple& q) {
  if (!is_in_N(q)) throw PreconditionError("adapted_basis: quadruple is not in N");
  const std::size_t n = q.n;
  const Staircase right = right_module(q.X, q.Y, q.i);
  const Staircase left = left_module(q.X, q.Y, q.j);
  const std::size_t r = right.size();
  const std::size_t s = left.size();
  if (r + s > n) throw InternalError("adapted_basis: modules are not complementary");

  const std::array<Matrix, 2> ops{q.X, q.Y};
  std::vector<Vector> cols = right.basis;
  Matrix f = s == 0 ? Matrix(q.field, 0, n) : Matrix::from_rows(q.field, n, left.basis);
  auto middle = extend_invariant_flag(ops, cols, n - s, &f);
  if (!middle) throw InternalError("adapted_basis: invariant flag stalled inside (jK[X,Y])^perp");
  cols = std::move(*middle);
  // Last s columns: the dual basis to f_s, ..., f_1.
  for (std::size_t l = n - s; l < n; ++l) {
    const std::size_t k = n - 1 - l; // 0-based row of f with f_k e_l = 1
    auto sol = solve(f, Vector::unit(q.field, s, k));
    if (!sol) throw InternalError("adapted_basis: left staircase rows are dependent");
    cols.push_back(sol->particular);
  }
  Matrix g = Matrix::from_columns(q.field, n, cols);
  if (!inverse(g)) throw InternalError("adapted_basis: assembled basis is singular");
  return g;
}

Matrix triangularize_pair(const Quadruple& q) {
  if (!is_in_N(q)) throw PreconditionError("triangularize_pair: quadruple is not in N");
  const std::array<Matrix, 2> ops{q.X, q.Y};
  auto flag = extend_invariant_flag(ops, {}, q.n);
  if (!flag) throw InternalError("triangularize_pair: common kernel recursion stalled");
  return Matrix::from_columns(q.field, q.n, *flag);
}

Quadruple transpose_dual(const Quadruple& q) {
  return {q.n, q.field, q.X.transpose(), q.Y.transpose(), -q.j, q.i};
}

Quadruple transpose_dual_inverse(const Quadruple& q) {
  return {q.n, q.field, q.X.transpose(), q.Y.transpose(), q.j, -q.i};
}

std::string to_string(const StratumLabel& label) {
  std::ostringstream os;
  os << '(' << label.r << ", " << label.s << ", " << (label.commuting ? "commuting" : "noncommuting") << ')';
  return os.str();
}

} // namespace nvl
