#include "nvl/slices.hpp"

#include "nvl/errors.hpp"
#include "nvl/normal_forms.hpp"
#include "nvl/random.hpp"

#include <algorithm>
#include <optional>

namespace nvl {

std::pair<std::vector<Cell>, std::vector<Cell>> free_cells(const Staircase& lambda) {
  std::vector<Cell> beta;
  std::vector<Cell> alpha;
  for (Cell c : lambda.cells()) {
    if (!lambda.contains({c.a + 1, c.b})) beta.push_back(c);
    if (!(c.a == 0 && lambda.contains({0, c.b + 1}))) alpha.push_back(c);
  }
  return {beta, alpha};
}

namespace {

std::vector<Cell> keys(const std::map<Cell, Vector>& m) {
  std::vector<Cell> out;
  for (const auto& [c, v] : m) out.push_back(c);
  return out;
}

Quadruple assemble(FieldSpec f, const Matrix& x1, const Matrix& y1, const Vector& i1, const Matrix& x2,
                   const Matrix& y2, const Matrix& x3, const Matrix& y3, const Vector& j2) {
  const std::size_t r = x1.rows();
  const std::size_t m = x2.rows();
  Quadruple q = Quadruple::zero(f, r + m);
  q.X.set_block(0, 0, x1);
  q.Y.set_block(0, 0, y1);
  q.X.set_block(r, r, x2);
  q.Y.set_block(r, r, y2);
  q.X.set_block(0, r, x3);
  q.Y.set_block(0, r, y3);
  for (std::size_t k = 0; k < r; ++k) q.i[k] = i1[k];
  for (std::size_t k = 0; k < m; ++k) q.j[r + k] = j2[k];
  return q;
}

void require_commuting_nilpotent(const Matrix& x, const Matrix& y, const char* what) {
  if (!x.is_square() || x.rows() != y.rows() || y.cols() != x.cols()) {
    throw PreconditionError(std::string("slice: ") + what + " blocks have inconsistent shapes");
  }
  if (!is_nilpotent(x) || !is_nilpotent(y) || !commutator(x, y).is_zero()) {
    throw PreconditionError(std::string("slice: ") + what + " pair must be commuting nilpotent");
  }
}

} // namespace

Quadruple build_slice_point(const SliceData& s) {
  const FieldSpec f = s.field;
  const std::size_t r = s.r;
  const std::size_t m = s.X2.rows();
  if (s.X1.rows() != r || s.i1.size() != r) throw PreconditionError("slice: X1 and i1 must have size r");
  require_commuting_nilpotent(s.X1, s.Y1, "(X1, Y1)");
  require_commuting_nilpotent(s.X2, s.Y2, "(X2, Y2)");

  const Staircase lambda = right_module(s.X1, s.Y1, s.i1);
  if (lambda.size() != r) throw PreconditionError("slice: i1 is not cyclic for (X1, Y1)");
  if (r == 0 || m == 0) {
    if (!s.alpha.empty() || !s.beta.empty()) {
      if (m != 0) throw PreconditionError("slice: free covectors given for an empty staircase");
    }
    return assemble(f, s.X1, s.Y1, s.i1, s.X2, s.Y2, Matrix(f, r, m), Matrix(f, r, m), Vector(f, m));
  }

  auto [beta_free, alpha_free] = free_cells(lambda);
  if (keys(s.beta) != beta_free) throw PreconditionError("slice: beta must be given exactly on lambda \\ lambda_x");
  if (keys(s.alpha) != alpha_free) {
    throw PreconditionError("slice: alpha must be given exactly on lambda minus the first column of lambda_y");
  }
  for (const auto* mp : {&s.alpha, &s.beta}) {
    for (const auto& [c, v] : *mp) {
      if (v.size() != m || !(v.field() == f)) throw PreconditionError("slice: covectors must have length n - r");
    }
  }

  auto vec = [&](Cell c) {
    return power(s.X1, static_cast<std::size_t>(c.a)) * (power(s.Y1, static_cast<std::size_t>(c.b)) * s.i1);
  };
  auto coords = [&](Cell c) {
    auto co = coordinates(lambda.basis, vec(c));
    if (!co) throw InternalError("slice: monomial escapes K[X1,Y1]i1");
    return *co;
  };

  // w_{(a,b)}: staircase coordinates of W, one covector per staircase position.
  std::vector<Vector> w(r, Vector(f, m));
  for (const auto& [c, b] : s.beta) {
    Vector co = coords({c.a + 1, c.b});
    for (std::size_t k = 0; k < r; ++k) {
      if (!co[k].is_zero()) w[k] += co[k] * b;
    }
  }
  for (Cell c : lambda.cells()) {
    if (lambda.contains({c.a, c.b + 1})) continue;
    Vector co = coords({c.a, c.b + 1});
    for (std::size_t k = 0; k < r; ++k) {
      if (!co[k].is_zero()) w[k] -= co[k] * s.alpha.at(c);
    }
  }

  std::map<Cell, Vector> alpha = s.alpha;
  std::map<Cell, Vector> beta = s.beta;
  auto get = [](const std::map<Cell, Vector>& mp, Cell c, const char* what) -> const Vector& {
    auto it = mp.find(c);
    if (it == mp.end()) throw InternalError(std::string("slice: ") + what + " referenced before it was determined");
    return it->second;
  };
  // lambda.monomials is already in descending lex-deg order.
  for (Cell c : lambda.monomials) {
    if (c.a == 0 && c.b == 0) continue;
    const Vector& wc = w[lambda.index_of(c)];
    const Vector& bc = get(beta, c, "beta");
    const Vector& ac = get(alpha, c, "alpha");
    if (c.a > 0) {
      Vector v = bc * s.X2 - ac * s.Y2 - wc;
      if (c.b > 0) v += get(alpha, {c.a, c.b - 1}, "alpha");
      beta[{c.a - 1, c.b}] = std::move(v);
    } else {
      alpha[{0, c.b - 1}] = ac * s.Y2 - bc * s.X2 + wc;
    }
  }
  const Cell origin{0, 0};
  Vector j2 = get(beta, origin, "beta") * s.X2 - get(alpha, origin, "alpha") * s.Y2 - w[lambda.index_of(origin)];

  Matrix x3(f, r, m);
  Matrix y3(f, r, m);
  for (std::size_t k = 0; k < r; ++k) {
    Cell c = lambda.monomials[k];
    x3 += Matrix::outer(lambda.basis[k], alpha.at(c));
    y3 += Matrix::outer(lambda.basis[k], beta.at(c));
  }
  Quadruple q = assemble(f, s.X1, s.Y1, s.i1, s.X2, s.Y2, x3, y3, j2);
  if (!is_in_N(q)) throw InternalError("slice: assembled point is not in N");
  return q;
}

Quadruple regular_slice_point(const RegularSliceParams& p) {
  const FieldSpec f = p.field;
  const std::size_t r = p.r;
  if (r < 1 || r >= p.n) throw PreconditionError("regular slice: need 1 <= r <= n-1");
  const std::size_t m = p.n - r;
  if (p.c.size() > r - 1 || p.d.size() > m - 1) throw PreconditionError("regular slice: need |c| <= r-1, |d| <= n-r-1");
  std::vector<Scalar> c = p.c;
  std::vector<Scalar> d = p.d;
  c.resize(r - 1, f.zero());
  d.resize(m - 1, f.zero());
  if (p.alpha_rows.size() != r) throw PreconditionError("regular slice: need r alpha rows");
  for (const auto& a : p.alpha_rows) {
    if (a.size() != m) throw PreconditionError("regular slice: alpha rows must have length n-r");
  }
  if (p.beta_top.size() != m) throw PreconditionError("regular slice: beta_top must have length n-r");
  const Scalar c1 = c.empty() ? f.zero() : c[0];
  const Scalar d1 = d.empty() ? f.zero() : d[0];
  if ((c1 * d1).is_one()) throw PreconditionError("regular slice: c1*d1 = 1");
  if (p.alpha_rows[0][0].is_zero()) throw PreconditionError("regular slice: alpha_0 is not cyclic for Y2");
  if (r == 1 && m > 1 && (p.alpha_rows[0][0] - d1 * p.beta_top[0]).is_zero())
    throw PreconditionError("regular slice: alpha_0 - d1*beta_0 is not cyclic for Y2");

  const Matrix x1 = Matrix::jordan_block(f, r);
  Matrix y1(f, r, r);
  for (std::size_t u = 1; u < r; ++u) y1 += c[u - 1] * power(x1, u);
  const Matrix y2 = Matrix::jordan_block(f, m);
  Matrix x2(f, m, m);
  for (std::size_t v = 1; v < m; ++v) x2 += d[v - 1] * power(y2, v);
  const Vector i1 = Vector::unit(f, r, r - 1);

  const auto& alpha = p.alpha_rows;
  std::vector<Vector> beta(r, Vector(f, m));
  beta[r - 1] = p.beta_top;
  for (std::size_t t = r - 1; t >= 1; --t) {
    Vector v = beta[t] * x2 - alpha[t] * y2;
    for (std::size_t u = 1; u <= t; ++u) v += c[u - 1] * alpha[t - u];
    beta[t - 1] = std::move(v);
  }
  Vector j2 = beta[0] * x2 - alpha[0] * y2;

  Matrix x3(f, r, m);
  Matrix y3(f, r, m);
  Vector v = i1;
  for (std::size_t t = 0; t < r; ++t) {
    x3 += Matrix::outer(v, alpha[t]);
    y3 += Matrix::outer(v, beta[t]);
    v = x1 * v;
  }
  Quadruple q = assemble(f, x1, y1, i1, x2, y2, x3, y3, j2);
  if (!is_in_N(q)) throw InternalError("regular slice: assembled point is not in N");
  return q;
}

namespace {

std::optional<Quadruple> jump_once(const Quadruple& q, Rng& rng) {
  const FieldSpec f = q.field;
  const std::size_t n = q.n;
  const Staircase lambda = right_module(q.X, q.Y, q.i);
  const std::size_t r = lambda.size();
  const std::size_t m = n - r;
  Matrix p = Matrix::from_columns(f, n, complete_basis(lambda.basis, f, n));
  Quadruple local = conjugate(q, checked_inverse(p));

  SliceData s;
  s.field = f;
  s.r = r;
  s.X1 = local.X.block(0, 0, r, r);
  s.Y1 = local.Y.block(0, 0, r, r);
  s.i1 = local.i.slice(0, r);
  Matrix sm = random_invertible(f, m, rng);
  s.X2 = sm * Matrix::jordan_block(f, m) * checked_inverse(sm);
  s.Y2 = random_polynomial_in(s.X2, rng);
  auto [beta_free, alpha_free] = free_cells(right_module(s.X1, s.Y1, s.i1));
  for (Cell c : beta_free) s.beta[c] = random_vector(f, m, rng);
  for (Cell c : alpha_free) s.alpha[c] = random_vector(f, m, rng);

  Quadruple out = conjugate(build_slice_point(s), p);
  StratumLabel label = classify(out);
  if (label.r >= 1 && label.s >= 1 && label.r + label.s + 1 == n) return out;
  return std::nullopt;
}

} // namespace

JumpSample stratum_jump_sample(const Quadruple& q, std::uint64_t seed) {
  StratumLabel label = classify(q);
  if (label.r + label.s == 0 || label.r + label.s + 1 >= q.n) {
    throw PreconditionError("stratum_jump_sample: need 0 < r + s < n - 1");
  }
  const bool flip = label.r == 0;
  const Quadruple base = flip ? transpose_dual(q) : q;
  for (std::uint64_t k = 0; k < 64; ++k) {
    Rng rng(seed + k);
    if (auto out = jump_once(base, rng)) {
      Quadruple point = flip ? transpose_dual_inverse(*out) : *out;
      return {point, classify(point).r, seed + k};
    }
  }
  throw ResampleExhausted("stratum_jump_sample: 64 seeds without reaching a stratum (t, n-1-t)");
}

} // namespace nvl
