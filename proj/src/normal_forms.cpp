#include "nvl/normal_forms.hpp"

#include "nvl/errors.hpp"
#include "nvl/random.hpp"

namespace nvl {

void CanonicalParams::validate() const {
  if (n < 3 || t < 1 || t + 2 > n) throw PreconditionError("canonical params: need 1 <= t <= n-2");
  if (a.size() != t || b.size() != n - 1 - t) throw PreconditionError("canonical params: need |a| = t and |b| = n-1-t");
  for (const auto& s : a) {
    if (!(s.field() == field)) throw PreconditionError("canonical params: coefficient field mismatch");
  }
  for (const auto& s : b) {
    if (!(s.field() == field)) throw PreconditionError("canonical params: coefficient field mismatch");
  }
  if ((a[0] * b[0]).is_one()) throw PreconditionError("canonical params: a1*b1 = 1");
}

PsiImage CanonicalParams::expected_psi() const { return {t, Axis::YRegular, a, Axis::XRegular, b}; }

Quadruple canonical_quadruple(const CanonicalParams& p) {
  p.validate();
  const std::size_t n = p.n;
  const std::size_t t = p.t;
  const std::size_t m = n - 1 - t;
  const FieldSpec f = p.field;
  Quadruple q = Quadruple::zero(f, n);

  // 0-based: rows/cols [0, t) block 1, index t block 2, (t, n) block 3.
  for (std::size_t r = 0; r < t; ++r) {
    for (std::size_t c = r + 1; c <= t; ++c) q.X(r, c) = p.a[c - r - 1];
  }
  for (std::size_t r = t; r + 1 < n; ++r) q.X(r, r + 1) = f.one();
  for (std::size_t r = 0; r < t; ++r) q.Y(r, r + 1) = f.one();
  for (std::size_t r = t; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) q.Y(r, c) = p.b[c - r - 1];
  }

  // Solve the (1,3) block of [X,Y] = i~ j~ for the free part of Y_13, bottom row first.
  const std::size_t c3 = t + 1;
  Matrix x11 = q.X.block(0, 0, t, t);
  Matrix k13 = (q.X * q.Y - q.Y * q.X).block(0, c3, t, m); // with Y_13 = 0
  std::vector<Vector> y13(t, Vector(f, m));
  Vector jt;
  Vector it(f, t);
  for (std::size_t k = t; k-- > 0;) {
    Vector known = k13.row(k);
    for (std::size_t r = k + 1; r < t; ++r) {
      if (!x11(k, r).is_zero()) known += x11(k, r) * y13[r];
    }
    if (k + 1 == t) {
      jt = known;
      if (jt[0].is_zero()) throw InternalError("canonical_quadruple: leading entry of j~ vanished");
      it[k] = f.one();
      continue;
    }
    Scalar ck = known[0] / jt[0];
    it[k] = ck;
    for (std::size_t l = 1; l < m; ++l) y13[k][l - 1] = known[l] - ck * jt[l];
  }
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t l = 0; l < m; ++l) q.Y(k, c3 + l) = y13[k][l];
  }
  for (std::size_t k = 0; k < t; ++k) q.i[k] = it[k];
  for (std::size_t l = 0; l < m; ++l) q.j[c3 + l] = -jt[l];

  if (!commutator_defect(q.X, q.Y, q.i, q.j).is_zero()) {
    throw InternalError("canonical_quadruple: elimination left a nonzero commutator defect");
  }
  return q;
}

StabilizerReport stabilizer(const Quadruple& q) {
  q.validate();
  const std::size_t n = q.n;
  const std::size_t unknowns = n * n;
  auto z = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vector> eqs;
  for (const Matrix* m : {&q.X, &q.Y}) {
    // (ZM - MZ)_{pc} = sum_k Z_{pk} M_{kc} - M_{pk} Z_{kc}
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t c = 0; c < n; ++c) {
        Vector row(q.field, unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          row[z(p, k)] += (*m)(k, c);
          row[z(k, c)] -= (*m)(p, k);
        }
        eqs.push_back(std::move(row));
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    Vector row(q.field, unknowns);
    for (std::size_t k = 0; k < n; ++k) row[z(p, k)] = q.i[k];
    eqs.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < n; ++c) {
    Vector row(q.field, unknowns);
    for (std::size_t k = 0; k < n; ++k) row[z(k, c)] = q.j[k];
    eqs.push_back(std::move(row));
  }
  StabilizerReport rep;
  for (const auto& v : nullspace(Matrix::from_rows(q.field, unknowns, eqs))) {
    Matrix zm(q.field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) zm(r, c) = v[z(r, c)];
    }
    rep.basis.push_back(std::move(zm));
  }
  rep.dim = rep.basis.size();
  return rep;
}

StabilizerReport stabilizer_dim(const Quadruple& q) {
  if (!is_in_N(q)) throw PreconditionError("stabilizer_dim: quadruple is not in N");
  return stabilizer(q);
}

Quadruple conjugate(const Quadruple& q, const Matrix& g) {
  q.validate();
  if (g.rows() != q.n || g.cols() != q.n) throw PreconditionError("conjugate: G has the wrong size");
  Matrix gi = checked_inverse(g);
  return {q.n, q.field, g * q.X * gi, g * q.Y * gi, g * q.i, q.j * gi};
}

bool is_conjugator(const Quadruple& q1, const Quadruple& q2, const Matrix& g) {
  return g * q1.X == q2.X * g && g * q1.Y == q2.Y * g && g * q1.i == q2.i && q1.j == q2.j * g &&
         rank(g) == q1.n;
}

namespace {

// Affine system for G: returns (particular, kernel) in vec(G) coordinates.
std::optional<Solution> intertwiner_system(const Quadruple& q1, const Quadruple& q2) {
  const std::size_t n = q1.n;
  const std::size_t unknowns = n * n;
  auto g = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vector> eqs;
  std::vector<Scalar> rhs;
  const FieldSpec f = q1.field;
  for (auto [m1, m2] : {std::pair{&q1.X, &q2.X}, std::pair{&q1.Y, &q2.Y}}) {
    // (G M1 - M2 G)_{pc}
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t c = 0; c < n; ++c) {
        Vector row(f, unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          row[g(p, k)] += (*m1)(k, c);
          row[g(k, c)] -= (*m2)(p, k);
        }
        eqs.push_back(std::move(row));
        rhs.push_back(f.zero());
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    Vector row(f, unknowns);
    for (std::size_t k = 0; k < n; ++k) row[g(p, k)] = q1.i[k];
    eqs.push_back(std::move(row));
    rhs.push_back(q2.i[p]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    Vector row(f, unknowns);
    for (std::size_t k = 0; k < n; ++k) row[g(k, c)] = q2.j[k];
    eqs.push_back(std::move(row));
    rhs.push_back(q1.j[c]);
  }
  return solve(Matrix::from_rows(f, unknowns, eqs), Vector(f, rhs));
}

Matrix unvec(const Vector& v, std::size_t n) {
  Matrix m(v.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  }
  return m;
}

std::optional<Matrix> find_invertible(const Solution& sol, std::size_t n) {
  const FieldSpec f = sol.particular.field();
  auto try_vec = [&](const Vector& v) -> std::optional<Matrix> {
    Matrix m = unvec(v, n);
    if (rank(m) == n) return m;
    return std::nullopt;
  };
  if (auto m = try_vec(sol.particular)) return m;
  for (const auto& k : sol.kernel) {
    if (auto m = try_vec(sol.particular + k)) return m;
  }
  if (sol.kernel.empty()) return std::nullopt;
  Rng rng(0x5eedULL);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vector v = sol.particular;
    for (const auto& k : sol.kernel) v += random_scalar(f, rng) * k;
    if (auto m = try_vec(v)) return m;
  }
  if (f.is_prime_field() && f.modulus() <= 7) {
    const auto p = static_cast<long long>(f.modulus());
    const std::size_t d = sol.kernel.size();
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = x; y < d; ++y) {
        for (long long cx = 0; cx < p; ++cx) {
          for (long long cy = 0; cy < (x == y ? 1 : p); ++cy) {
            Vector v = sol.particular + f.from_int(cx) * sol.kernel[x];
            if (x != y) v += f.from_int(cy) * sol.kernel[y];
            if (auto m = try_vec(v)) return m;
          }
        }
      }
    }
  }
  return std::nullopt;
}

} // namespace

OrbitResult orbit_equivalent(const Quadruple& q1, const Quadruple& q2) {
  q1.validate();
  q2.validate();
  if (q1.n != q2.n || !(q1.field == q2.field)) throw PreconditionError("orbit_equivalent: size or field mismatch");
  const StratumLabel l1 = classify(q1);
  const StratumLabel l2 = classify(q2);
  if (!(l1 == l2)) return {false, std::nullopt};
  const bool middle = l1.r >= 1 && l1.r + 2 <= q1.n && l1.r + l1.s + 1 == q1.n;
  if (middle && !(psi(q1) == psi(q2))) return {false, std::nullopt};
  auto sol = intertwiner_system(q1, q2);
  if (!sol) {
    if (middle) throw InternalError("orbit_equivalent: psi agrees but the intertwiner system is inconsistent");
    return {false, std::nullopt};
  }
  auto g = find_invertible(*sol, q1.n);
  if (!g) throw SearchExhausted("orbit_equivalent: no invertible intertwiner found");
  if (!is_conjugator(q1, q2, *g)) throw InternalError("orbit_equivalent: intertwiner failed substitution");
  return {true, std::move(g)};
}

} // namespace nvl
