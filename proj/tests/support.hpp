#pragma once

#include "nvl/census.hpp"
#include "nvl/errors.hpp"
#include "nvl/hilbert_fiber.hpp"
#include "nvl/krylov_strata.hpp"
#include "nvl/linalg.hpp"
#include "nvl/normal_forms.hpp"
#include "nvl/random.hpp"
#include "nvl/s_variety.hpp"
#include "nvl/slices.hpp"

#include <cstdint>
#include <vector>

namespace nvl::testing {

inline FieldSpec q_field() { return FieldSpec::rationals(); }
inline FieldSpec f101() { return FieldSpec::prime(101); }

inline FieldSpec random_field(Rng& rng) { return (rng() & 1) ? q_field() : f101(); }

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline Quadruple make_quadruple(FieldSpec f, Matrix X, Matrix Y, Vector i, Vector j) {
  Quadruple q;
  q.n = X.rows();
  q.field = f;
  q.X = std::move(X);
  q.Y = std::move(Y);
  q.i = std::move(i);
  q.j = std::move(j);
  return q;
}

/// (e23, e12, e1, e3*), 1-based names.
inline Quadruple basic_point(FieldSpec f = q_field()) {
  return make_quadruple(f, Matrix::unit(f, 3, 1, 2), Matrix::unit(f, 3, 0, 1), Vector::unit(f, 3, 0),
                        Vector::unit(f, 3, 2));
}

inline CanonicalParams random_params(Rng& rng, FieldSpec f, std::size_t n) {
  CanonicalParams p;
  p.n = n;
  p.field = f;
  p.t = uniform(rng, 1, n - 2);
  for (;;) {
    p.a.clear();
    p.b.clear();
    for (std::size_t k = 0; k < p.t; ++k) p.a.push_back(random_scalar(f, rng));
    for (std::size_t k = 0; k + 1 + p.t < n; ++k) p.b.push_back(random_scalar(f, rng));
    if (!(p.a[0] * p.b[0]).is_one()) return p;
  }
}

/// Commuting nilpotent pair: X with a random Jordan type, Y a polynomial in X
/// plus a random part commuting with both when possible, then conjugated.
inline std::pair<Matrix, Matrix> random_commuting_pair(Rng& rng, FieldSpec f, std::size_t n) {
  Matrix x(f, n, n);
  std::size_t start = 0;
  while (start < n) {
    std::size_t len = uniform(rng, 1, n - start);
    for (std::size_t k = start; k + 1 < start + len; ++k) x(k, k + 1) = f.one();
    start += len;
  }
  Matrix y = random_polynomial_in(x, rng);
  Matrix g = random_invertible(f, n, rng);
  Matrix gi = checked_inverse(g);
  return {g * x * gi, g * y * gi};
}

/// A point with i != 0, j = 0 or the transpose of one (so i = 0).
inline Quadruple random_commuting_point(Rng& rng, FieldSpec f, std::size_t n) {
  auto [x, y] = random_commuting_pair(rng, f, n);
  Quadruple q = make_quadruple(f, x, y, random_vector(f, n, rng), Vector(f, n));
  if (rng() % 3 == 0) q.i = Vector(f, n);
  return (rng() & 1) ? transpose_dual(q) : q;
}

/// Random slice data over a random (X1, Y1, i1) with a cyclic vector.
inline SliceData random_slice_data(Rng& rng, FieldSpec f, std::size_t n, std::size_t r) {
  SliceData s;
  s.field = f;
  s.r = r;
  for (;;) {
    auto [x1, y1] = random_commuting_pair(rng, f, r);
    Vector i1 = random_vector(f, r, rng);
    if (right_module(x1, y1, i1).size() == r) {
      s.X1 = x1;
      s.Y1 = y1;
      s.i1 = i1;
      break;
    }
  }
  auto [x2, y2] = random_commuting_pair(rng, f, n - r);
  s.X2 = x2;
  s.Y2 = y2;
  auto [beta_cells, alpha_cells] = free_cells(right_module(s.X1, s.Y1, s.i1));
  for (Cell c : beta_cells) s.beta[c] = random_vector(f, n - r, rng);
  for (Cell c : alpha_cells) s.alpha[c] = random_vector(f, n - r, rng);
  return s;
}

inline RegularSliceParams random_regular_params(Rng& rng, FieldSpec f, std::size_t n, std::size_t r) {
  RegularSliceParams p;
  p.field = f;
  p.n = n;
  p.r = r;
  for (;;) {
    p.c.clear();
    p.d.clear();
    for (std::size_t k = 1; k < r; ++k) p.c.push_back(random_scalar(f, rng));
    for (std::size_t k = 1; k < n - r; ++k) p.d.push_back(random_scalar(f, rng));
    Scalar c1 = p.c.empty() ? f.zero() : p.c[0];
    Scalar d1 = p.d.empty() ? f.zero() : p.d[0];
    if (!(c1 * d1).is_one()) break;
  }
  p.alpha_rows.clear();
  for (std::size_t k = 0; k < r; ++k) p.alpha_rows.push_back(random_vector(f, n - r, rng));
  p.alpha_rows[0][0] = random_nonzero_scalar(f, rng);
  Scalar d1 = p.d.empty() ? f.zero() : p.d[0];
  do {
    p.beta_top = random_vector(f, n - r, rng);
  } while (r == 1 && n > 2 && (p.alpha_rows[0][0] - d1 * p.beta_top[0]).is_zero());
  return p;
}

/// Mixed sample of N: conjugated canonical points, slice points, regular
/// slices, commuting points.
inline Quadruple random_N_point(Rng& rng, std::size_t n_max) {
  FieldSpec f = random_field(rng);
  std::size_t n = uniform(rng, 1, n_max);
  Quadruple q;
  switch (rng() % 4) {
  case 0:
    if (n >= 3) {
      q = canonical_quadruple(random_params(rng, f, n));
      break;
    }
    [[fallthrough]];
  case 1:
    if (n >= 2) {
      q = build_slice_point(random_slice_data(rng, f, n, uniform(rng, 1, n - 1)));
      break;
    }
    [[fallthrough]];
  case 2:
    if (n >= 2) {
      q = regular_slice_point(random_regular_params(rng, f, n, uniform(rng, 1, n - 1)));
      break;
    }
    [[fallthrough]];
  default:
    q = random_commuting_point(rng, f, n);
  }
  return conjugate(q, random_invertible(f, n, rng));
}

/// dim of span of all words w(X,Y) i of length <= maxlen, by breadth-first closure.
inline std::size_t word_closure_dim(const Matrix& X, const Matrix& Y, const Vector& i, std::size_t maxlen) {
  SpanBuilder span(i.field(), i.size());
  std::vector<Vector> frontier{i};
  span.add(i);
  for (std::size_t len = 0; len < maxlen; ++len) {
    std::vector<Vector> next;
    for (const Vector& v : frontier) {
      for (const Matrix* m : {&X, &Y}) {
        Vector w = *m * v;
        if (span.add(w)) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return span.dim();
}

inline std::size_t word_closure_dim_left(const Matrix& X, const Matrix& Y, const Vector& j, std::size_t maxlen) {
  return word_closure_dim(X.transpose(), Y.transpose(), j, maxlen);
}

} // namespace nvl::testing
