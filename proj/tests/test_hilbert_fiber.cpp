#include "doctest.h"
#include "support.hpp"

using namespace nvl;
using namespace nvl::testing;

namespace {

// p(u) with zero constant term: coefficients of u, u^2, ...
std::vector<Scalar> compose_mod(const std::vector<Scalar>& outer, const std::vector<Scalar>& inner, std::size_t m,
                                FieldSpec f) {
  std::vector<Scalar> result(m, f.zero());
  std::vector<Scalar> inner_full(m, f.zero());
  for (std::size_t k = 0; k < inner.size() && k + 1 < m; ++k) inner_full[k + 1] = inner[k];
  std::vector<Scalar> pw(m, f.zero());
  pw[0] = f.one();
  for (std::size_t e = 1; e <= outer.size(); ++e) {
    std::vector<Scalar> next(m, f.zero());
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; x + y < m; ++y) next[x + y] += pw[x] * inner_full[y];
    pw = next;
    for (std::size_t d = 0; d < m; ++d) result[d] += outer[e - 1] * pw[d];
  }
  return result;
}

// Multiplication operators on K[x,y]/I for the principal ideal, in the basis
// 1, u, ..., u^{m-1} of the regular variable u.
std::pair<Matrix, Matrix> quotient_operators(const PrincipalIdeal& ideal, FieldSpec f) {
  const std::size_t m = ideal.coeffs.size() + 1;
  Matrix u(f, m, m);
  for (std::size_t k = 0; k + 1 < m; ++k) u(k + 1, k) = f.one();
  Matrix other(f, m, m);
  for (std::size_t k = 0; k < ideal.coeffs.size(); ++k) other += ideal.coeffs[k] * power(u, k + 1);
  if (ideal.axis == Axis::YRegular) return {other, u};
  return {u, other};
}

void check_same_ideal(const PrincipalIdeal& a, const PrincipalIdeal& b, FieldSpec f) {
  // b's generators vanish on the quotient by a (equal codimension makes the ideals equal).
  REQUIRE(a.coeffs.size() == b.coeffs.size());
  auto [x, y] = quotient_operators(a, f);
  const std::size_t m = a.coeffs.size() + 1;
  const Matrix& reg = b.axis == Axis::YRegular ? y : x;
  const Matrix& oth = b.axis == Axis::YRegular ? x : y;
  CHECK(power(reg, m).is_zero());
  Matrix rhs(f, m, m);
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) rhs += b.coeffs[k] * power(reg, k + 1);
  CHECK(oth == rhs);
}

} // namespace

TEST_CASE("annihilator ideal examples") {
  FieldSpec f = q_field();
  Matrix x = Matrix::unit(f, 3, 0, 1) + Matrix::unit(f, 3, 1, 2);
  Matrix z = Matrix::zero(f, 3, 3);
  BorderIdeal ideal = annihilator_ideal(x, z, Vector::unit(f, 3, 2));
  CHECK(ideal.codimension() == 3);
  CHECK(ideal.staircase.to_string() == "(0,0) (1,0) (2,0)");
  for (const auto& [cell, v] : ideal.border_coeffs) CHECK(v.is_zero());
  CHECK(ideal.expansion({3, 0}).is_zero());
  CHECK_THROWS_AS(ideal.expansion({1, 0}), PreconditionError);

  BorderIdeal point = annihilator_ideal(z, z, Vector::unit(f, 3, 0));
  CHECK(point.codimension() == 1);
  CHECK(point.staircase.border() == std::vector<Cell>{{0, 1}, {1, 0}});
  Quadruple b = basic_point();
  CHECK(annihilator_ideal(b.X, b.Y, b.i).codimension() == 1);
  CHECK_THROWS_AS(annihilator_ideal(x, z, Vector(f, 3)), PreconditionError);
}

TEST_CASE("annihilator codimension equals r on random points") {
  Rng rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    Quadruple q = random_N_point(rng, 5);
    if (q.i.is_zero()) continue;
    BorderIdeal ideal = annihilator_ideal(q.X, q.Y, q.i);
    CHECK(ideal.codimension() == classify(q).r);
    // Every border monomial acts as its expansion.
    for (const auto& [c, coeffs] : ideal.border_coeffs) {
      Vector lhs = power(q.X, static_cast<std::size_t>(c.a)) * (power(q.Y, static_cast<std::size_t>(c.b)) * q.i);
      Vector rhs(q.field, q.n);
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        rhs += coeffs[k] * ideal.staircase.basis[k];
        if (!coeffs[k].is_zero()) CHECK(lexdeg_less(c, ideal.staircase.monomials[k]));
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("extend_cyclic examples") {
  Quadruple b = basic_point();
  CyclicExtension ext = extend_cyclic(b);
  CHECK(ext.axis == Axis::YRegular);
  CHECK(ext.i_prime == Vector::unit(b.field, 3, 1));
  CHECK(b.Y * ext.i_prime == b.i);

  FieldSpec f = q_field();
  Quadruple c = canonical_quadruple({4, 2, {f.zero(), f.zero()}, {f.zero()}, f});
  CyclicExtension e2 = extend_cyclic(c);
  const Matrix& reg = e2.axis == Axis::YRegular ? c.Y : c.X;
  CHECK(reg * e2.i_prime == c.i);

  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    Quadruple moved = conjugate(b, random_invertible(f, 3, rng));
    CyclicExtension em = extend_cyclic(moved);
    const Matrix& rm = em.axis == Axis::YRegular ? moved.Y : moved.X;
    CHECK(rm * em.i_prime == moved.i);
    // i' spans, together with K[X,Y]i, the annihilator of jK[X,Y].
    CHECK(dot(moved.j, em.i_prime).is_zero());
    CHECK(dot(moved.j * moved.X, em.i_prime).is_zero());
    CHECK(dot(moved.j * moved.Y, em.i_prime).is_zero());
  }
  CHECK_THROWS_AS(extend_cyclic(Quadruple::zero(f, 3)), PreconditionError);
}

TEST_CASE("series reversion inverts under substitution") {
  Rng rng(99);
  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(series_reversion({f7.from_int(1)}) == std::vector<Scalar>{f7.from_int(1)});
  FieldSpec q = q_field();
  // u + u^2 reverts to u - u^2 + 2u^3 - 5u^4 (Catalan signs).
  auto rev = series_reversion({q.one(), q.one(), q.zero(), q.zero()});
  CHECK(rev == std::vector<Scalar>{q.from_int(1), q.from_int(-1), q.from_int(2), q.from_int(-5)});
  CHECK_THROWS_AS(series_reversion({q.zero(), q.one()}), PreconditionError);
  for (int trial = 0; trial < 60; ++trial) {
    FieldSpec f = random_field(rng);
    std::size_t k = uniform(rng, 1, 6);
    std::vector<Scalar> c;
    c.push_back(random_nonzero_scalar(f, rng));
    for (std::size_t e = 1; e < k; ++e) c.push_back(random_scalar(f, rng));
    auto inv = series_reversion(c);
    REQUIRE(inv.size() == k);
    std::vector<Scalar> ident(k + 1, f.zero());
    ident[1] = f.one();
    CHECK(compose_mod(c, inv, k + 1, f) == ident);
    CHECK(compose_mod(inv, c, k + 1, f) == ident);
  }
}

TEST_CASE("reorient and the two encodings give the same ideal") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    FieldSpec f = random_field(rng);
    std::size_t k = uniform(rng, 1, 5);
    PrincipalIdeal a{(trial & 1) ? Axis::YRegular : Axis::XRegular, {}};
    for (std::size_t e = 0; e < k; ++e) a.coeffs.push_back(random_scalar(f, rng));
    if (trial % 3 == 0) a.coeffs[0] = f.zero();
    Axis other = a.axis == Axis::YRegular ? Axis::XRegular : Axis::YRegular;
    PrincipalIdeal b = reorient(a, other);
    if (a.coeffs[0].is_zero()) {
      CHECK(b == a);
    } else {
      CHECK(b.axis == other);
      check_same_ideal(a, b, f);
      check_same_ideal(b, a, f);
      CHECK(reorient(b, a.axis) == a);
    }
    CHECK(reorient(a, a.axis) == a);

    // Border-ideal view agrees with the annihilator of 1 in the quotient.
    auto [x, y] = quotient_operators(a, f);
    BorderIdeal direct = to_border_ideal(a, f);
    CHECK(direct.codimension() == k + 1);
    BorderIdeal ann = annihilator_ideal(x, y, Vector::unit(f, k + 1, 0));
    CHECK(ann.codimension() == k + 1);
    if (ann.staircase.monomials == direct.staircase.monomials) {
      REQUIRE(ann.border_coeffs.size() == direct.border_coeffs.size());
      for (std::size_t e = 0; e < ann.border_coeffs.size(); ++e) {
        CHECK(ann.border_coeffs[e].first == direct.border_coeffs[e].first);
        CHECK(ann.border_coeffs[e].second == direct.border_coeffs[e].second);
      }
    }
  }
}

TEST_CASE("psi examples") {
  Quadruple b = basic_point();
  PsiImage img = psi(b);
  CHECK(img.t == 1);
  CHECK(img.right_orientation == Axis::YRegular);
  CHECK(img.left_orientation == Axis::XRegular);
  CHECK(img.a == std::vector<Scalar>{b.field.zero()});
  CHECK(img.b == std::vector<Scalar>{b.field.zero()});
  CHECK(format_psi(img) == "⟨y^2, x⟩ ; ⟨x^2, y⟩");

  FieldSpec f = q_field();
  CanonicalParams p{3, 1, {f.from_int(2)}, {f.from_int(3)}, f};
  PsiImage pi = psi(canonical_quadruple(p));
  CHECK(pi.a == p.a);
  CHECK(pi.b == p.b);
  CHECK(pi == p.expected_psi());
  CHECK(format_psi(pi) == "⟨y^2, x - 2y⟩ ; ⟨x^2, y - 3x⟩");

  CHECK_THROWS_AS(psi(Quadruple::zero(f, 3)), PreconditionError);
}

TEST_CASE("psi is constant on orbits") {
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    FieldSpec f = random_field(rng);
    std::size_t n = uniform(rng, 3, 6);
    CanonicalParams p = random_params(rng, f, n);
    Quadruple q = canonical_quadruple(p);
    Quadruple moved = conjugate(q, random_invertible(f, n, rng));
    PsiImage a = psi(q);
    CHECK(a == psi(moved));
    CHECK(a == p.expected_psi());
    CHECK(a.a.size() == p.t);
    CHECK(a.b.size() == n - 1 - p.t);
  }
}

TEST_CASE("psi of slice points in the middle strata") {
  Rng rng(66);
  int seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    FieldSpec f = random_field(rng);
    std::size_t n = uniform(rng, 3, 6);
    std::size_t r = uniform(rng, 1, n - 2);
    Quadruple q = regular_slice_point(random_regular_params(rng, f, n, r));
    StratumLabel label = classify(q);
    REQUIRE(label.r + label.s + 1 == n);
    Quadruple moved = conjugate(q, random_invertible(f, n, rng));
    PsiImage img = psi(q);
    CHECK(img == psi(moved));
    CHECK(img.t == label.r);
    // Round trip through the normal form when both sides are in standard orientation.
    if (img.right_orientation == Axis::YRegular && img.left_orientation == Axis::XRegular &&
        !(img.a[0] * img.b[0]).is_one()) {
      Quadruple c = canonical_quadruple({n, img.t, img.a, img.b, f});
      CHECK(psi(c) == img);
      ++seen;
    }
  }
  CHECK(seen > 20);
}
