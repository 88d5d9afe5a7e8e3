#include "doctest.h"
#include "support.hpp"

using namespace nvl;
using namespace nvl::testing;

TEST_CASE("canonical quadruple round trip on random parameters") {
  Rng rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    FieldSpec f = (trial & 1) ? q_field() : f101();
    std::size_t n = uniform(rng, 3, 6);
    CanonicalParams p = random_params(rng, f, n);
    Quadruple q = canonical_quadruple(p);
    REQUIRE(is_in_N(q));
    CHECK(classify(q) == StratumLabel{p.t, n - 1 - p.t, false});
    PsiImage img = psi(q);
    CHECK(img.t == p.t);
    CHECK(img.a == p.a);
    CHECK(img.b == p.b);
    CHECK(stabilizer_dim(q).dim == 1);
    CHECK(rank(commutator(q.X, q.Y)) == 1);
  }
}

TEST_CASE("n = 8, t = 4 normal form has the displayed shape") {
  FieldSpec f = q_field();
  std::vector<Scalar> a{f.from_int(2), f.from_int(-3), f.from_int(5), f.from_int(7)};
  std::vector<Scalar> b{f.from_int(11), f.from_int(-13), f.from_int(17)};
  Quadruple q = canonical_quadruple({8, 4, a, b, f});
  REQUIRE(is_in_N(q));
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      Scalar ex = f.zero();
      if (r < 4 && c > r && c <= 4) ex = a[c - r - 1];
      if (r >= 4 && c == r + 1) ex = f.one();
      CAPTURE(r);
      CAPTURE(c);
      CHECK(q.X(r, c) == ex);

      if (r < 3 && (c == 5 || c == 6)) continue; // determined by the rank-one condition
      Scalar ey = f.zero();
      if (r < 4 && c == r + 1) ey = f.one();
      if (r >= 4 && c > r) ey = b[c - r - 1];
      CHECK(q.Y(r, c) == ey);
    }
  }
  // The y entries are not all forced to zero.
  bool any = false;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 5; c < 7; ++c) any = any || !q.Y(r, c).is_zero();
  CHECK(any);
  CHECK(q.i[3].is_one());
  for (std::size_t k = 4; k < 8; ++k) CHECK(q.i[k].is_zero());
  CHECK(psi(q) == PsiImage{4, Axis::YRegular, a, Axis::XRegular, b});
}

TEST_CASE("canonical quadruple preconditions") {
  FieldSpec f = q_field();
  CHECK_THROWS_AS(canonical_quadruple({4, 2, {f.one(), f.zero()}, {f.one()}, f}), PreconditionError);
  CHECK_THROWS_AS(canonical_quadruple({4, 2, {f.one()}, {f.one()}, f}), PreconditionError);
  CHECK_THROWS_AS(canonical_quadruple({2, 1, {f.one()}, {}, f}), PreconditionError);
  CHECK_THROWS_AS(canonical_quadruple({4, 2, {f101().one(), f.zero()}, {f.zero()}, f}), PreconditionError);
}

TEST_CASE("canonical (3, 1, 0, 0) lies in the orbit of the basic point") {
  FieldSpec f = q_field();
  Quadruple c = canonical_quadruple({3, 1, {f.zero()}, {f.zero()}, f});
  Quadruple b = basic_point();
  OrbitResult res = orbit_equivalent(c, b);
  CHECK(res.equivalent);
  REQUIRE(res.conjugator);
  CHECK(is_conjugator(c, b, *res.conjugator));
}

TEST_CASE("stabilizer examples") {
  Quadruple b = basic_point();
  StabilizerReport rep = stabilizer_dim(b);
  CHECK(rep.dim == 1);
  REQUIRE(rep.basis.size() == 1);
  const Matrix& z = rep.basis[0];
  CHECK(!z(0, 2).is_zero());
  CHECK((z - z(0, 2) * Matrix::unit(b.field, 3, 0, 2)).is_zero());

  FieldSpec f = q_field();
  CHECK(stabilizer_dim(Quadruple::zero(f, 2)).dim == 4);
  Quadruple reg = make_quadruple(f, Matrix::jordan_block(f, 2), Matrix::zero(f, 2, 2), Vector::unit(f, 2, 1), Vector(f, 2));
  CHECK(stabilizer_dim(reg).dim == 0);

  Quadruple bad = make_quadruple(f, Matrix::unit(f, 2, 0, 1), Matrix::unit(f, 2, 1, 0), Vector(f, 2), Vector(f, 2));
  CHECK_THROWS_AS(stabilizer_dim(bad), PreconditionError);
}

TEST_CASE("stabilizer basis satisfies the four conditions and is conjugation invariant") {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Quadruple q = random_N_point(rng, 5);
    StabilizerReport rep = stabilizer_dim(q);
    CHECK(rep.basis.size() == rep.dim);
    for (const Matrix& z : rep.basis) {
      CHECK(z * q.X == q.X * z);
      CHECK(z * q.Y == q.Y * z);
      CHECK((z * q.i).is_zero());
      CHECK((q.j * z).is_zero());
    }
    Quadruple moved = conjugate(q, random_invertible(q.field, q.n, rng));
    CHECK(stabilizer_dim(moved).dim == rep.dim);
  }
}

TEST_CASE("orbit_equivalent examples") {
  FieldSpec f = q_field();
  Quadruple q0 = canonical_quadruple({3, 1, {f.zero()}, {f.zero()}, f});
  Quadruple q1 = canonical_quadruple({3, 1, {f.from_int(2)}, {f.from_int(3)}, f});
  OrbitResult diff = orbit_equivalent(q0, q1);
  CHECK_FALSE(diff.equivalent);
  CHECK_FALSE(diff.conjugator);

  Rng rng(21);
  Quadruple c = canonical_quadruple({4, 1, {f.from_int(5)}, {f.zero(), f.zero()}, f});
  Matrix g = random_invertible(f, 4, rng);
  Quadruple moved = conjugate(c, g);
  OrbitResult same = orbit_equivalent(c, moved);
  CHECK(same.equivalent);
  REQUIRE(same.conjugator);
  CHECK(is_conjugator(c, moved, *same.conjugator));

  // Different strata and commuting points.
  Quadruple other = canonical_quadruple({4, 2, {f.one(), f.one()}, {f.zero()}, f});
  CHECK_FALSE(orbit_equivalent(c, other).equivalent);
  CHECK_FALSE(orbit_equivalent(Quadruple::zero(f, 4), c).equivalent);
  OrbitResult zz = orbit_equivalent(Quadruple::zero(f, 4), Quadruple::zero(f, 4));
  CHECK(zz.equivalent);
}

TEST_CASE("orbit_equivalent behaves as an equivalence relation on samples") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    FieldSpec f = random_field(rng);
    std::size_t n = uniform(rng, 3, 5);
    Quadruple q = canonical_quadruple(random_params(rng, f, n));
    Quadruple q2 = conjugate(q, random_invertible(f, n, rng));
    Quadruple q3 = conjugate(q2, random_invertible(f, n, rng));
    OrbitResult refl = orbit_equivalent(q, q);
    CHECK(refl.equivalent);
    OrbitResult ab = orbit_equivalent(q, q2);
    OrbitResult ba = orbit_equivalent(q2, q);
    OrbitResult bc = orbit_equivalent(q2, q3);
    OrbitResult ac = orbit_equivalent(q, q3);
    REQUIRE(ab.conjugator);
    REQUIRE(ba.conjugator);
    REQUIRE(bc.conjugator);
    REQUIRE(ac.conjugator);
    CHECK(is_conjugator(q, q2, *ab.conjugator));
    CHECK(is_conjugator(q2, q, *ba.conjugator));
    CHECK(is_conjugator(q, q3, *bc.conjugator * *ab.conjugator));
    CHECK(is_conjugator(q, q3, *ac.conjugator));
  }
}

TEST_CASE("orbit_equivalent over a small prime field") {
  Rng rng(5);
  FieldSpec f = FieldSpec::prime(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = uniform(rng, 3, 4);
    Quadruple q = canonical_quadruple(random_params(rng, f, n));
    Quadruple moved = conjugate(q, random_invertible(f, n, rng));
    OrbitResult res = orbit_equivalent(q, moved);
    CHECK(res.equivalent);
    REQUIRE(res.conjugator);
    CHECK(is_conjugator(q, moved, *res.conjugator));
  }
}

TEST_CASE("conjugate examples") {
  Quadruple b = basic_point();
  FieldSpec f = b.field;
  CHECK(conjugate(b, Matrix::identity(f, 3)) == b);
  Quadruple two = conjugate(b, f.from_int(2) * Matrix::identity(f, 3));
  CHECK(two.X == b.X);
  CHECK(two.Y == b.Y);
  CHECK(two.i == f.from_int(2) * b.i);
  CHECK(two.j == f.parse("1/2") * b.j);
  Matrix g = Matrix::from_ints(f, {{1, 2, 0}, {0, 1, 3}, {0, 0, 1}});
  Quadruple moved = conjugate(b, g);
  CHECK(is_in_N(moved));
  CHECK(is_conjugator(b, moved, g));
  CHECK_FALSE(is_conjugator(b, moved, Matrix::identity(f, 3)));
  CHECK_THROWS_AS(conjugate(b, Matrix::identity(f, 2)), PreconditionError);
}
