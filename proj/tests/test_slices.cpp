#include "doctest.h"
#include "support.hpp"

using namespace nvl;
using namespace nvl::testing;

namespace {

std::vector<Cell> cells_of(const Staircase& s) { return s.cells(); }

} // namespace

TEST_CASE("free cells") {
  FieldSpec f = q_field();
  // lambda = {1, x, y}
  Matrix x = Matrix::unit(f, 3, 1, 2);
  Matrix y = Matrix::unit(f, 3, 0, 2);
  Staircase lam = right_module(x, y, Vector::unit(f, 3, 2));
  REQUIRE(lam.to_string() == "(0,0) (0,1) (1,0)");
  auto [beta, alpha] = free_cells(lam);
  CHECK(beta == std::vector<Cell>{{0, 1}, {1, 0}});
  CHECK(alpha == std::vector<Cell>{{0, 1}, {1, 0}});
  CHECK(beta.size() + alpha.size() == lam.size() + 1);

  Matrix line = Matrix::unit(f, 3, 0, 1) + Matrix::unit(f, 3, 1, 2);
  Staircase row = right_module(line, Matrix::zero(f, 3, 3), Vector::unit(f, 3, 2));
  auto [b2, a2] = free_cells(row);
  CHECK(b2 == std::vector<Cell>{{2, 0}});
  CHECK(a2.size() == 3);
}

TEST_CASE("slice example r = 1, n = 3") {
  FieldSpec f = q_field();
  SliceData s;
  s.field = f;
  s.r = 1;
  s.X1 = Matrix::zero(f, 1, 1);
  s.Y1 = Matrix::zero(f, 1, 1);
  s.i1 = Vector::from_ints(f, {1});
  s.X2 = Matrix::unit(f, 2, 0, 1);
  s.Y2 = Matrix::zero(f, 2, 2);
  s.alpha[{0, 0}] = Vector::from_ints(f, {5, 7});
  s.beta[{0, 0}] = Vector::from_ints(f, {2, 3});
  Quadruple q = build_slice_point(s);
  CHECK(q.X == Matrix::from_ints(f, {{0, 5, 7}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(q.Y == Matrix::from_ints(f, {{0, 2, 3}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(q.i == Vector::from_ints(f, {1, 0, 0}));
  CHECK(q.j == Vector::from_ints(f, {0, 0, 2}));
  CHECK(commutator_defect(q.X, q.Y, q.i, q.j).is_zero());

  SliceData zero = s;
  zero.alpha[{0, 0}] = Vector(f, 2);
  zero.beta[{0, 0}] = Vector(f, 2);
  Quadruple z = build_slice_point(zero);
  CHECK(z.j.is_zero());
  CHECK(z.X == Matrix::unit(f, 3, 1, 2));
  CHECK(z.Y.is_zero());
  CHECK(classify(z).commuting);

  SliceData missing = s;
  missing.beta.clear();
  CHECK_THROWS_AS(build_slice_point(missing), PreconditionError);
  SliceData noncommuting = s;
  noncommuting.Y2 = Matrix::unit(f, 2, 1, 0);
  CHECK_THROWS_AS(build_slice_point(noncommuting), PreconditionError);
}

TEST_CASE("degenerate slice with r = n") {
  FieldSpec f = q_field();
  SliceData s;
  s.field = f;
  s.r = 2;
  s.X1 = Matrix::jordan_block(f, 2);
  s.Y1 = Matrix::zero(f, 2, 2);
  s.i1 = Vector::unit(f, 2, 1);
  s.X2 = Matrix::zero(f, 0, 0);
  s.Y2 = Matrix::zero(f, 0, 0);
  Quadruple q = build_slice_point(s);
  CHECK(q.X == s.X1);
  CHECK(q.Y == s.Y1);
  CHECK(q.i == s.i1);
  CHECK(q.j.is_zero());
}

TEST_CASE("random slice points satisfy the moment map and keep (r, lambda)") {
  Rng rng(808);
  for (int trial = 0; trial < 300; ++trial) {
    FieldSpec f = random_field(rng);
    std::size_t n = uniform(rng, 2, 6);
    std::size_t r = uniform(rng, 1, n - 1);
    SliceData s = random_slice_data(rng, f, n, r);
    Quadruple q = build_slice_point(s);
    CHECK(commutator_defect(q.X, q.Y, q.i, q.j).is_zero());
    CHECK(is_in_N(q));
    CHECK(q.X.block(0, 0, r, r) == s.X1);
    CHECK(q.Y.block(0, 0, r, r) == s.Y1);
    CHECK(q.X.block(r, r, n - r, n - r) == s.X2);
    CHECK(q.Y.block(r, r, n - r, n - r) == s.Y2);
    StratumLabel label = classify(q);
    CHECK(label.r == r);
    CHECK(cells_of(right_module(q.X, q.Y, q.i)) == cells_of(right_module(s.X1, s.Y1, s.i1)));
  }
}

TEST_CASE("regular slice examples") {
  FieldSpec f = q_field();
  RegularSliceParams p;
  p.field = f;
  p.n = 3;
  p.r = 1;
  p.alpha_rows = {Vector::from_ints(f, {1, 0})};
  p.beta_top = Vector::from_ints(f, {4, -1});
  CHECK(classify(regular_slice_point(p)) == StratumLabel{1, 1, false});

  Rng rng(9);
  RegularSliceParams g;
  g.field = f;
  g.n = 4;
  g.r = 2;
  g.c = {f.zero()};
  g.d = {f.zero()};
  g.alpha_rows = {Vector::from_ints(f, {3, 1}), random_vector(f, 2, rng)};
  g.beta_top = random_vector(f, 2, rng);
  CHECK(classify(regular_slice_point(g)) == StratumLabel{2, 1, false});

  RegularSliceParams bad = g;
  bad.c = {f.one()};
  bad.d = {f.one()};
  CHECK_THROWS_AS(regular_slice_point(bad), PreconditionError);
  RegularSliceParams acyclic = g;
  acyclic.alpha_rows[0] = Vector::from_ints(f, {0, 1});
  CHECK_THROWS_AS(regular_slice_point(acyclic), PreconditionError);

  // r = 1: j' = (d1 beta_0 - alpha_0) Y2 + ..., so alpha_0 = d1 beta_0 in the
  // leading slot drops the left module.
  RegularSliceParams one = p;
  one.d = {f.from_int(2)};
  one.beta_top = Vector::from_ints(f, {4, -1});
  one.alpha_rows = {Vector::from_ints(f, {8, 5})};
  CHECK_THROWS_AS(regular_slice_point(one), PreconditionError);
  one.alpha_rows = {Vector::from_ints(f, {7, 5})};
  CHECK(classify(regular_slice_point(one)) == StratumLabel{1, 1, false});

  RegularSliceParams padded = g;
  padded.c.clear();
  padded.d.clear();
  CHECK(regular_slice_point(padded) == regular_slice_point(g));
  RegularSliceParams too_long = g;
  too_long.d = {f.zero(), f.zero()};
  CHECK_THROWS_AS(regular_slice_point(too_long), PreconditionError);
}

TEST_CASE("random regular slices land in N_{r, n-1-r}") {
  Rng rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    FieldSpec f = random_field(rng);
    std::size_t n = uniform(rng, 2, 6);
    std::size_t r = uniform(rng, 1, n - 1);
    Quadruple q = regular_slice_point(random_regular_params(rng, f, n, r));
    CHECK(classify(q) == StratumLabel{r, n - 1 - r, n - 1 - r == 0});
  }
}

TEST_CASE("stratum jump examples") {
  FieldSpec f = q_field();
  Quadruple line = make_quadruple(f, Matrix::zero(f, 3, 3), Matrix::zero(f, 3, 3), Vector::unit(f, 3, 0), Vector(f, 3));
  JumpSample a = stratum_jump_sample(line, 1);
  CHECK(classify(a.point) == StratumLabel{1, 1, false});
  CHECK(a.t == 1);

  Quadruple pad = make_quadruple(f, Matrix::unit(f, 4, 0, 1), Matrix::zero(f, 4, 4), Vector::unit(f, 4, 1), Vector(f, 4));
  REQUIRE(classify(pad) == StratumLabel{2, 0, true});
  JumpSample b = stratum_jump_sample(pad, 7);
  StratumLabel lb = classify(b.point);
  CHECK((b.t == 1 || b.t == 2));
  CHECK(lb.r == b.t);
  CHECK(lb.s == 3 - b.t);

  CHECK_THROWS_AS(stratum_jump_sample(basic_point(), 1), PreconditionError);
  CHECK_THROWS_AS(stratum_jump_sample(Quadruple::zero(f, 3), 1), PreconditionError);

  Quadruple dual = transpose_dual(line);
  JumpSample c = stratum_jump_sample(dual, 3);
  CHECK(classify(c.point) == StratumLabel{1, 1, false});
}

TEST_CASE("stratum jump from random commuting points") {
  Rng rng(2718);
  int done = 0;
  while (done < 40) {
    FieldSpec f = random_field(rng);
    std::size_t n = uniform(rng, 3, 5);
    Quadruple q = random_commuting_point(rng, f, n);
    StratumLabel label = classify(q);
    if (label.r + label.s == 0 || label.r + label.s + 1 >= n) continue;
    ++done;
    JumpSample js = stratum_jump_sample(q, rng());
    StratumLabel out = classify(js.point);
    CHECK(out.r == js.t);
    CHECK(out.r + out.s + 1 == n);
    CHECK(out.r >= 1);
    CHECK(out.s >= 1);
  }
}
