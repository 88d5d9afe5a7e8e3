#pragma once

#include "nvl/krylov_strata.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace nvl {

/// Data for a point of N_{X1,Y1,i}: the upper-left block (X1, Y1, i1) on K^r, a
/// commuting nilpotent pair (X2, Y2) on V' = K^{n-r}, and the free covectors.
/// beta is keyed by lambda \ lambda_x, alpha by lambda minus the first-column
/// cells of lambda_y.
struct SliceData {
  FieldSpec field;
  std::size_t r = 0;
  Matrix X1;
  Matrix Y1;
  /// Length r.
  Vector i1;
  Matrix X2;
  Matrix Y2;
  std::map<Cell, Vector> alpha;
  std::map<Cell, Vector> beta;

  std::size_t n() const { return r + X2.rows(); }
};

/// Cells at which free beta (first) and alpha (second) covectors must be given.
std::pair<std::vector<Cell>, std::vector<Cell>> free_cells(const Staircase& lambda);

Quadruple build_slice_point(const SliceData& s);

struct RegularSliceParams {
  FieldSpec field;
  std::size_t n = 0;
  std::size_t r = 0;
  /// Y1 = sum c_u X1^u, u = 1..r-1. Missing trailing entries are zero.
  std::vector<Scalar> c;
  /// X2 = sum d_v Y2^v, v = 1..n-r-1. Missing trailing entries are zero.
  std::vector<Scalar> d;
  /// alpha_0 .. alpha_{r-1}, each of length n-r.
  std::vector<Vector> alpha_rows;
  /// beta_{r-1}.
  Vector beta_top;
};

/// Lands in N_{r,n-1-r} when c1*d1 != 1 and alpha_0 is cyclic for Y2; for
/// r = 1 there is no recursion and the condition is on alpha_0 - d1*beta_0.
Quadruple regular_slice_point(const RegularSliceParams& p);

struct JumpSample {
  Quadruple point;
  std::size_t t = 0;
  std::uint64_t seed_used = 0;
};

/// Resamples the V' part of the slice through q (or through its transpose when
/// i = 0) so that the result lies in N_{t,n-1-t}. Tries seeds seed, seed+1, ...
/// up to 64 of them.
JumpSample stratum_jump_sample(const Quadruple& q, std::uint64_t seed);

} // namespace nvl
