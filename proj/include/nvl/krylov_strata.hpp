#pragma once

#include "nvl/linalg.hpp"

#include <compare>
#include <string>
#include <vector>

namespace nvl {

/// A point (X, Y, i, j) of gl_n x gl_n x V x V*. Membership in N is checked by
/// is_in_N, never assumed. Points of S reuse this carrier with (A, B) in (X, Y).
struct Quadruple {
  std::size_t n = 0;
  FieldSpec field;
  Matrix X;
  Matrix Y;
  Vector i;
  Vector j;

  static Quadruple zero(FieldSpec field, std::size_t n);
  /// Throws PreconditionError on inconsistent shapes or fields.
  void validate() const;
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// Exponent pair (a, b) of the monomial x^a y^b.
struct Cell {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Strict lex-deg order 1 < x < y < x^2 < xy < y^2 < ...
bool lexdeg_less(Cell u, Cell v);

enum class Side { Right, Left };

/// The monomials chosen by the greedy lex-deg scan together with the vectors
/// they produce (m(X,Y) i on the right, j m(X,Y) on the left).
struct Staircase {
  Side side = Side::Right;
  /// Descending: monomials.front() is the largest, monomials.back() is 1.
  std::vector<Cell> monomials;
  std::vector<Vector> basis;

  std::size_t size() const { return monomials.size(); }
  bool empty() const { return monomials.empty(); }
  bool contains(Cell c) const;
  /// Position of c in `monomials`, or size() when absent.
  std::size_t index_of(Cell c) const;
  /// Cells sorted by (a, b).
  std::vector<Cell> cells() const;
  /// {(a,b) in lambda : (a+1,b) in lambda}.
  std::vector<Cell> lambda_x() const;
  std::vector<Cell> lambda_y() const;
  /// Cells outside lambda with a predecessor (a-1,b) or (a,b-1) in lambda.
  std::vector<Cell> border() const;
  bool is_young() const;
  /// "(0,0) (1,0) ..." in (a, b) order.
  std::string to_string() const;
};

struct StratumLabel {
  std::size_t r = 0;
  std::size_t s = 0;
  bool commuting = false;
  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

bool is_in_N(const Quadruple& q);

Staircase right_module(const Matrix& X, const Matrix& Y, const Vector& i);
Staircase left_module(const Matrix& X, const Matrix& Y, const Vector& j);

/// Throws PreconditionError if q is not in N.
StratumLabel classify(const Quadruple& q);

/// G whose columns e_1..e_n make X, Y upper triangular, with e_r = i and the
/// (n+1-s)-th row of G^{-1} equal to j.
Matrix adapted_basis(const Quadruple& q);

/// G with G^{-1} X G and G^{-1} Y G strictly upper triangular.
Matrix triangularize_pair(const Quadruple& q);

/// (X^T, Y^T, -j^T, i^T). Maps N to N and swaps the roles of r and s.
Quadruple transpose_dual(const Quadruple& q);
/// Inverse of transpose_dual: (X^T, Y^T, j^T, -i^T).
Quadruple transpose_dual_inverse(const Quadruple& q);

std::string to_string(const StratumLabel& label);

} // namespace nvl
