#pragma once

#include "nvl/krylov_strata.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nvl {

/// A point of the punctual Hilbert fiber: staircase plus the expansion of each
/// border monomial in the staircase basis (coefficients indexed like
/// staircase.monomials).
struct BorderIdeal {
  Staircase staircase;
  std::vector<std::pair<Cell, Vector>> border_coeffs;

  std::size_t codimension() const { return staircase.size(); }
  /// Coefficients of the border monomial c; throws PreconditionError if c is not a border cell.
  const Vector& expansion(Cell c) const;
};

/// {p : p(X,Y) i = 0}. Throws PreconditionError when i = 0.
BorderIdeal annihilator_ideal(const Matrix& X, const Matrix& Y, const Vector& i);

enum class Axis { YRegular, XRegular };

struct CyclicExtension {
  Vector i_prime;
  /// YRegular: Y i' = i. XRegular: X i' = i.
  Axis axis = Axis::YRegular;
};

/// Cyclic vector of (jK[X,Y])^perp for q in N_{t,n-1-t}, 1 <= t <= n-2.
CyclicExtension extend_cyclic(const Quadruple& q);

/// One side of Psi. YRegular encodes <y^{m}, x - c_1 y - ... - c_{m-1} y^{m-1}>,
/// XRegular encodes <x^{m}, y - c_1 x - ... - c_{m-1} x^{m-1}>, where
/// m = coeffs.size() + 1.
struct PrincipalIdeal {
  Axis axis = Axis::YRegular;
  std::vector<Scalar> coeffs;
  friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;
};

struct PsiImage {
  std::size_t t = 0;
  Axis right_orientation = Axis::YRegular;
  std::vector<Scalar> a;
  Axis left_orientation = Axis::XRegular;
  std::vector<Scalar> b;

  PrincipalIdeal right() const { return {right_orientation, a}; }
  PrincipalIdeal left() const { return {left_orientation, b}; }
  friend bool operator==(const PsiImage&, const PsiImage&) = default;
};

PsiImage psi(const Quadruple& q);

/// Compositional inverse of c_1 u + ... + c_k u^k modulo u^{k+1}. Needs c_1 != 0.
std::vector<Scalar> series_reversion(const std::vector<Scalar>& coeffs);

/// Rewrites into `preferred` orientation when the first coefficient is nonzero;
/// otherwise the ideal has only one principal form and is returned unchanged.
PrincipalIdeal reorient(const PrincipalIdeal& ideal, Axis preferred);

/// Ideal generated by the principal form, as a border ideal on its staircase
/// {1, u, ..., u^{m-1}} for the regular variable u.
BorderIdeal to_border_ideal(const PrincipalIdeal& ideal, FieldSpec field);

std::string format_ideal(const PrincipalIdeal& ideal);
/// "<y^2, x - 2y> ; <x^2, y - 3x>" with angle brackets.
std::string format_psi(const PsiImage& image);

} // namespace nvl
