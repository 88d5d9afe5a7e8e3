#pragma once

#include "nvl/hilbert_fiber.hpp"

#include <optional>
#include <vector>

namespace nvl {

/// Orbit parameters of N_{t,n-1-t}: a has t entries, b has n-1-t, a_1 b_1 != 1.
struct CanonicalParams {
  std::size_t n = 0;
  std::size_t t = 0;
  std::vector<Scalar> a;
  std::vector<Scalar> b;
  FieldSpec field;

  /// Throws PreconditionError on wrong sizes, fields, or a_1 b_1 = 1.
  void validate() const;
  /// The Psi image this orbit should have.
  PsiImage expected_psi() const;
  friend bool operator==(const CanonicalParams&, const CanonicalParams&) = default;
};

Quadruple canonical_quadruple(const CanonicalParams& p);

struct StabilizerReport {
  std::size_t dim = 0;
  std::vector<Matrix> basis;
};

/// {Z : ZX = XZ, ZY = YZ, Zi = 0, jZ = 0}. Shapes are validated, membership is not:
/// the same solve serves points of S.
StabilizerReport stabilizer(const Quadruple& q);

/// Same as stabilizer() but requires q in N.
StabilizerReport stabilizer_dim(const Quadruple& q);

struct OrbitResult {
  bool equivalent = false;
  std::optional<Matrix> conjugator;
};

/// Intertwiner search: G X1 = X2 G, G Y1 = Y2 G, G i1 = i2, j1 = j2 G.
/// Points of N_{t,n-1-t} (1 <= t <= n-2) are compared by psi first; other points
/// by their stratum label and then the intertwiner system alone. Throws
/// SearchExhausted if the system is consistent but no invertible solution was found.
OrbitResult orbit_equivalent(const Quadruple& q1, const Quadruple& q2);

/// True iff G carries q1 to q2.
bool is_conjugator(const Quadruple& q1, const Quadruple& q2, const Matrix& g);

/// (G X G^{-1}, G Y G^{-1}, G i, j G^{-1}).
Quadruple conjugate(const Quadruple& q, const Matrix& g);

} // namespace nvl
