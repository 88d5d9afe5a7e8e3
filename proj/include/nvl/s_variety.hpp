#pragma once

#include "nvl/krylov_strata.hpp"

#include <optional>

namespace nvl {

/// A point (A, B, i, j) of S = {A, B nilpotent, A + B = ij}, stored in the
/// Quadruple carrier with A in X and B in Y.
using SQuadruple = Quadruple;

bool is_in_S(const SQuadruple& q);

/// G with G^{-1} A G and G^{-1} B G strictly upper triangular.
Matrix triangularize_S(const SQuadruple& q);

struct SLabel {
  std::size_t r = 0;
  std::size_t s = 0;
  friend bool operator==(const SLabel&, const SLabel&) = default;
};

/// (dim K[A]i, dim jK[A]).
SLabel classify_S(const SQuadruple& q);

/// True iff j w(A,B) i = 0 for every word w of length <= maxlen. Membership is
/// not required.
bool trace_pairing_check(const SQuadruple& q, std::size_t maxlen);

/// Triangularizing basis whose first r columns are A^{r-1} i, ..., A i, i with
/// r = dim K[A]i.
Matrix s_frame(const SQuadruple& q);

/// The curve A(tau) = tau A + (1 - tau) L, i(tau), j(tau), B = i(tau) j(tau) - A(tau),
/// run in s_frame(q) and mapped back. r defaults to classify_S(q).r; i must be
/// supported on the first r frame vectors and j must vanish on them.
SQuadruple s_deform(const SQuadruple& q, const Scalar& tau, std::optional<std::size_t> r = std::nullopt);

/// A = [[J_r, A'], [0, J_{n-r}]], i = e_r, j = e*_{r+1}, B = ij - A (1-based positions).
SQuadruple s_canonical(std::size_t n, std::size_t r, const Matrix& a_prime);

/// dim {Z : ZA = AZ, ZB = BZ, Zi = 0, jZ = 0}.
std::size_t s_stabilizer_dim(const SQuadruple& q);

} // namespace nvl
