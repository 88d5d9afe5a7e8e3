#include "nvl/hilbert_fiber.hpp"

#include "nvl/errors.hpp"

#include <sstream>

namespace nvl {

const Vector& BorderIdeal::expansion(Cell c) const {
  for (const auto& [cell, v] : border_coeffs) {
    if (cell == c) return v;
  }
  throw PreconditionError("expansion: not a border cell");
}

BorderIdeal annihilator_ideal(const Matrix& X, const Matrix& Y, const Vector& i) {
  if (i.is_zero()) throw PreconditionError("annihilator_ideal: i = 0");
  BorderIdeal ideal;
  ideal.staircase = right_module(X, Y, i);
  for (Cell c : ideal.staircase.border()) {
    Vector w = power(X, static_cast<std::size_t>(c.a)) * (power(Y, static_cast<std::size_t>(c.b)) * i);
    auto coords = coordinates(ideal.staircase.basis, w);
    if (!coords) throw InternalError("annihilator_ideal: border monomial escapes K[X,Y]i");
    ideal.border_coeffs.emplace_back(c, std::move(*coords));
  }
  return ideal;
}

namespace {

void require_middle_stratum(const Quadruple& q, const char* who) {
  StratumLabel label = classify(q);
  if (label.r < 1 || label.r + 2 > q.n || label.r + label.s + 1 != q.n) {
    throw PreconditionError(std::string(who) + ": quadruple is not in a stratum (t, n-1-t) with 1 <= t <= n-2");
  }
}

std::vector<Vector> krylov_chain(const Matrix& m, const Vector& v, std::size_t len) {
  std::vector<Vector> out{v};
  while (out.size() < len) out.push_back(m * out.back());
  return out;
}

// i' from the proof, with `reg` the operator acting regularly on K[X,Y]i and c
// the coordinates of reg*w in the basis {reg^k i}.
Vector normalize_w(const Matrix& reg, const Vector& w, const Vector& i, const Vector& c) {
  const std::size_t t = c.size();
  Vector out = w;
  Vector pw = i; // reg^{k-1} i
  for (std::size_t k = 1; k < t; ++k) {
    out -= c[k] * pw;
    pw = reg * pw;
  }
  out *= c[0].inverse();
  return out;
}

// Coefficient list (k = 1..t) of other * i' in the basis {reg^k i'}.
std::vector<Scalar> ideal_coeffs(const Matrix& reg, const Matrix& other, const Vector& ip, std::size_t t) {
  auto chain = krylov_chain(reg, ip, t + 1);
  auto coords = coordinates(chain, other * ip);
  if (!coords) throw InternalError("psi: i' is not cyclic for the regular operator");
  if (!(*coords)[0].is_zero()) throw InternalError("psi: ideal generator has a constant term");
  return {coords->entries().begin() + 1, coords->entries().end()};
}

PrincipalIdeal right_ideal(const Quadruple& q, std::size_t t) {
  CyclicExtension ext = extend_cyclic(q);
  if (ext.axis == Axis::YRegular) return {Axis::YRegular, ideal_coeffs(q.Y, q.X, ext.i_prime, t)};
  return {Axis::XRegular, ideal_coeffs(q.X, q.Y, ext.i_prime, t)};
}

} // namespace

CyclicExtension extend_cyclic(const Quadruple& q) {
  require_middle_stratum(q, "extend_cyclic");
  const Staircase right = right_module(q.X, q.Y, q.i);
  const Staircase left = left_module(q.X, q.Y, q.j);
  const std::size_t t = right.size();

  Matrix f = Matrix::from_rows(q.field, q.n, left.basis);
  SpanBuilder v1(q.field, q.n);
  for (const auto& e : right.basis) v1.add(e);
  Vector w;
  for (auto& cand : nullspace(f)) {
    if (!v1.contains(cand)) {
      w = std::move(cand);
      break;
    }
  }
  if (w.empty()) throw InternalError("extend_cyclic: (jK[X,Y])^perp equals K[X,Y]i");

  const std::size_t one = right.index_of({0, 0});
  auto pc = coordinates(right.basis, q.X * w);
  auto qc = coordinates(right.basis, q.Y * w);
  if (!pc || !qc) throw InternalError("extend_cyclic: Xw or Yw leaves K[X,Y]i");

  auto build = [&](const Matrix& reg, Axis axis) {
    auto chain = krylov_chain(reg, q.i, t);
    auto c = coordinates(chain, reg * w);
    if (!c || span_dim(chain, q.field, q.n) != t) {
      throw InternalError("extend_cyclic: operator with cyclic constant term is not regular on K[X,Y]i");
    }
    return CyclicExtension{normalize_w(reg, w, q.i, *c), axis};
  };
  if (!(*qc)[one].is_zero()) return build(q.Y, Axis::YRegular);
  if (!(*pc)[one].is_zero()) return build(q.X, Axis::XRegular);
  throw InternalError("extend_cyclic: neither Xw nor Yw has a constant term");
}

std::vector<Scalar> series_reversion(const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) return {};
  const FieldSpec field = coeffs[0].field();
  if (coeffs[0].is_zero()) throw PreconditionError("series_reversion: linear coefficient is zero");
  const std::size_t m = coeffs.size() + 1; // work modulo u^m
  // Polynomials as coefficient vectors of length m (index = degree).
  auto mul = [&](const std::vector<Scalar>& p, const std::vector<Scalar>& r) {
    std::vector<Scalar> out(m, field.zero());
    for (std::size_t x = 0; x < m; ++x) {
      if (p[x].is_zero()) continue;
      for (std::size_t y = 0; x + y < m; ++y) out[x + y] += p[x] * r[y];
    }
    return out;
  };
  std::vector<Scalar> inv(m, field.zero());
  const Scalar c1inv = coeffs[0].inverse();
  for (std::size_t k = 1; k < m; ++k) {
    // Coefficient of u^k in B(A) with a_k still zero.
    std::vector<Scalar> acc(m, field.zero());
    std::vector<Scalar> pw(m, field.zero());
    pw[0] = field.one();
    for (std::size_t e = 1; e < m; ++e) {
      pw = mul(pw, inv);
      for (std::size_t d = 0; d < m; ++d) acc[d] += coeffs[e - 1] * pw[d];
    }
    Scalar target = k == 1 ? field.one() : field.zero();
    inv[k] = (target - acc[k]) * c1inv;
  }
  return {inv.begin() + 1, inv.end()};
}

PrincipalIdeal reorient(const PrincipalIdeal& ideal, Axis preferred) {
  if (ideal.axis == preferred || ideal.coeffs.empty() || ideal.coeffs[0].is_zero()) return ideal;
  return {preferred, series_reversion(ideal.coeffs)};
}

BorderIdeal to_border_ideal(const PrincipalIdeal& ideal, FieldSpec field) {
  const std::size_t m = ideal.coeffs.size() + 1;
  const bool yreg = ideal.axis == Axis::YRegular;
  auto cell = [&](int other, int reg) { return yreg ? Cell{other, reg} : Cell{reg, other}; };
  BorderIdeal out;
  out.staircase.side = Side::Right;
  for (std::size_t k = m; k-- > 0;) out.staircase.monomials.push_back(cell(0, static_cast<int>(k)));
  // Staircase positions: monomials[p] = u^{m-1-p}.
  auto pos = [&](std::size_t deg) { return m - 1 - deg; };
  for (Cell c : out.staircase.border()) {
    Vector v(field, m);
    const int other = yreg ? c.a : c.b;
    const int reg = yreg ? c.b : c.a;
    if (other == 1) {
      // x u^reg = u^reg A(u) modulo u^m.
      const auto shift = static_cast<std::size_t>(reg);
      for (std::size_t k = 1; k + shift < m; ++k) v[pos(k + shift)] = ideal.coeffs[k - 1];
    } else if (other == 0 && static_cast<std::size_t>(reg) == m) {
      // u^m vanishes.
    } else {
      throw InternalError("to_border_ideal: unexpected border cell");
    }
    out.border_coeffs.emplace_back(c, std::move(v));
  }
  return out;
}

namespace {

void append_term(std::ostringstream& os, const Scalar& c, const std::string& var, std::size_t k) {
  if (c.is_zero()) return;
  bool negative = c.field().kind() == FieldKind::Rationals && sgn(c.rational()) < 0;
  Scalar mag = negative ? -c : c;
  os << (negative ? " + " : " - ");
  if (!mag.is_one()) {
    std::string s = mag.to_string();
    if (s.find('/') != std::string::npos) s = "(" + s + ")";
    os << s;
  }
  os << var;
  if (k > 1) os << '^' << k;
}

} // namespace

std::string format_ideal(const PrincipalIdeal& ideal) {
  const bool yreg = ideal.axis == Axis::YRegular;
  const std::string reg = yreg ? "y" : "x";
  const std::string other = yreg ? "x" : "y";
  std::ostringstream os;
  os << "⟨" << reg << '^' << ideal.coeffs.size() + 1 << ", " << other;
  for (std::size_t k = 0; k < ideal.coeffs.size(); ++k) append_term(os, ideal.coeffs[k], reg, k + 1);
  os << "⟩";
  return os.str();
}

std::string format_psi(const PsiImage& image) { return format_ideal(image.right()) + " ; " + format_ideal(image.left()); }

PsiImage psi(const Quadruple& q) {
  require_middle_stratum(q, "psi");
  const std::size_t t = classify(q).r;
  PrincipalIdeal right = reorient(right_ideal(q, t), Axis::YRegular);
  PrincipalIdeal left = reorient(right_ideal(transpose_dual(q), q.n - 1 - t), Axis::XRegular);
  return {t, right.axis, right.coeffs, left.axis, left.coeffs};
}

} // namespace nvl
