#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>

namespace nvl {

class Scalar;

enum class FieldKind { Rationals, PrimeField };

/// The ground field: either Q or F_p for a prime p.
class FieldSpec {
public:
  /// Rationals.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const { return p_ == 0 ? FieldKind::Rationals : FieldKind::PrimeField; }
  bool is_prime_field() const { return p_ != 0; }
  /// The prime p, or 0 for Q.
  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Accepts "a", "-a" or "a/b" (b != 0). Over F_p the fraction is a*b^{-1}.
  Scalar parse(std::string_view text) const;

  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t p);

/// An exact element of Q or F_p. The default value is the rational zero.
class Scalar {
public:
  Scalar() = default;

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// Throws PreconditionError on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "a/b" with b > 0 and gcd 1 (just "a" when b = 1), or
  /// the residue in [0, p).
  std::string to_string() const;

  /// Residue in [0, p). Only valid over F_p.
  std::uint64_t residue() const;
  /// Only valid over Q.
  const mpq_class& rational() const;

private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  Scalar(std::uint64_t value, std::uint64_t p) : v_(Residue{value, p}) {}

  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> v_;

  friend class FieldSpec;
};

} // namespace nvl
