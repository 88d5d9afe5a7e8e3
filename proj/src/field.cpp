#include "nvl/field.hpp"

#include "nvl/errors.hpp"

#include <charconv>

namespace nvl {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class m = v % mpz_class(static_cast<unsigned long>(p));
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

} // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw PreconditionError("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  return FieldSpec(p);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long long v) const {
  if (p_ == 0) return Scalar(mpq_class(mpz_class(static_cast<signed long>(v))));
  return Scalar(reduce_signed(v, p_), p_);
}

Scalar FieldSpec::from_mpz(const mpz_class& v) const {
  if (p_ == 0) return Scalar(mpq_class(v));
  return Scalar(reduce_mpz(v, p_), p_);
}

Scalar FieldSpec::parse(std::string_view text) const {
  auto bad = [&]() { return PreconditionError("malformed scalar \"" + std::string(text) + "\""); };
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::size_t k = 0;
    if (s[0] == '-' || s[0] == '+') k = 1;
    if (k == s.size()) throw bad();
    for (std::size_t m = k; m < s.size(); ++m) {
      if (s[m] < '0' || s[m] > '9') throw bad();
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return mpz_class(digits, 10);
  };
  auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw PreconditionError("zero denominator in \"" + std::string(text) + "\"");
  if (p_ == 0) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  Scalar d = from_mpz(den);
  if (d.is_zero()) throw PreconditionError("denominator vanishes mod " + std::to_string(p_));
  return from_mpz(num) / d;
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return FieldSpec::prime(r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1 % r->p;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&v_);
  const auto* b = std::get_if<Residue>(&o.v_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p)) {
    throw PreconditionError("scalar field mismatch: " + field().name() + " vs " + o.field().name());
  }
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&v_)) {
    return Scalar(r->value == 0 ? 0 : r->p - r->value, r->p);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value += std::get<Residue>(o.v_).value;
    if (r->value >= r->p) r->value -= r->p;
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t b = std::get<Residue>(o.v_).value;
    r->value = r->value >= b ? r->value - b : r->value + r->p - b;
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = mul_mod(r->value, std::get<Residue>(o.v_).value, r->p);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (const auto* r = std::get_if<Residue>(&v_)) {
    return Scalar(pow_mod(r->value, r->p - 2, r->p), r->p);
  }
  mpq_class inv(1);
  inv /= std::get<mpq_class>(v_);
  return Scalar(std::move(inv));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::uint64_t Scalar::residue() const {
  const auto* r = std::get_if<Residue>(&v_);
  if (r == nullptr) throw PreconditionError("residue() on a rational scalar");
  return r->value;
}

const mpq_class& Scalar::rational() const {
  const auto* q = std::get_if<mpq_class>(&v_);
  if (q == nullptr) throw PreconditionError("rational() on a residue");
  return *q;
}

} // namespace nvl
