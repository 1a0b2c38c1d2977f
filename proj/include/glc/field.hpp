#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace glc {

/// An element of Q or of a prime field F_p. Each value carries its
/// characteristic, so arithmetic never needs a separate field handle.
class Scalar {
 public:
  Scalar() : p_(0), v_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : p_(0), v_(std::move(q)) {
    std::get<mpq_class>(v_).canonicalize();
  }
  Scalar(std::uint32_t residue, std::uint32_t p) : p_(p), v_(residue % p) {}

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  bool is_zero() const {
    return p_ ? std::get<std::uint32_t>(v_) == 0 : sgn(std::get<mpq_class>(v_)) == 0;
  }
  bool is_one() const {
    return p_ ? std::get<std::uint32_t>(v_) == 1 : std::get<mpq_class>(v_) == 1;
  }

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Decimal form: "3", "-1/2"; residues print as their representative in [0,p).
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  std::uint32_t p_;
  std::variant<std::uint32_t, mpq_class> v_;
};

enum class FieldKind { Rationals, PrimeField };

/// Coefficient field descriptor. The characteristic is verified prime.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  /// Throws DomainError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<prime>".
  static FieldSpec parse(const std::string& text);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const;
  /// Throws DomainError if den is 0 or (in characteristic p) divisible by p.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  Scalar from_rational(const mpq_class& q) const;

  std::string to_string() const;
  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  FieldSpec(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace glc
