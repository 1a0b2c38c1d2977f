#include "glc/field.hpp"

#include "glc/error.hpp"

namespace glc {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw StructuralError("scalar arithmetic across different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (p_) {
    std::uint32_t s = std::get<std::uint32_t>(v_) + std::get<std::uint32_t>(o.v_);
    if (s >= p_) s -= p_;
    return Scalar(s, p_);
  }
  Scalar r;
  mpq_add(std::get<mpq_class>(r.v_).get_mpq_t(), rational().get_mpq_t(),
          o.rational().get_mpq_t());
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (p_) {
    std::uint32_t a = std::get<std::uint32_t>(v_);
    std::uint32_t b = std::get<std::uint32_t>(o.v_);
    return Scalar(a >= b ? a - b : a + p_ - b, p_);
  }
  Scalar r;
  mpq_sub(std::get<mpq_class>(r.v_).get_mpq_t(), rational().get_mpq_t(),
          o.rational().get_mpq_t());
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (p_) return Scalar(mulmod(residue(), o.residue(), p_), p_);
  Scalar r;
  mpq_mul(std::get<mpq_class>(r.v_).get_mpq_t(), rational().get_mpq_t(),
          o.rational().get_mpq_t());
  return r;
}

Scalar Scalar::operator-() const {
  if (p_) {
    std::uint32_t a = residue();
    return Scalar(a == 0 ? 0 : p_ - a, p_);
  }
  Scalar r;
  mpq_neg(std::get<mpq_class>(r.v_).get_mpq_t(), rational().get_mpq_t());
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (p_) return Scalar(powmod(residue(), p_ - 2, p_), p_);
  Scalar r;
  mpq_inv(std::get<mpq_class>(r.v_).get_mpq_t(), rational().get_mpq_t());
  return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (p_) return Scalar(powmod(residue(), e, p_), p_);
  Scalar r;
  mpz_pow_ui(std::get<mpq_class>(r.v_).get_num_mpz_t(), rational().get_num_mpz_t(), e);
  mpz_pow_ui(std::get<mpq_class>(r.v_).get_den_mpz_t(), rational().get_den_mpz_t(), e);
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  if (p_) return residue() == o.residue();
  return rational() == o.rational();
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(residue());
  return rational().get_str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw DomainError("characteristic too large: " + std::to_string(p));
  if (!is_prime(p)) throw DomainError("characteristic is not prime: " + std::to_string(p));
  return FieldSpec(FieldKind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  const std::string prefix = "Fp:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 12) {
      throw DomainError("bad prime field descriptor: " + text);
    }
    return prime(std::stoull(digits));
  }
  throw DomainError("unknown field descriptor '" + text + "' (expected Q or Fp:<prime>)");
}

Scalar FieldSpec::from_int(long long v) const {
  if (kind_ == FieldKind::Rationals) return Scalar(mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r), p_);
}

Scalar FieldSpec::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DomainError("zero denominator");
  if (kind_ == FieldKind::Rationals) return Scalar(mpq_class(num, den));
  mpz_class pm(p_);
  mpz_class n = num % pm;
  if (n < 0) n += pm;
  mpz_class d = den % pm;
  if (d < 0) d += pm;
  if (d == 0) throw DomainError("denominator divisible by the characteristic");
  return Scalar(static_cast<std::uint32_t>(n.get_ui()), p_) /
         Scalar(static_cast<std::uint32_t>(d.get_ui()), p_);
}

Scalar FieldSpec::from_rational(const mpq_class& q) const {
  return from_fraction(q.get_num(), q.get_den());
}

std::string FieldSpec::to_string() const {
  if (kind_ == FieldKind::Rationals) return "Q";
  return "Fp:" + std::to_string(p_);
}

}  // namespace glc
