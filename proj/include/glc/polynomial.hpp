#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glc/ring.hpp"

namespace glc {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Element of a GradedRingSpec. Terms are kept sorted decreasing in the
/// ring's monomial order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial from_monomial(RingPtr ring, const Monomial& m, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  /// Sorts, combines equal monomials and drops zero terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Takes terms already sorted and free of zeros and duplicates.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Scalar& leading_coeff() const { return terms_.front().coeff; }
  bool is_constant() const { return terms_.empty() || (size() == 1 && terms_[0].mono.is_one()); }

  /// All terms share one weighted degree (the zero polynomial counts).
  bool is_homogeneous() const;
  /// Weighted degree when homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const;
  /// Largest weighted degree among the terms; throws on zero.
  int max_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial monic() const;
  /// Entrywise q-th power of monomials; in characteristic p with q a power
  /// of p this is the Frobenius f -> f^q.
  Polynomial frobenius(unsigned q) const;
  /// Ring map sending variable i to images[i].
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;
  /// Same polynomial re-sorted for a ring with identical variables but a
  /// different monomial order.
  Polynomial reorder(const RingPtr& target) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };

/// Exact ring arithmetic; throws StructuralError if the rings differ.
Polynomial poly_op(const Polynomial& f, const Polynomial& g, PolyOp op);

/// Parses "x^2*y - 3/2*z^3 + (x+y)^2". Throws ParseError (line 1) on bad
/// input or unknown variables.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text, int line = 1);

std::string monomial_to_string(const GradedRingSpec& ring, const Monomial& m);

}  // namespace glc
