#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "glc/polynomial.hpp"

namespace glc {

/// One term c * m * e_comp of a free-module element.
struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Scalar coeff;
};

/// Per-level data for a Schreyer (induced) order. Basis element i of this
/// level maps to an element whose leading term is lead[i] * e_{lead_comp[i]}
/// one level down.
struct SchreyerLevel {
  std::vector<Monomial> total;             // product of leading monomials down to the base
  std::vector<std::uint32_t> base_comp;    // component reached in the base module
  std::vector<std::uint32_t> lead_comp;    // component one level down
  std::shared_ptr<const SchreyerLevel> below;  // null when one level down is the base
};

class ModuleOrder {
 public:
  enum class Kind { TermOverPosition, Block, Schreyer };

  ModuleOrder() = default;

  /// Degree (basis twists included), then the ring order, then component index.
  static ModuleOrder term_over_position(RingPtr ring, std::vector<int> twists);
  /// Components below `split` dominate; term-over-position inside each block.
  static ModuleOrder block(RingPtr ring, std::vector<int> twists, std::uint32_t split);
  /// Order induced through `level` from a term-over-position base order.
  static ModuleOrder schreyer(RingPtr ring, std::vector<int> twists,
                              std::shared_ptr<const ModuleOrder> base,
                              std::shared_ptr<const SchreyerLevel> level);

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& twists() const { return twists_; }
  std::size_t rank() const { return twists_.size(); }
  std::uint32_t split() const { return split_; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  int compare(const ModTerm& a, const ModTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }
  int degree(const ModTerm& t) const { return t.mono.degree() + twists_[t.comp]; }

 private:
  int top_compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  int schreyer_compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                       std::uint32_t cb) const;

  Kind kind_ = Kind::TermOverPosition;
  RingPtr ring_;
  std::vector<int> twists_;
  std::uint32_t split_ = 0;
  std::shared_ptr<const ModuleOrder> base_;
  std::shared_ptr<const SchreyerLevel> level_;
};

/// Element of a graded free module; terms sorted decreasing in some
/// ModuleOrder, no zero coefficients.
struct ModuleVector {
  std::vector<ModTerm> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  const ModTerm& leading() const { return terms.front(); }
};

namespace vec {

/// Sorts terms, merges duplicates and drops zeros.
ModuleVector normalize(std::vector<ModTerm> terms, const ModuleOrder& order);
ModuleVector add(const ModuleVector& a, const ModuleVector& b, const ModuleOrder& order);
ModuleVector sub(const ModuleVector& a, const ModuleVector& b, const ModuleOrder& order);
/// a - c * m * b.
ModuleVector sub_mul(const ModuleVector& a, const Scalar& c, const Monomial& m,
                     const ModuleVector& b, const ModuleOrder& order);
ModuleVector scale(const ModuleVector& a, const Scalar& c);
ModuleVector mul_term(const ModuleVector& a, const Monomial& m, const Scalar& c);
/// Multiplies every entry by a polynomial.
ModuleVector mul_poly(const ModuleVector& a, const Polynomial& f, const ModuleOrder& order);
ModuleVector monic(const ModuleVector& a);
ModuleVector negate(const ModuleVector& a);
ModuleVector unit(std::uint32_t comp, const ModuleOrder& order);
/// Entry at a component, as a polynomial of the order's ring.
Polynomial entry(const ModuleVector& a, std::uint32_t comp, const RingPtr& ring);
/// Entries as polynomials, one per component of a rank-`rank` module.
std::vector<Polynomial> entries(const ModuleVector& a, std::size_t rank, const RingPtr& ring);
ModuleVector from_entries(const std::vector<Polynomial>& entries, const ModuleOrder& order);
ModuleVector from_polynomial(const Polynomial& f, std::uint32_t comp, const ModuleOrder& order);
/// Degree of the leading term (twists included).
int degree(const ModuleVector& a, const ModuleOrder& order);
bool is_homogeneous(const ModuleVector& a, const ModuleOrder& order);
/// Re-sorts for another order on the same free module.
ModuleVector reorder(const ModuleVector& a, const ModuleOrder& order);
/// Applies f to each component index and re-sorts under `order`.
template <typename F>
ModuleVector remap(const ModuleVector& a, F&& f, const ModuleOrder& order) {
  std::vector<ModTerm> t = a.terms;
  for (auto& term : t) term.comp = f(term.comp);
  return normalize(std::move(t), order);
}
bool equal(const ModuleVector& a, const ModuleVector& b);
std::string to_string(const ModuleVector& a, const GradedRingSpec& ring);

}  // namespace vec

}  // namespace glc
