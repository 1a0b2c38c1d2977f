#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glc/field.hpp"

namespace glc {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector with its weighted degree cached. Exponents are stored
/// inline; arithmetic that would overflow a 16-bit exponent throws.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const int> exponents, std::span<const int> weights);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return e_[i]; }
  int degree() const { return deg_; }
  std::uint32_t mask() const { return mask_; }
  bool is_one() const { return mask_ == 0; }
  int total_exponent() const;

  bool divides(const Monomial& o) const {
    if (mask_ & ~o.mask_) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e_[i] > o.e_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& o) const { return (mask_ & o.mask_) == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial pow(int k) const;

  bool operator==(const Monomial& o) const {
    return deg_ == o.deg_ && mask_ == o.mask_ && e_ == o.e_;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  std::size_t hash() const;

  std::vector<int> exponents() const { return {e_.begin(), e_.begin() + n_}; }

 private:
  friend class GradedRingSpec;
  void recompute_mask();

  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
  std::int32_t deg_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind {
  WeightedGrevlex,  ///< weighted degree, then reverse lexicographic
  Lex,              ///< pure lexicographic, first variable largest
  Elimination,      ///< weighted grevlex on the first block, then on the rest
};

struct MonomialOrder {
  OrderKind kind = OrderKind::WeightedGrevlex;
  std::size_t block = 0;  ///< size of the eliminated leading block

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

/// Ambient polynomial ring k[x_1..x_n] with positive weights deg x_i = d_i.
class GradedRingSpec {
 public:
  GradedRingSpec(std::vector<std::string> variables, std::vector<int> weights, FieldSpec field,
                 MonomialOrder order = {});

  static std::shared_ptr<const GradedRingSpec> make(std::vector<std::string> variables,
                                                    std::vector<int> weights, FieldSpec field,
                                                    MonomialOrder order = {}) {
    return std::make_shared<const GradedRingSpec>(std::move(variables), std::move(weights),
                                                  std::move(field), order);
  }

  std::size_t nvars() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  int max_weight() const { return max_weight_; }
  /// Sum of the variable weights.
  int degree_sum() const { return degree_sum_; }
  const FieldSpec& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  bool graded_order() const { return order_.kind == OrderKind::WeightedGrevlex; }

  /// >0 if a > b, <0 if a < b, 0 if equal, in this ring's monomial order.
  int compare(const Monomial& a, const Monomial& b) const;

  Monomial one() const { return Monomial(nvars()); }
  Monomial monomial(std::span<const int> exponents) const;
  Monomial variable_monomial(std::size_t i, int power = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial gcd(const Monomial& a, const Monomial& b) const;

  /// Weighted degree of a monomial given as an exponent list; throws
  /// StructuralError on a length mismatch.
  int weighted_degree(std::span<const int> exponents) const;

  /// Same variables, weights and field, different monomial order.
  std::shared_ptr<const GradedRingSpec> with_order(MonomialOrder order) const;

  bool operator==(const GradedRingSpec& o) const;
  bool operator!=(const GradedRingSpec& o) const { return !(*this == o); }

 private:
  int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  std::vector<std::string> variables_;
  std::vector<int> weights_;
  FieldSpec field_;
  MonomialOrder order_;
  int degree_sum_ = 0;
  int max_weight_ = 1;
};

using RingPtr = std::shared_ptr<const GradedRingSpec>;

/// All monomials of weighted degree t (empty for t < 0), in decreasing order.
std::vector<Monomial> monomials_of_degree(const GradedRingSpec& ring, int t);

/// Calls visit(m) for each monomial of weighted degree t.
template <typename Visit>
void for_each_monomial_of_degree(const GradedRingSpec& ring, int t, Visit&& visit);

}  // namespace glc

#include "glc/ring_inl.hpp"
