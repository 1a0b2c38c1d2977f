#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glc/module.hpp"

namespace glc {

/// Process-wide default for GroebnerOptions::max_pairs, so one cap governs
/// every Gröbner computation started afterwards.
std::size_t default_max_pairs();
void set_default_max_pairs(std::size_t cap);

struct GroebnerOptions {
  bool reduce_tails = true;
  /// Record which inputs survive the degree-by-degree sweep; for
  /// homogeneous input these form a minimal generating set.
  bool track_minimal = false;
  std::size_t max_pairs = default_max_pairs();
};

struct GroebnerResult {
  std::vector<ModuleVector> basis;         // monic, sorted by increasing lead term
  std::vector<std::size_t> minimal;        // indices into the input (track_minimal only)
};

GroebnerResult groebner_basis(const std::vector<ModuleVector>& gens, const ModuleOrder& order,
                              const GroebnerOptions& options = {});

/// Division by a fixed list of monic vectors whose leads are looked up by
/// component.
class Reducer {
 public:
  struct Quotient {
    std::size_t index;
    Monomial mono;
    Scalar coeff;
  };

  Reducer() = default;
  Reducer(std::vector<ModuleVector> basis, ModuleOrder order);

  const std::vector<ModuleVector>& basis() const { return basis_; }
  const ModuleOrder& order() const { return order_; }

  /// Remainder of v. With full=false only the leading term is reduced
  /// until it is irreducible. Quotients, when requested, satisfy
  /// v = sum q.coeff * q.mono * basis[q.index] + remainder.
  ModuleVector reduce(ModuleVector v, bool full = true,
                      std::vector<Quotient>* quotients = nullptr) const;
  bool reduces_to_zero(const ModuleVector& v) const { return reduce(v, false).is_zero(); }
  /// Index of a basis element whose lead divides (m, comp).
  std::optional<std::size_t> divisor(const Monomial& m, std::uint32_t comp) const;
  /// True if (m, comp) is not divisible by any lead term.
  bool is_standard(const Monomial& m, std::uint32_t comp) const { return !divisor(m, comp); }

 private:
  std::vector<ModuleVector> basis_;
  ModuleOrder order_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

/// Homogeneous ideal of a GradedRingSpec with a lazily computed reduced
/// Gröbner basis. Copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const;

  const std::vector<Polynomial>& groebner_basis() const;
  const Reducer& reducer() const;
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;

  /// Minimal homogeneous generators (requires homogeneous generators).
  std::vector<Polynomial> minimal_generators() const;
  /// Krull dimension of A/I; -1 for the unit ideal.
  int krull_dim() const;

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  Ideal with_generators(std::vector<Polynomial> extra) const;

  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Homogeneous generators of a submodule of sum_i A(-twists[i]).
struct ModuleGens {
  RingPtr ring;
  std::vector<int> twists;
  std::vector<ModuleVector> generators;  // sorted in order()

  std::size_t rank() const { return twists.size(); }
  ModuleOrder order() const { return ModuleOrder::term_over_position(ring, twists); }
  /// Degrees of the generators (generators must be nonzero).
  std::vector<int> generator_degrees() const;
};

/// Gröbner data for a submodule together with its generators, allowing
/// membership tests, expressing members in the generators, and syzygies.
class SubmoduleBasis {
 public:
  /// degrees[i] is the degree attached to generator i (needed for zero
  /// generators); defaults to the generator degrees.
  explicit SubmoduleBasis(ModuleGens gens, std::optional<std::vector<int>> degrees = {},
                          const GroebnerOptions& options = {});

  const ModuleGens& generators() const { return gens_; }
  const std::vector<int>& degrees() const { return degrees_; }
  /// Gröbner basis of the submodule in the term-over-position order.
  const Reducer& reducer() const { return sub_; }

  bool contains(const ModuleVector& v) const { return sub_.reduces_to_zero(v); }
  ModuleVector normal_form(const ModuleVector& v) const { return sub_.reduce(v); }
  /// Coefficients c with v = sum c_i * generator_i, or nothing if v is
  /// outside the submodule. Entries are homogeneous when v is.
  std::optional<std::vector<Polynomial>> lift(const ModuleVector& v) const;

  /// Syzygy module as a submodule of sum_i A(-degrees[i]); minimal
  /// generators when `minimal` is set.
  ModuleGens syzygies(bool minimal = true) const;
  /// Gröbner basis of the syzygy module (term-over-position on degrees()).
  const std::vector<ModuleVector>& syzygy_basis() const { return syz_; }

 private:
  ModuleGens gens_;
  std::vector<int> degrees_;
  ModuleOrder aug_order_;
  Reducer aug_;
  Reducer sub_;
  std::vector<ModuleVector> syz_;  // in the term-over-position order on the degrees
  GroebnerOptions options_;
};

/// All t-fold products of generators; t = 0 yields the unit ideal and sets
/// *warning when given.
Ideal ideal_power(const Ideal& I, unsigned t, bool* warning = nullptr);
/// Generated by g^q; throws DomainError unless q is a power of the
/// characteristic.
Ideal frobenius_power(const Ideal& I, unsigned long long q);
/// (J : I) = {f : f I ⊆ J}.
Ideal colon(const Ideal& J, const Ideal& I);
Ideal colon(const Ideal& J, const Polynomial& f);
/// Kernel of the syzygy map for the given generators.
ModuleGens syzygies(const ModuleGens& M);
/// Kernel of source -> target/target_ideal sending variable i to images[i].
/// Throws DomainError on inhomogeneous images or inconsistent degrees.
Ideal kernel_of_ring_map(const RingPtr& source, const RingPtr& target,
                         const std::vector<Polynomial>& images,
                         const std::optional<Ideal>& target_ideal = {});
/// Standard monomials of weighted degree t for the Gröbner basis of I.
std::vector<Monomial> slice_basis(const Ideal& I, int t);
/// dim_k [A/I]_t.
std::size_t hilbert_function(const Ideal& I, int t);

}  // namespace glc
