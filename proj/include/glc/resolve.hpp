#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "glc/groebner.hpp"

namespace glc {

/// Graded free resolution F_len -> ... -> F_1 -> F_0 = A of A/I, with
/// F_k = sum_c A(-twists[k][c]). Column c of the differential d_k is the
/// image of the c-th basis element of F_k, stored in the term-over-position
/// order of F_{k-1}.
class GradedFreeResolution {
 public:
  GradedFreeResolution(RingPtr ring, std::vector<std::vector<int>> twists,
                       std::vector<std::vector<ModuleVector>> differentials, bool minimal);

  const RingPtr& ring() const { return ring_; }
  /// Index of the last nonzero free module.
  std::size_t length() const { return twists_.size() - 1; }
  bool minimal() const { return minimal_; }
  std::size_t rank(std::size_t k) const { return k < twists_.size() ? twists_[k].size() : 0; }
  const std::vector<int>& twists(std::size_t k) const { return twists_.at(k); }
  /// Columns of d_k, 1 <= k <= length().
  const std::vector<ModuleVector>& differential(std::size_t k) const { return diff_.at(k); }
  Polynomial entry(std::size_t k, std::uint32_t row, std::size_t col) const;
  ModuleOrder order(std::size_t k) const {
    return ModuleOrder::term_over_position(ring_, k < twists_.size() ? twists_[k] : std::vector<int>{});
  }
  /// d_{k-1} o d_k == 0 for every k.
  bool is_complex() const;

 private:
  RingPtr ring_;
  std::vector<std::vector<int>> twists_;
  std::vector<std::vector<ModuleVector>> diff_;  // diff_[0] unused
  bool minimal_;
};

/// Resolution of A/I via Schreyer frames; pruned to a minimal one when
/// `minimal` is set.
GradedFreeResolution free_resolution(const Ideal& I, bool minimal = true);

/// Betti numbers keyed by (step j, shift a) for summands A(-a); throws
/// DomainError on a non-minimal resolution.
std::map<std::pair<int, int>, int> betti(const GradedFreeResolution& res);

/// Resolution of A/I^[q] obtained by raising every entry to the q-th power
/// (exact in characteristic p by flatness of Frobenius).
GradedFreeResolution frobenius_resolution(const GradedFreeResolution& res, unsigned q);

/// maps[k][c] is the image in F_k of the target resolution of basis
/// element c of F_k of the source resolution.
struct ChainMap {
  std::vector<std::vector<ModuleVector>> maps;
};

/// Lifts maps into a fixed target resolution; the Gröbner data of the
/// target differentials is built once and reused for every source.
class ChainLifter {
 public:
  explicit ChainLifter(std::shared_ptr<const GradedFreeResolution> target);

  const GradedFreeResolution& target() const { return *target_; }
  /// Lifts the map sum_k A(..)-> that starts with 1 -> 1 on F_0 and a
  /// resolution of A/J with J contained in the target ideal.
  ChainMap lift(const GradedFreeResolution& source) const;
  /// Lifts an arbitrary first component: images of the source F_0 basis
  /// given explicitly (as elements of the target F_0).
  ChainMap lift(const GradedFreeResolution& source, std::vector<ModuleVector> degree0) const;

 private:
  std::shared_ptr<const GradedFreeResolution> target_;
  std::vector<std::unique_ptr<SubmoduleBasis>> lifts_;  // lifts_[k] for d_k
};

/// Chain map lifting A/J ->> A/I; throws DomainError unless J ⊆ I.
ChainMap lift_chain_map(const Ideal& J, const GradedFreeResolution& resJ, const Ideal& I,
                        const GradedFreeResolution& resI);

/// lambda_{k-1} d^source_k == d^target_k lambda_k for all k.
bool commutes(const ChainMap& f, const GradedFreeResolution& source,
              const GradedFreeResolution& target);

/// Applies a column list (images of basis elements) to a vector.
ModuleVector apply_columns(const std::vector<ModuleVector>& columns, const ModuleVector& v,
                           const ModuleOrder& target_order);

}  // namespace glc
