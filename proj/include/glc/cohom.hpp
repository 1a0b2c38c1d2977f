#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "glc/hilbert.hpp"
#include "glc/resolve.hpp"

namespace glc {

/// Subquotient Z/B of a graded free module sum_c A e_c with deg e_c =
/// twists[c].
struct GradedModulePresentation {
  RingPtr ring;
  std::vector<int> twists;
  std::vector<ModuleVector> cocycles;    // generators of Z
  std::vector<ModuleVector> boundaries;  // generators of B, B ⊆ Z

  ModuleOrder order() const { return ModuleOrder::term_over_position(ring, twists); }
};

/// Ext^j_A(A/I, A) as a subquotient of Hom(F_j, A), with Gröbner data for
/// boundaries and cocycles and its Hilbert series.
class ExtModule {
 public:
  ExtModule(int j, GradedModulePresentation pres, std::vector<ModuleVector> cocycle_basis);
  static ExtModule zero(int j, RingPtr ring, std::vector<int> twists);

  int index() const { return j_; }
  const GradedModulePresentation& presentation() const { return pres_; }
  ModuleOrder order() const { return pres_.order(); }

  bool is_zero() const { return series_.empty(); }
  bool is_boundary(const ModuleVector& v) const { return boundary_.reduces_to_zero(v); }
  ModuleVector reduce(const ModuleVector& v) const { return boundary_.reduce(v); }
  const Reducer& boundary_basis() const { return boundary_; }
  const Reducer& cocycle_basis() const { return cocycle_; }
  /// Cocycle generators that are not boundaries.
  std::vector<ModuleVector> nonzero_generators() const;

  /// dim_k of the degree-s piece.
  long long dim(int s) const;
  /// Hilbert series numerator over prod (1 - s^{w_i}), keyed by degree.
  const std::map<int, long long>& series_numerator() const { return series_; }
  /// Decided exactly: the Hilbert series is a Laurent polynomial.
  bool finite_length() const { return finite_; }
  /// Lowest degree with a nonzero piece.
  std::optional<int> min_degree() const;
  /// Highest degree with a nonzero piece, for finite length modules.
  std::optional<int> max_degree() const;

 private:
  int j_;
  GradedModulePresentation pres_;
  Reducer boundary_;
  Reducer cocycle_;
  std::map<int, long long> series_;
  std::map<int, long long> laurent_;  // the quotient when finite length
  bool finite_ = true;
  std::shared_ptr<std::mutex> mutex_;
  std::shared_ptr<SeriesExpander> expander_;
};

struct CohomOptions {
  GroebnerOptions groebner;
};

/// Resolution of A/I and all Ext^j_A(A/I, A); immutable once built.
class ExtComputation {
 public:
  explicit ExtComputation(Ideal I, const CohomOptions& options = {});

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  std::shared_ptr<const GradedFreeResolution> resolution() const { return res_; }
  int n() const { return static_cast<int>(ring()->nvars()); }
  /// Sum of the weights.
  int d() const { return ring()->degree_sum(); }
  int dimension() const { return dim_; }
  int projective_dimension() const { return static_cast<int>(res_->length()); }
  const ExtModule& ext(int j) const { return *ext_.at(static_cast<std::size_t>(j)); }
  std::shared_ptr<const ExtModule> ext_ptr(int j) const { return ext_.at(static_cast<std::size_t>(j)); }
  /// Largest shift a over the summands A(-a) of the resolution.
  int max_shift() const;

 private:
  Ideal ideal_;
  std::shared_ptr<const GradedFreeResolution> res_;
  int dim_ = 0;
  std::vector<std::shared_ptr<const ExtModule>> ext_;
};

/// Presentations of Ext^j for j = 0..n.
std::vector<GradedModulePresentation> ext_modules(const Ideal& I);

/// n - pd (Auslander–Buchsbaum), checked against the largest nonvanishing
/// Ext index; throws DomainError for the zero ring.
int depth(const ExtComputation& ext);

struct LocalCohomologyTable {
  struct Index {
    int i = 0;
    bool zero = true;
    bool finite_length = true;
    /// Computed range of t.
    int t_low = 0;
    int t_high = -1;
    /// Whether every piece below t_low (above t_high) is known to vanish.
    bool zero_below = true;
    bool zero_above = true;
  };
  int n = 0;
  int d = 0;
  std::vector<Index> indices;                     // i = 0..n
  std::map<std::pair<int, int>, long long> dims;  // nonzero (i, t) entries

  /// dim_k [H^i_m(R)]_t; throws WindowRequired outside the computed range
  /// unless the pieces there are known to vanish.
  long long dim(int i, int t) const;
};

/// dim [H^i_m(A/I)]_t = dim [Ext^{n-i}]_{-t-d}. Without a window, every
/// finite-length index is reported in full and infinite ones from
/// t = -(d + max shift) upward; a window [lo, hi] restricts every index.
LocalCohomologyTable local_cohomology_table(const ExtComputation& ext,
                                            std::optional<std::pair<int, int>> window = {});

/// Ext^j(A/I, A) -> Ext^j(A/J, A) induced by A/J ->> A/I. columns[r] is the
/// image of basis element r of the source ambient module.
struct ExtMap {
  int j = 0;
  std::shared_ptr<const ExtModule> source;
  std::shared_ptr<const ExtModule> target;
  std::vector<ModuleVector> columns;

  ModuleVector apply(const ModuleVector& v) const;
};

/// Dualizes a chain map (source resolution of A/J into the resolution of
/// A/I) at step j.
ExtMap dualize(const ChainMap& lift, int j, std::shared_ptr<const ExtModule> of_I,
               std::shared_ptr<const ExtModule> of_J);

/// All Ext maps for J ⊆ I; throws DomainError unless J ⊆ I.
std::vector<ExtMap> induced_ext_maps(const ExtComputation& I, const ExtComputation& J);
ExtMap induced_ext_map(const ExtComputation& I, const ExtComputation& J, int j);

struct InjectivityResult {
  bool injective = true;
  std::optional<ModuleVector> witness;  // a cocycle mapping to a boundary, not itself one
  std::optional<int> witness_degree;
};

/// Kernel = (preimage of target boundaries) ∩ cocycles modulo boundaries.
/// With min_degree, only kernel elements of degree >= min_degree count.
InjectivityResult is_injective(const ExtMap& f, std::optional<int> min_degree = {});

struct DegreeEntry {
  int i;
  int t;
  long long dim;
};

struct DuBoisReport {
  bool satisfied = true;
  std::vector<DegreeEntry> offending;  // nonzero [H^i]_t with t > 0
};

/// [H^i_m(R)]_{>0} = 0 for all i >= 1.
DuBoisReport du_bois_graded_criterion(const ExtComputation& ext);

struct VanishingEntry {
  int i;
  bool finite_length;
  bool vanishes;                     // [H^i]_{<0} = 0; meaningful for finite length
  std::vector<DegreeEntry> offending;
};

/// [H^i_m(R)]_{<0} = 0 at the indices whose Ext module has finite length.
std::vector<VanishingEntry> vanishing_check(const ExtComputation& ext);

struct StcmReport {
  std::vector<DegreeEntry> hits;  // i < dim R, t <= 0, nonzero
  bool truncated = false;         // some index needed the default window
};

StcmReport set_theoretic_cm_obstruction(const ExtComputation& ext,
                                        std::optional<std::pair<int, int>> window = {});

}  // namespace glc
