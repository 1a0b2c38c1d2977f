#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "glc/cohom.hpp"

namespace glc {

/// A homogeneous ideal over F_p with cached Frobenius powers I^[p^e].
class FrobeniusContext {
 public:
  /// Throws DomainError in characteristic 0 or for inhomogeneous I.
  explicit FrobeniusContext(Ideal I, CohomOptions options = {});

  unsigned p() const { return p_; }
  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const CohomOptions& options() const { return options_; }
  /// I^[p^e], checked to lie in I.
  const Ideal& frobenius_power(unsigned e) const;
  /// Ext data of A/I, built on first use.
  const ExtComputation& ext() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<unsigned, std::unique_ptr<Ideal>> powers;
    std::unique_ptr<ExtComputation> ext;
  };
  Ideal ideal_;
  unsigned p_;
  CohomOptions options_;
  std::unique_ptr<Cache> cache_;
};

struct FedderResult {
  bool fpure = false;
  /// A generator of (I^[p] : I) outside m^[p] when F-pure.
  std::optional<Polynomial> witness;
};

/// (I^[p] : I) ⊄ m^[p].
FedderResult fedder_fpure(const FrobeniusContext& ctx);

/// The map on Ext^j(A/I, A) dual to Frobenius on H^{n-j}_m(A/I): compose a
/// cocycle with lambda_j (a lift of A/I^[q] ->> A/I) and apply the trace
/// x^a -> x^{(a - (q-1))/q}, which is zero unless every a_i = q-1 mod q.
/// Maps degree q(s + d) - d to degree s.
ModuleVector frobenius_trace(const ChainMap& lambda, int j, const ModuleVector& v, unsigned q,
                             const ModuleOrder& order);

struct FInjectivityEntry {
  int j = 0;
  int i = 0;  // local cohomology index n - j
  bool injective = true;
  /// First Ext degree where the trace map misses a generator, and the dual
  /// local cohomology degree t = -s - d where Frobenius has a kernel.
  std::optional<int> s;
  std::optional<int> t;
  std::optional<ModuleVector> witness;  // generator of Ext^j outside the image
  long long target_dim = 0;
  long long image_rank = 0;
};

struct FInjectivityReport {
  bool injective = true;
  unsigned q = 0;
  std::vector<FInjectivityEntry> entries;  // nonzero Ext indices only
};

/// Frobenius^e injective on every H^i_m(A/I), decided as surjectivity of
/// the trace map on every Ext^j in the degrees of its generators.
FInjectivityReport f_injective_check(const FrobeniusContext& ctx, unsigned e = 1);

struct SurjectivityEntry {
  int j = 0;
  bool injective = true;
  std::optional<ModuleVector> witness;
  std::optional<int> witness_degree;
};

struct SurjectivityReport {
  bool holds = true;
  unsigned q = 0;  // smallest power with I^[q] ⊆ J
  std::vector<SurjectivityEntry> entries;
};

/// Ext^j(A/I, A) -> Ext^j(A/J, A) injective for all j, i.e.
/// H^i_m(A/J) ->> H^i_m(A/I). Requires I^[q] ⊆ J ⊆ I for some q = p^e with
/// e <= max_e; throws DomainError otherwise.
SurjectivityReport fpure_surjectivity_check(const FrobeniusContext& ctx, const Ideal& J,
                                            unsigned max_e = 6);

struct DeformationReport {
  bool degenerate = false;  // x a unit: A/(I + (x)) is the zero ring
  bool leg1 = false;        // A/(I + (x)) F-injective
  bool leg2 = false;        // multiplication by x injective on every Ext^j(A/I, A)
  bool pass = false;
  std::optional<FInjectivityReport> leg1_detail;
  std::vector<SurjectivityEntry> leg2_detail;
  std::string conclusion;
};

/// Both computable legs of the deformation argument for x a homogeneous
/// nonzerodivisor on A/I (checked as (I : x) = I; DomainError otherwise).
DeformationReport deformation_check(const FrobeniusContext& ctx, const Polynomial& x,
                                    unsigned e = 1);

}  // namespace glc
