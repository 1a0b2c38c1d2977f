#pragma once

#include <map>
#include <vector>

#include "glc/ring.hpp"

namespace glc {

/// Numerator N(s) of the Hilbert series N(s) / prod_i (1 - s^{w_i}) of
/// A / (monomials), keyed by degree.
std::map<int, long long> hilbert_numerator(const GradedRingSpec& ring,
                                           std::vector<Monomial> monomials);

/// Coefficients of 1 / prod_i (1 - s^{w_i}), extended on demand.
class SeriesExpander {
 public:
  explicit SeriesExpander(std::vector<int> weights) : weights_(std::move(weights)) {}

  /// dim_k [A]_t (zero for negative t).
  long long ambient(int t);
  /// Coefficient of s^t in numerator / prod (1 - s^{w_i}).
  long long coefficient(const std::map<int, long long>& numerator, int t);

 private:
  std::vector<int> weights_;
  std::vector<long long> coeffs_;
};

}  // namespace glc
