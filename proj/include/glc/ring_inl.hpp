#pragma once

#include <vector>

namespace glc::detail {

template <typename Visit>
void enumerate_monomials(const GradedRingSpec& ring, std::size_t var, int remaining,
                         std::vector<int>& exps, Visit& visit) {
  const std::size_t n = ring.nvars();
  if (var + 1 == n) {
    if (remaining % ring.weight(var) != 0) return;
    exps[var] = remaining / ring.weight(var);
    visit(ring.monomial(exps));
    exps[var] = 0;
    return;
  }
  for (int e = remaining / ring.weight(var); e >= 0; --e) {
    exps[var] = e;
    enumerate_monomials(ring, var + 1, remaining - e * ring.weight(var), exps, visit);
  }
  exps[var] = 0;
}

}  // namespace glc::detail

namespace glc {

template <typename Visit>
void for_each_monomial_of_degree(const GradedRingSpec& ring, int t, Visit&& visit) {
  if (t < 0) return;
  if (ring.nvars() == 0) {
    if (t == 0) visit(ring.one());
    return;
  }
  std::vector<int> exps(ring.nvars(), 0);
  detail::enumerate_monomials(ring, 0, t, exps, visit);
}

}  // namespace glc
