#pragma once

// Independent reference computations for the tests. Nothing here calls the
// Gröbner engine: membership and dimensions come from plain Gaussian
// elimination on coefficient vectors.

#include <map>
#include <vector>

#include "glc/polynomial.hpp"

namespace oracle {

using glc::Monomial;
using glc::Polynomial;
using glc::Scalar;

/// Rank of the span of a list of coefficient maps (monomial index -> value).
inline std::size_t span_rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const Scalar inv = rows[rank][c].inverse();
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Coefficient vectors of all m*g (g a generator, deg m*g == t) in the
/// monomial basis of degree t.
inline std::vector<std::vector<Scalar>> degree_piece(const std::vector<Polynomial>& gens, int t,
                                                     std::vector<Monomial>& basis) {
  const auto& ring = *gens.front().ring();
  basis = glc::monomials_of_degree(ring, t);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k].exponents()] = k;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    const int d = *g.homogeneous_degree();
    if (d > t) continue;
    for (const auto& m : glc::monomials_of_degree(ring, t - d)) {
      std::vector<Scalar> row(basis.size(), ring.field().zero());
      for (const auto& term : g.terms()) row[index.at((term.mono * m).exponents())] = term.coeff;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// f in (gens) for homogeneous f and homogeneous gens.
inline bool member(const std::vector<Polynomial>& gens, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (gens.empty()) return false;
  const int t = *f.homogeneous_degree();
  std::vector<Monomial> basis;
  auto rows = degree_piece(gens, t, basis);
  const std::size_t before = span_rank(rows);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k].exponents()] = k;
  std::vector<Scalar> row(basis.size(), f.ring()->field().zero());
  for (const auto& term : f.terms()) row[index.at(term.mono.exponents())] = term.coeff;
  rows.push_back(std::move(row));
  return span_rank(std::move(rows)) == before;
}

/// dim_k [A/(gens)]_t.
inline std::size_t quotient_dim(const glc::RingPtr& ring, const std::vector<Polynomial>& gens,
                                int t) {
  const std::size_t total = glc::monomials_of_degree(*ring, t).size();
  if (gens.empty()) return total;
  std::vector<Monomial> basis;
  return total - span_rank(degree_piece(gens, t, basis));
}

/// Coefficients of prod_i 1/(1 - s^{w_i}) up to s^bound.
inline std::vector<long long> hilbert_series(const std::vector<int>& weights, int bound) {
  std::vector<long long> c(bound + 1, 0);
  c[0] = 1;
  for (int w : weights) {
    for (int t = w; t <= bound; ++t) c[t] += c[t - w];
  }
  return c;
}

}  // namespace oracle
