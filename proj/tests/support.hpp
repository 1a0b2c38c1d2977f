#pragma once

#include <random>
#include <vector>

#include "glc/polynomial.hpp"

namespace support {

inline glc::RingPtr ring(std::vector<std::string> vars, std::vector<int> weights,
                         glc::FieldSpec field = glc::FieldSpec::rationals(),
                         glc::MonomialOrder order = {}) {
  return glc::GradedRingSpec::make(std::move(vars), std::move(weights), std::move(field), order);
}

inline glc::RingPtr standard(std::size_t n, glc::FieldSpec field = glc::FieldSpec::rationals()) {
  std::vector<std::string> names;
  const char* letters[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 8 ? letters[i] : "x" + std::to_string(i));
  }
  return ring(names, std::vector<int>(n, 1), std::move(field));
}

inline glc::Polynomial poly(const glc::RingPtr& r, const std::string& text) {
  return glc::parse_polynomial(r, text);
}

inline glc::Scalar random_scalar(std::mt19937_64& rng, const glc::FieldSpec& field) {
  std::uniform_int_distribution<int> d(-5, 5);
  return field.from_int(d(rng));
}

/// Random homogeneous polynomial of degree t keeping each monomial with
/// probability `density`.
inline glc::Polynomial random_form(std::mt19937_64& rng, const glc::RingPtr& r, int t,
                                   double density = 0.5) {
  std::bernoulli_distribution keep(density);
  std::vector<glc::Term> terms;
  for (const auto& m : glc::monomials_of_degree(*r, t)) {
    if (keep(rng)) terms.push_back({m, random_scalar(rng, r->field())});
  }
  return glc::Polynomial::from_terms(r, std::move(terms));
}

}  // namespace support
