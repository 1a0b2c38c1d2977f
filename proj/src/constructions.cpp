#include "glc/constructions.hpp"

#include <set>

#include "glc/error.hpp"

namespace glc {

namespace {

void require_standard(const RingPtr& ring, const char* what) {
  for (int w : ring->weights()) {
    if (w != 1) throw DomainError(std::string(what) + " needs a standard graded ring");
  }
}

}  // namespace

Ideal segre_product(const Ideal& X, const Ideal& Y) {
  const RingPtr& S = X.ring();
  const RingPtr& T = Y.ring();
  require_standard(S, "segre");
  require_standard(T, "segre");
  if (S->field() != T->field()) throw StructuralError("segre factors over different fields");
  std::vector<std::string> names = S->variables();
  std::set<std::string> seen(names.begin(), names.end());
  for (const auto& v : T->variables()) {
    if (!seen.insert(v).second) throw StructuralError("segre factors share variable '" + v + "'");
    names.push_back(v);
  }
  const RingPtr joint =
      GradedRingSpec::make(names, std::vector<int>(names.size(), 1), S->field());
  std::vector<Polynomial> xs, ys;
  for (std::size_t i = 0; i < S->nvars(); ++i) xs.push_back(Polynomial::variable(joint, i));
  for (std::size_t j = 0; j < T->nvars(); ++j) {
    ys.push_back(Polynomial::variable(joint, S->nvars() + j));
  }
  std::vector<Polynomial> rel;
  for (const auto& g : X.generators()) rel.push_back(g.substitute(joint, xs));
  for (const auto& g : Y.generators()) rel.push_back(g.substitute(joint, ys));

  std::vector<std::string> us;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      us.push_back("u" + std::to_string(i) + "_" + std::to_string(j));
      images.push_back(xs[i] * ys[j]);
    }
  }
  const RingPtr source = GradedRingSpec::make(us, std::vector<int>(us.size(), 1), S->field());
  return kernel_of_ring_map(source, joint, images, Ideal(joint, rel));
}

Ideal veronese(const Ideal& X, int k) {
  const RingPtr& S = X.ring();
  require_standard(S, "veronese");
  if (k < 1) throw DomainError("veronese degree must be positive");
  const std::vector<Monomial> mons = monomials_of_degree(*S, k);
  std::vector<std::string> names;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    names.push_back("v" + std::to_string(i));
    images.push_back(Polynomial::from_terms(S, {{mons[i], S->field().one()}}));
  }
  const RingPtr source =
      GradedRingSpec::make(names, std::vector<int>(names.size(), 1), S->field());
  return kernel_of_ring_map(source, S, images, X);
}

Ideal semigroup_ring(const FieldSpec& field, const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) throw StructuralError("semigroup needs generators");
  const std::size_t r = gens.front().size();
  int total = -1;
  for (const auto& a : gens) {
    if (a.size() != r) throw StructuralError("semigroup generators of different lengths");
    int s = 0;
    for (int e : a) {
      if (e < 0) throw DomainError("semigroup exponents must be nonnegative");
      s += e;
    }
    if (s == 0) throw DomainError("semigroup generator of degree 0");
    if (total >= 0 && s != total) {
      throw DomainError("semigroup generators must share one total degree");
    }
    total = s;
  }
  std::vector<std::string> tnames;
  for (std::size_t i = 0; i < r; ++i) tnames.push_back("t" + std::to_string(i));
  const RingPtr target = GradedRingSpec::make(tnames, std::vector<int>(r, 1), field);
  std::vector<std::string> names;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    names.push_back("x" + std::to_string(i));
    const Monomial m(gens[i], target->weights());
    images.push_back(Polynomial::from_terms(target, {{m, field.one()}}));
  }
  const RingPtr source = GradedRingSpec::make(names, std::vector<int>(names.size(), 1), field);
  return kernel_of_ring_map(source, target, images);
}

}  // namespace glc
