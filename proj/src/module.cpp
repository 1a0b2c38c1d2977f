#include "glc/module.hpp"

#include <algorithm>

#include "glc/error.hpp"

namespace glc {

ModuleOrder ModuleOrder::term_over_position(RingPtr ring, std::vector<int> twists) {
  ModuleOrder o;
  o.kind_ = Kind::TermOverPosition;
  o.ring_ = std::move(ring);
  o.twists_ = std::move(twists);
  return o;
}

ModuleOrder ModuleOrder::block(RingPtr ring, std::vector<int> twists, std::uint32_t split) {
  ModuleOrder o = term_over_position(std::move(ring), std::move(twists));
  o.kind_ = Kind::Block;
  o.split_ = split;
  return o;
}

ModuleOrder ModuleOrder::schreyer(RingPtr ring, std::vector<int> twists,
                                  std::shared_ptr<const ModuleOrder> base,
                                  std::shared_ptr<const SchreyerLevel> level) {
  ModuleOrder o = term_over_position(std::move(ring), std::move(twists));
  o.kind_ = Kind::Schreyer;
  o.base_ = std::move(base);
  o.level_ = std::move(level);
  return o;
}

int ModuleOrder::top_compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                             std::uint32_t cb) const {
  if (ring_->graded_order()) {
    const int da = a.degree() + twists_[ca];
    const int db = b.degree() + twists_[cb];
    if (da != db) return da > db ? 1 : -1;
  }
  if (int c = ring_->compare(a, b)) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

int ModuleOrder::schreyer_compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                                  std::uint32_t cb) const {
  const int da = a.degree() + twists_[ca];
  const int db = b.degree() + twists_[cb];
  if (da != db) return da > db ? 1 : -1;
  const SchreyerLevel* lv = level_.get();
  if (ca == cb) return ring_->compare(a, b);
  if (int c = base_->compare(a * lv->total[ca], lv->base_comp[ca], b * lv->total[cb],
                             lv->base_comp[cb])) {
    return c;
  }
  // Equal images in the base: walk down the component chains to the level
  // where they merge and break the tie by index one level above it.
  std::uint32_t ia = ca;
  std::uint32_t ib = cb;
  while (true) {
    const std::uint32_t la = lv->lead_comp[ia];
    const std::uint32_t lb = lv->lead_comp[ib];
    if (la == lb || !lv->below) return ia < ib ? 1 : -1;
    ia = la;
    ib = lb;
    lv = lv->below.get();
  }
}

int ModuleOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                         std::uint32_t cb) const {
  switch (kind_) {
    case Kind::TermOverPosition:
      return top_compare(a, ca, b, cb);
    case Kind::Block: {
      const bool ua = ca < split_;
      const bool ub = cb < split_;
      if (ua != ub) return ua ? 1 : -1;
      return top_compare(a, ca, b, cb);
    }
    case Kind::Schreyer:
      return schreyer_compare(a, ca, b, cb);
  }
  return 0;
}

namespace vec {

ModuleVector normalize(std::vector<ModTerm> terms, const ModuleOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  ModuleVector out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().comp == t.comp && out.terms.back().mono == t.mono) {
      out.terms.back().coeff += t.coeff;
    } else {
      if (!out.terms.empty() && out.terms.back().coeff.is_zero()) out.terms.pop_back();
      out.terms.push_back(std::move(t));
    }
  }
  if (!out.terms.empty() && out.terms.back().coeff.is_zero()) out.terms.pop_back();
  return out;
}

ModuleVector add(const ModuleVector& a, const ModuleVector& b, const ModuleOrder& order) {
  ModuleVector out;
  out.terms.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = order.compare(a.terms[i], b.terms[j]);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Scalar s = a.terms[i].coeff + b.terms[j].coeff;
      if (!s.is_zero()) out.terms.push_back({a.terms[i].mono, a.terms[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

ModuleVector sub(const ModuleVector& a, const ModuleVector& b, const ModuleOrder& order) {
  return add(a, negate(b), order);
}

ModuleVector sub_mul(const ModuleVector& a, const Scalar& c, const Monomial& m,
                     const ModuleVector& b, const ModuleOrder& order) {
  ModuleVector out;
  out.terms.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const Scalar nc = -c;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() && j < b.size()) {
    if (!have_bm) {
      bm = b.terms[j].mono * m;
      have_bm = true;
    }
    const int cmp = order.compare(a.terms[i].mono, a.terms[i].comp, bm, b.terms[j].comp);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      out.terms.push_back({bm, b.terms[j].comp, nc * b.terms[j].coeff});
      ++j;
      have_bm = false;
    } else {
      Scalar s = a.terms[i].coeff + nc * b.terms[j].coeff;
      if (!s.is_zero()) out.terms.push_back({bm, b.terms[j].comp, std::move(s)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  for (; i < a.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.size(); ++j) {
    out.terms.push_back({b.terms[j].mono * m, b.terms[j].comp, nc * b.terms[j].coeff});
  }
  return out;
}

ModuleVector scale(const ModuleVector& a, const Scalar& c) {
  if (c.is_zero()) return {};
  ModuleVector out = a;
  for (auto& t : out.terms) t.coeff *= c;
  return out;
}

ModuleVector mul_term(const ModuleVector& a, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return {};
  ModuleVector out = a;
  for (auto& t : out.terms) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return out;
}

ModuleVector mul_poly(const ModuleVector& a, const Polynomial& f, const ModuleOrder& order) {
  std::vector<ModTerm> terms;
  terms.reserve(a.size() * f.size());
  for (const auto& ft : f.terms()) {
    for (const auto& t : a.terms) terms.push_back({t.mono * ft.mono, t.comp, t.coeff * ft.coeff});
  }
  return normalize(std::move(terms), order);
}

ModuleVector monic(const ModuleVector& a) {
  if (a.is_zero() || a.leading().coeff.is_one()) return a;
  return scale(a, a.leading().coeff.inverse());
}

ModuleVector negate(const ModuleVector& a) {
  ModuleVector out = a;
  for (auto& t : out.terms) t.coeff = -t.coeff;
  return out;
}

ModuleVector unit(std::uint32_t comp, const ModuleOrder& order) {
  ModuleVector out;
  out.terms.push_back({order.ring()->one(), comp, order.ring()->field().one()});
  return out;
}

Polynomial entry(const ModuleVector& a, std::uint32_t comp, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : a.terms) {
    if (t.comp == comp) terms.push_back({t.mono, t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> entries(const ModuleVector& a, std::size_t rank, const RingPtr& ring) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : a.terms) {
    if (t.comp >= rank) throw StructuralError("component index beyond module rank");
    parts[t.comp].push_back({t.mono, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

ModuleVector from_entries(const std::vector<Polynomial>& entries, const ModuleOrder& order) {
  std::vector<ModTerm> terms;
  for (std::size_t c = 0; c < entries.size(); ++c) {
    for (const auto& t : entries[c].terms()) {
      terms.push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
    }
  }
  return normalize(std::move(terms), order);
}

ModuleVector from_polynomial(const Polynomial& f, std::uint32_t comp, const ModuleOrder& order) {
  std::vector<ModTerm> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono, comp, t.coeff});
  return normalize(std::move(terms), order);
}

int degree(const ModuleVector& a, const ModuleOrder& order) {
  if (a.is_zero()) throw DomainError("degree of the zero vector");
  return order.degree(a.leading());
}

bool is_homogeneous(const ModuleVector& a, const ModuleOrder& order) {
  for (const auto& t : a.terms) {
    if (order.degree(t) != order.degree(a.leading())) return false;
  }
  return true;
}

ModuleVector reorder(const ModuleVector& a, const ModuleOrder& order) {
  return normalize(a.terms, order);
}

bool equal(const ModuleVector& a, const ModuleVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms[i].comp != b.terms[i].comp || a.terms[i].mono != b.terms[i].mono ||
        a.terms[i].coeff != b.terms[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string to_string(const ModuleVector& a, const GradedRingSpec& ring) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const ModTerm& t = a.terms[k];
    if (k) out += " + ";
    out += t.coeff.to_string();
    if (!t.mono.is_one()) out += '*' + monomial_to_string(ring, t.mono);
    out += "*e" + std::to_string(t.comp);
  }
  return out;
}

}  // namespace vec

}  // namespace glc
