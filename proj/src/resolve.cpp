#include "glc/resolve.hpp"

#include <algorithm>
#include <numeric>

#include "glc/error.hpp"

namespace glc {

GradedFreeResolution::GradedFreeResolution(RingPtr ring, std::vector<std::vector<int>> twists,
                                           std::vector<std::vector<ModuleVector>> differentials,
                                           bool minimal)
    : ring_(std::move(ring)),
      twists_(std::move(twists)),
      diff_(std::move(differentials)),
      minimal_(minimal) {
  if (twists_.empty()) twists_.push_back({});
  diff_.resize(twists_.size());
}

Polynomial GradedFreeResolution::entry(std::size_t k, std::uint32_t row, std::size_t col) const {
  return vec::entry(diff_.at(k).at(col), row, ring_);
}

ModuleVector apply_columns(const std::vector<ModuleVector>& columns, const ModuleVector& v,
                           const ModuleOrder& target_order) {
  std::vector<ModTerm> acc;
  for (const auto& t : v.terms) {
    for (const auto& s : columns.at(t.comp).terms) {
      acc.push_back({s.mono * t.mono, s.comp, s.coeff * t.coeff});
    }
  }
  return vec::normalize(std::move(acc), target_order);
}

bool GradedFreeResolution::is_complex() const {
  for (std::size_t k = 2; k <= length(); ++k) {
    const ModuleOrder o = order(k - 2);
    for (const auto& col : diff_[k]) {
      if (!apply_columns(diff_[k - 1], col, o).is_zero()) return false;
    }
  }
  return true;
}

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

struct Frame {
  std::vector<std::vector<int>> twists;
  std::vector<std::vector<ModuleVector>> columns;  // columns[k] in the order of F_{k-1}
  std::vector<ModuleOrder> orders;                 // orders[k] on F_k
};

Frame schreyer_frame(const Ideal& I) {
  const RingPtr& ring = I.ring();
  Frame fr;
  auto base = std::make_shared<const ModuleOrder>(ModuleOrder::term_over_position(ring, {0}));
  fr.twists.push_back({0});
  fr.columns.emplace_back();
  fr.orders.push_back(*base);

  std::vector<ModuleVector> gens;
  for (const auto& g : I.groebner_basis()) gens.push_back(vec::from_polynomial(g, 0, *base));
  std::shared_ptr<const SchreyerLevel> below;

  for (std::size_t k = 1; !gens.empty(); ++k) {
    if (k > ring->nvars() + 1) throw StructuralError("resolution longer than the syzygy bound");
    std::stable_sort(gens.begin(), gens.end(), [](const ModuleVector& a, const ModuleVector& b) {
      if (a.leading().comp != b.leading().comp) return a.leading().comp < b.leading().comp;
      return lex_greater(a.leading().mono, b.leading().mono);
    });
    const ModuleOrder& amb = fr.orders[k - 1];
    auto level = std::make_shared<SchreyerLevel>();
    std::vector<int> tw;
    for (const auto& g : gens) {
      const ModTerm& lt = g.leading();
      tw.push_back(amb.degree(lt));
      level->lead_comp.push_back(lt.comp);
      if (below) {
        level->total.push_back(lt.mono * below->total[lt.comp]);
        level->base_comp.push_back(below->base_comp[lt.comp]);
      } else {
        level->total.push_back(lt.mono);
        level->base_comp.push_back(lt.comp);
      }
    }
    level->below = below;
    const ModuleOrder ord = ModuleOrder::schreyer(ring, tw, base, level);

    // Syzygies from S-pairs with minimal multipliers (Schreyer's theorem).
    const Reducer red(gens, amb);
    std::vector<ModuleVector> next;
    const Scalar one = ring->field().one();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const ModTerm& li = gens[i].leading();
      std::vector<std::pair<Monomial, std::size_t>> mult;
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const ModTerm& lj = gens[j].leading();
        if (lj.comp != li.comp) continue;
        mult.emplace_back(ring->lcm(li.mono, lj.mono) / li.mono, j);
      }
      for (std::size_t a = 0; a < mult.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < mult.size() && minimal; ++b) {
          if (a == b || !mult[b].first.divides(mult[a].first)) continue;
          if (mult[b].first != mult[a].first || b < a) minimal = false;
        }
        if (!minimal) continue;
        const std::size_t j = mult[a].second;
        const Monomial& qi = mult[a].first;
        const Monomial qj = (qi * li.mono) / gens[j].leading().mono;
        ModuleVector s = vec::mul_term(gens[i], qi, one);
        s = vec::sub_mul(s, one, qj, gens[j], amb);
        std::vector<Reducer::Quotient> quot;
        ModuleVector rem = red.reduce(std::move(s), false, &quot);
        if (!rem.is_zero()) throw StructuralError("S-polynomial of a Gröbner basis did not reduce");
        std::vector<ModTerm> terms;
        terms.push_back({qi, static_cast<std::uint32_t>(i), one});
        terms.push_back({qj, static_cast<std::uint32_t>(j), -one});
        for (auto& q : quot) terms.push_back({q.mono, static_cast<std::uint32_t>(q.index), -q.coeff});
        ModuleVector sigma = vec::normalize(std::move(terms), ord);
        if (sigma.is_zero() || sigma.leading().comp != i || sigma.leading().mono != qi) {
          throw StructuralError("unexpected leading term of a Schreyer syzygy");
        }
        next.push_back(std::move(sigma));
      }
    }
    fr.twists.push_back(std::move(tw));
    fr.columns.push_back(std::move(gens));
    fr.orders.push_back(ord);
    below = level;
    gens = std::move(next);
  }
  return fr;
}

// Removes unit entries level by level: a constant u at (r, c) of d_k splits
// off A(-a) -> A(-a); the remaining complex keeps every other basis element.
void prune(std::vector<std::vector<int>>& tw, std::vector<std::vector<ModuleVector>>& cols,
           const RingPtr& ring) {
  const std::size_t len = tw.size() - 1;
  auto top = [&](std::size_t k) { return ModuleOrder::term_over_position(ring, tw[k]); };

  // Drops flagged basis elements of F_k: columns of d_k and rows of d_{k+1}.
  auto compact = [&](std::size_t k, const std::vector<bool>& removed) {
    std::vector<std::uint32_t> remap(removed.size());
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < removed.size(); ++i) remap[i] = removed[i] ? UINT32_MAX : next++;
    std::vector<int> ntw;
    for (std::size_t i = 0; i < removed.size(); ++i) {
      if (!removed[i]) ntw.push_back(tw[k][i]);
    }
    tw[k] = std::move(ntw);
    if (k >= 1) {
      std::vector<ModuleVector> nc;
      for (std::size_t i = 0; i < removed.size(); ++i) {
        if (!removed[i]) nc.push_back(std::move(cols[k][i]));
      }
      cols[k] = std::move(nc);
    }
    if (k + 1 <= len) {
      const ModuleOrder o = top(k);
      for (auto& col : cols[k + 1]) {
        std::vector<ModTerm> t;
        for (auto& term : col.terms) {
          if (remap[term.comp] == UINT32_MAX) continue;
          term.comp = remap[term.comp];
          t.push_back(std::move(term));
        }
        col = vec::normalize(std::move(t), o);
      }
    }
  };

  for (std::size_t k = 1; k <= len; ++k) {
    std::vector<bool> dead_col(tw[k].size(), false);
    std::vector<bool> dead_row(tw[k - 1].size(), false);
    const ModuleOrder o = top(k - 1);
    while (true) {
      std::size_t c = SIZE_MAX;
      const ModTerm* unit = nullptr;
      for (std::size_t i = 0; i < cols[k].size() && !unit; ++i) {
        if (dead_col[i]) continue;
        for (const auto& t : cols[k][i].terms) {
          if (t.mono.is_one() && !dead_row[t.comp]) {
            unit = &t;
            c = i;
            break;
          }
        }
      }
      if (!unit) break;
      const std::uint32_t r = unit->comp;
      const Scalar inv = unit->coeff.inverse();
      const ModuleVector v = cols[k][c];
      for (std::size_t i = 0; i < cols[k].size(); ++i) {
        if (i == c || dead_col[i]) continue;
        std::vector<Term> a;
        for (const auto& t : cols[k][i].terms) {
          if (t.comp == r) a.push_back({t.mono, t.coeff * inv});
        }
        if (a.empty()) continue;
        const Polynomial f = Polynomial::from_terms(ring, std::move(a));
        cols[k][i] = vec::sub(cols[k][i], vec::mul_poly(v, f, o), o);
      }
      dead_col[c] = true;
      dead_row[r] = true;
      // Row c of d_{k+1} is discarded together with the basis element.
    }
    compact(k, dead_col);
    compact(k - 1, dead_row);
  }
  while (tw.size() > 1 && tw.back().empty()) {
    tw.pop_back();
    cols.pop_back();
  }
}

}  // namespace

GradedFreeResolution free_resolution(const Ideal& I, bool minimal) {
  if (!I.is_homogeneous()) throw DomainError("resolutions need a homogeneous ideal");
  const RingPtr& ring = I.ring();
  Frame fr = schreyer_frame(I);
  std::vector<std::vector<ModuleVector>> cols(fr.twists.size());
  for (std::size_t k = 1; k < fr.twists.size(); ++k) {
    const ModuleOrder o = ModuleOrder::term_over_position(ring, fr.twists[k - 1]);
    for (auto& c : fr.columns[k]) cols[k].push_back(vec::reorder(c, o));
  }
  std::vector<std::vector<int>> tw = std::move(fr.twists);
  if (minimal) prune(tw, cols, ring);

  // Deterministic bases: by twist, then leading term of the column.
  for (std::size_t k = 1; k < tw.size(); ++k) {
    const ModuleOrder o = ModuleOrder::term_over_position(ring, tw[k - 1]);
    std::vector<std::size_t> perm(tw[k].size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (tw[k][a] != tw[k][b]) return tw[k][a] < tw[k][b];
      if (cols[k][a].is_zero() || cols[k][b].is_zero()) return !cols[k][a].is_zero() && cols[k][b].is_zero();
      return o.compare(cols[k][a].leading(), cols[k][b].leading()) < 0;
    });
    std::vector<std::uint32_t> inv(perm.size());
    std::vector<int> ntw;
    std::vector<ModuleVector> nc;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      inv[perm[i]] = static_cast<std::uint32_t>(i);
      ntw.push_back(tw[k][perm[i]]);
      nc.push_back(std::move(cols[k][perm[i]]));
    }
    tw[k] = std::move(ntw);
    cols[k] = std::move(nc);
    if (k + 1 < tw.size()) {
      const ModuleOrder ok = ModuleOrder::term_over_position(ring, tw[k]);
      for (auto& col : cols[k + 1]) col = vec::remap(col, [&](std::uint32_t c) { return inv[c]; }, ok);
    }
  }
  return GradedFreeResolution(ring, std::move(tw), std::move(cols), minimal);
}

std::map<std::pair<int, int>, int> betti(const GradedFreeResolution& res) {
  if (!res.minimal()) throw DomainError("Betti numbers need a minimal resolution");
  std::map<std::pair<int, int>, int> out;
  for (std::size_t k = 0; k <= res.length(); ++k) {
    for (int a : res.twists(k)) ++out[{static_cast<int>(k), a}];
  }
  return out;
}

GradedFreeResolution frobenius_resolution(const GradedFreeResolution& res, unsigned q) {
  std::vector<std::vector<int>> tw;
  std::vector<std::vector<ModuleVector>> cols(res.length() + 1);
  for (std::size_t k = 0; k <= res.length(); ++k) {
    std::vector<int> t = res.twists(k);
    for (int& a : t) a *= static_cast<int>(q);
    tw.push_back(std::move(t));
  }
  for (std::size_t k = 1; k <= res.length(); ++k) {
    const ModuleOrder o = ModuleOrder::term_over_position(res.ring(), tw[k - 1]);
    for (const auto& col : res.differential(k)) {
      std::vector<ModTerm> t;
      for (const auto& term : col.terms) {
        t.push_back({term.mono.pow(static_cast<int>(q)), term.comp, term.coeff.pow(q)});
      }
      cols[k].push_back(vec::normalize(std::move(t), o));
    }
  }
  return GradedFreeResolution(res.ring(), std::move(tw), std::move(cols), res.minimal());
}

ChainLifter::ChainLifter(std::shared_ptr<const GradedFreeResolution> target)
    : target_(std::move(target)) {
  lifts_.resize(target_->length() + 1);
  for (std::size_t k = 1; k <= target_->length(); ++k) {
    ModuleGens g{target_->ring(), target_->twists(k - 1), target_->differential(k)};
    lifts_[k] = std::make_unique<SubmoduleBasis>(std::move(g), target_->twists(k));
  }
}

ChainMap ChainLifter::lift(const GradedFreeResolution& source) const {
  std::vector<ModuleVector> d0;
  const ModuleOrder o0 = target_->order(0);
  for (std::size_t c = 0; c < source.rank(0); ++c) d0.push_back(vec::unit(0, o0));
  return lift(source, std::move(d0));
}

ChainMap ChainLifter::lift(const GradedFreeResolution& source,
                           std::vector<ModuleVector> degree0) const {
  ChainMap f;
  f.maps.resize(source.length() + 1);
  f.maps[0] = std::move(degree0);
  for (std::size_t k = 1; k <= source.length(); ++k) {
    const ModuleOrder prev = target_->order(k - 1);
    const ModuleOrder cur = target_->order(k);
    for (const auto& col : source.differential(k)) {
      const ModuleVector w = apply_columns(f.maps[k - 1], col, prev);
      if (w.is_zero()) {
        f.maps[k].emplace_back();
        continue;
      }
      if (k > target_->length()) throw StructuralError("chain map does not lift: target ended");
      auto c = lifts_[k]->lift(w);
      if (!c) throw StructuralError("chain map does not lift");
      f.maps[k].push_back(vec::from_entries(*c, cur));
    }
  }
  return f;
}

ChainMap lift_chain_map(const Ideal& J, const GradedFreeResolution& resJ, const Ideal& I,
                        const GradedFreeResolution& resI) {
  if (!I.contains(J)) throw DomainError("J is not contained in I");
  ChainLifter lifter(std::make_shared<const GradedFreeResolution>(resI));
  return lifter.lift(resJ);
}

bool commutes(const ChainMap& f, const GradedFreeResolution& source,
              const GradedFreeResolution& target) {
  for (std::size_t k = 1; k <= source.length(); ++k) {
    const ModuleOrder prev = target.order(k - 1);
    for (std::size_t c = 0; c < source.rank(k); ++c) {
      const ModuleVector lhs = apply_columns(f.maps[k - 1], source.differential(k)[c], prev);
      ModuleVector rhs;
      if (k <= target.length()) rhs = apply_columns(target.differential(k), f.maps[k][c], prev);
      if (!vec::equal(lhs, rhs)) return false;
    }
  }
  return true;
}

}  // namespace glc
