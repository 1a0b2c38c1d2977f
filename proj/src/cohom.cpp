#include "glc/cohom.hpp"

#include <algorithm>

#include "glc/error.hpp"

namespace glc {

namespace {

std::map<int, long long> lead_numerator(const GradedRingSpec& ring,
                                        const std::vector<Monomial>& leads) {
  return hilbert_numerator(ring, leads);
}

// Rows of d_j as elements of Hom(F_j, A): row r is sum_c d_j[r][c] e_c*.
std::vector<ModuleVector> dual_rows(const GradedFreeResolution& res, std::size_t j,
                                    const ModuleOrder& order) {
  std::vector<std::vector<ModTerm>> rows(res.rank(j - 1));
  const auto& cols = res.differential(j);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& t : cols[c].terms) {
      rows[t.comp].push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
    }
  }
  std::vector<ModuleVector> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(vec::normalize(std::move(r), order));
  return out;
}

std::vector<int> dual_twists(const GradedFreeResolution& res, std::size_t j) {
  std::vector<int> tw;
  if (j > res.length()) return tw;
  for (int a : res.twists(j)) tw.push_back(-a);
  return tw;
}

}  // namespace

// ------------------------------------------------------------ ExtModule

ExtModule::ExtModule(int j, GradedModulePresentation pres,
                     std::vector<ModuleVector> cocycle_basis)
    : j_(j),
      pres_(std::move(pres)),
      mutex_(std::make_shared<std::mutex>()),
      expander_(std::make_shared<SeriesExpander>(pres_.ring->weights())) {
  const ModuleOrder o = pres_.order();
  std::vector<ModuleVector> bnd;
  for (const auto& b : pres_.boundaries) {
    if (!b.is_zero()) bnd.push_back(b);
  }
  pres_.boundaries = bnd;
  boundary_ = Reducer(groebner_basis(bnd, o).basis, o);
  cocycle_ = Reducer(std::move(cocycle_basis), o);

  const std::size_t rank = pres_.twists.size();
  std::vector<std::vector<Monomial>> lb(rank), lz(rank);
  for (const auto& g : boundary_.basis()) lb[g.leading().comp].push_back(g.leading().mono);
  for (const auto& g : cocycle_.basis()) lz[g.leading().comp].push_back(g.leading().mono);
  for (std::size_t c = 0; c < rank; ++c) {
    if (lz[c].size() == 1 && lz[c][0].is_one() && lb[c].size() == 1 && lb[c][0].is_one()) continue;
    const auto nb = lead_numerator(*pres_.ring, lb[c]);
    const auto nz = lead_numerator(*pres_.ring, lz[c]);
    for (const auto& [k, v] : nb) series_[k + pres_.twists[c]] += v;
    for (const auto& [k, v] : nz) series_[k + pres_.twists[c]] -= v;
  }
  std::erase_if(series_, [](const auto& kv) { return kv.second == 0; });

  // Finite length iff prod (1 - s^{w_i}) divides the numerator.
  std::map<int, long long> q = series_;
  for (int w : pres_.ring->weights()) {
    if (q.empty()) break;
    const int lo = q.begin()->first;
    const int hi = q.rbegin()->first;
    std::map<int, long long> next;
    for (int k = lo; k <= hi; ++k) {
      long long v = 0;
      if (auto it = q.find(k); it != q.end()) v = it->second;
      if (auto it = next.find(k - w); it != next.end()) v += it->second;
      if (v != 0) next[k] = v;
    }
    if (!next.empty() && next.rbegin()->first > hi - w) {
      finite_ = false;
      break;
    }
    q = std::move(next);
  }
  if (finite_) laurent_ = std::move(q);
}

ExtModule ExtModule::zero(int j, RingPtr ring, std::vector<int> twists) {
  GradedModulePresentation pres{std::move(ring), std::move(twists), {}, {}};
  return ExtModule(j, std::move(pres), {});
}

std::vector<ModuleVector> ExtModule::nonzero_generators() const {
  std::vector<ModuleVector> out;
  for (const auto& z : pres_.cocycles) {
    if (!is_boundary(z)) out.push_back(z);
  }
  return out;
}

long long ExtModule::dim(int s) const {
  if (series_.empty()) return 0;
  if (finite_) {
    auto it = laurent_.find(s);
    return it == laurent_.end() ? 0 : it->second;
  }
  std::lock_guard<std::mutex> lock(*mutex_);
  return expander_->coefficient(series_, s);
}

std::optional<int> ExtModule::min_degree() const {
  if (series_.empty()) return std::nullopt;
  return series_.begin()->first;
}

std::optional<int> ExtModule::max_degree() const {
  if (series_.empty() || !finite_) return std::nullopt;
  return laurent_.rbegin()->first;
}

// ------------------------------------------------------- ExtComputation

ExtComputation::ExtComputation(Ideal I, const CohomOptions& options) : ideal_(std::move(I)) {
  if (!ideal_.is_homogeneous()) throw DomainError("the ideal must be homogeneous");
  if (ideal_.is_unit()) throw DomainError("A/I is the zero ring");
  res_ = std::make_shared<const GradedFreeResolution>(free_resolution(ideal_, true));
  dim_ = ideal_.krull_dim();
  const int codim = n() - dim_;
  const int pd = projective_dimension();
  for (int j = 0; j <= n(); ++j) {
    const auto jj = static_cast<std::size_t>(j);
    std::vector<int> tw = dual_twists(*res_, jj);
    if (j < codim || j > pd) {
      ext_.push_back(std::make_shared<const ExtModule>(ExtModule::zero(j, ring(), tw)));
      continue;
    }
    GradedModulePresentation pres{ring(), tw, {}, {}};
    const ModuleOrder o = pres.order();
    if (j >= 1) pres.boundaries = dual_rows(*res_, jj, o);
    std::vector<ModuleVector> zgb;
    if (j == pd) {
      for (std::size_t c = 0; c < tw.size(); ++c) {
        zgb.push_back(vec::unit(static_cast<std::uint32_t>(c), o));
      }
      pres.cocycles = zgb;
    } else {
      const std::vector<int> tw1 = dual_twists(*res_, jj + 1);
      ModuleGens rows{ring(), tw1,
                      dual_rows(*res_, jj + 1, ModuleOrder::term_over_position(ring(), tw1))};
      SubmoduleBasis sb(std::move(rows), tw, options.groebner);
      pres.cocycles = sb.syzygies(true).generators;
      zgb = sb.syzygy_basis();
    }
    ext_.push_back(std::make_shared<const ExtModule>(j, std::move(pres), std::move(zgb)));
  }
}

int ExtComputation::max_shift() const {
  int m = 0;
  for (std::size_t k = 0; k <= res_->length(); ++k) {
    for (int a : res_->twists(k)) m = std::max(m, a);
  }
  return m;
}

std::vector<GradedModulePresentation> ext_modules(const Ideal& I) {
  ExtComputation e(I);
  std::vector<GradedModulePresentation> out;
  for (int j = 0; j <= e.n(); ++j) out.push_back(e.ext(j).presentation());
  return out;
}

int depth(const ExtComputation& ext) {
  const int pd = ext.projective_dimension();
  int top = -1;
  for (int j = 0; j <= ext.n(); ++j) {
    if (!ext.ext(j).is_zero()) top = j;
  }
  if (top != pd) throw StructuralError("projective dimension and Ext vanishing disagree");
  return ext.n() - pd;
}

// ------------------------------------------------------------- tables

long long LocalCohomologyTable::dim(int i, int t) const {
  const Index& idx = indices.at(static_cast<std::size_t>(i));
  if (idx.zero) return 0;
  if (t < idx.t_low) {
    if (idx.zero_below) return 0;
    throw WindowRequired("degree " + std::to_string(t) + " of H^" + std::to_string(i) +
                         " lies below the computed window");
  }
  if (t > idx.t_high) {
    if (idx.zero_above) return 0;
    throw WindowRequired("degree " + std::to_string(t) + " of H^" + std::to_string(i) +
                         " lies above the computed window");
  }
  auto it = dims.find({i, t});
  return it == dims.end() ? 0 : it->second;
}

LocalCohomologyTable local_cohomology_table(const ExtComputation& ext,
                                            std::optional<std::pair<int, int>> window) {
  LocalCohomologyTable table;
  table.n = ext.n();
  table.d = ext.d();
  const int d = ext.d();
  for (int i = 0; i <= ext.n(); ++i) {
    const ExtModule& E = ext.ext(ext.n() - i);
    LocalCohomologyTable::Index idx;
    idx.i = i;
    idx.zero = E.is_zero();
    if (idx.zero) {
      table.indices.push_back(idx);
      continue;
    }
    idx.finite_length = E.finite_length();
    idx.t_high = -*E.min_degree() - d;
    if (idx.finite_length) {
      idx.t_low = -*E.max_degree() - d;
    } else {
      idx.t_low = std::min(idx.t_high, -(d + ext.max_shift()));
      idx.zero_below = false;
    }
    if (window) {
      if (!idx.finite_length) idx.t_low = window->first;
      if (window->first > idx.t_low) {
        idx.t_low = window->first;
        idx.zero_below = false;
      }
      if (window->second < idx.t_high) {
        idx.t_high = window->second;
        idx.zero_above = false;
      }
    }
    for (int t = idx.t_low; t <= idx.t_high; ++t) {
      const long long v = E.dim(-t - d);
      if (v != 0) table.dims[{i, t}] = v;
    }
    table.indices.push_back(idx);
  }
  return table;
}

// ------------------------------------------------------------ Ext maps

ModuleVector ExtMap::apply(const ModuleVector& v) const {
  return apply_columns(columns, v, target->order());
}

ExtMap dualize(const ChainMap& lift, int j, std::shared_ptr<const ExtModule> of_I,
               std::shared_ptr<const ExtModule> of_J) {
  ExtMap f;
  f.j = j;
  const std::size_t rank_i = of_I->presentation().twists.size();
  std::vector<std::vector<ModTerm>> cols(rank_i);
  const auto jj = static_cast<std::size_t>(j);
  if (jj < lift.maps.size()) {
    const auto& m = lift.maps[jj];
    for (std::size_t c = 0; c < m.size(); ++c) {
      for (const auto& t : m[c].terms) {
        cols.at(t.comp).push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
      }
    }
  }
  const ModuleOrder o = of_J->order();
  for (auto& c : cols) f.columns.push_back(vec::normalize(std::move(c), o));
  f.source = std::move(of_I);
  f.target = std::move(of_J);
  return f;
}

std::vector<ExtMap> induced_ext_maps(const ExtComputation& I, const ExtComputation& J) {
  if (!I.ideal().contains(J.ideal())) throw DomainError("J is not contained in I");
  ChainLifter lifter(I.resolution());
  const ChainMap lift = lifter.lift(*J.resolution());
  std::vector<ExtMap> out;
  for (int j = 0; j <= I.n(); ++j) out.push_back(dualize(lift, j, I.ext_ptr(j), J.ext_ptr(j)));
  return out;
}

ExtMap induced_ext_map(const ExtComputation& I, const ExtComputation& J, int j) {
  return induced_ext_maps(I, J).at(static_cast<std::size_t>(j));
}

InjectivityResult is_injective(const ExtMap& f, std::optional<int> min_degree) {
  InjectivityResult result;
  const ExtModule& src = *f.source;
  const ExtModule& tgt = *f.target;
  if (src.is_zero()) return result;
  const std::vector<ModuleVector> z = src.nonzero_generators();
  const ModuleOrder so = src.order();
  const ModuleOrder to = tgt.order();
  ModuleGens gens{src.presentation().ring, tgt.presentation().twists, {}};
  std::vector<int> degrees;
  for (const auto& v : z) {
    gens.generators.push_back(f.apply(v));
    degrees.push_back(vec::degree(v, so));
  }
  for (const auto& b : tgt.boundary_basis().basis()) {
    gens.generators.push_back(b);
    degrees.push_back(vec::degree(b, to));
  }
  SubmoduleBasis sb(std::move(gens), degrees);
  std::vector<std::pair<int, ModuleVector>> kernel;
  for (const auto& s : sb.syzygy_basis()) {
    std::vector<ModTerm> acc;
    for (const auto& t : s.terms) {
      if (t.comp >= z.size()) continue;
      for (const auto& u : z[t.comp].terms) {
        acc.push_back({u.mono * t.mono, u.comp, u.coeff * t.coeff});
      }
    }
    ModuleVector k = vec::normalize(std::move(acc), so);
    if (k.is_zero()) continue;
    const int deg = vec::degree(k, so);
    kernel.emplace_back(deg, std::move(k));
  }
  std::stable_sort(kernel.begin(), kernel.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  const RingPtr& ring = src.presentation().ring;
  for (const auto& [deg, k] : kernel) {
    if (!min_degree || deg >= *min_degree) {
      if (!src.is_boundary(k)) {
        result.injective = false;
        result.witness = k;
        result.witness_degree = deg;
        return result;
      }
      continue;
    }
    // Multiples landing in [min_degree, min_degree + max weight - 1].
    const int lo = *min_degree - deg;
    for (int e = lo; e < lo + ring->max_weight(); ++e) {
      for (const auto& m : monomials_of_degree(*ring, e)) {
        ModuleVector mk = vec::mul_term(k, m, ring->field().one());
        if (!src.is_boundary(mk)) {
          result.injective = false;
          result.witness = std::move(mk);
          result.witness_degree = deg + e;
          return result;
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------- diagnostics

DuBoisReport du_bois_graded_criterion(const ExtComputation& ext) {
  DuBoisReport r;
  const int d = ext.d();
  for (int i = 1; i <= ext.n(); ++i) {
    const ExtModule& E = ext.ext(ext.n() - i);
    if (E.is_zero()) continue;
    const int t_high = -*E.min_degree() - d;
    for (int t = 1; t <= t_high; ++t) {
      const long long v = E.dim(-t - d);
      if (v != 0) r.offending.push_back({i, t, v});
    }
  }
  r.satisfied = r.offending.empty();
  return r;
}

std::vector<VanishingEntry> vanishing_check(const ExtComputation& ext) {
  std::vector<VanishingEntry> out;
  const int d = ext.d();
  for (int i = 0; i <= ext.n(); ++i) {
    const ExtModule& E = ext.ext(ext.n() - i);
    if (E.is_zero()) continue;
    VanishingEntry v{i, E.finite_length(), false, {}};
    if (E.finite_length()) {
      const int t_low = -*E.max_degree() - d;
      for (int t = t_low; t < 0; ++t) {
        const long long x = E.dim(-t - d);
        if (x != 0) v.offending.push_back({i, t, x});
      }
      v.vanishes = v.offending.empty();
    }
    out.push_back(std::move(v));
  }
  return out;
}

StcmReport set_theoretic_cm_obstruction(const ExtComputation& ext,
                                        std::optional<std::pair<int, int>> window) {
  StcmReport r;
  const LocalCohomologyTable table = local_cohomology_table(ext, window);
  for (int i = 0; i < ext.dimension(); ++i) {
    const auto& idx = table.indices[static_cast<std::size_t>(i)];
    if (idx.zero) continue;
    if (!idx.zero_below) r.truncated = true;
    for (int t = idx.t_low; t <= std::min(0, idx.t_high); ++t) {
      const long long v = table.dim(i, t);
      if (v != 0) r.hits.push_back({i, t, v});
    }
  }
  return r;
}

}  // namespace glc
