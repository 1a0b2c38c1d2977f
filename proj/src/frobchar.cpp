#include "glc/frobchar.hpp"

#include <algorithm>
#include <set>

#include "glc/error.hpp"
#include "glc/linalg.hpp"

namespace glc {

namespace {

unsigned long long ipow(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e--) r *= b;
  return r;
}

// Coordinates of the degree-s piece of sum_c A e_c, deg e_c = twists[c].
class Coordinates {
 public:
  Coordinates(const GradedRingSpec& ring, const std::vector<int>& twists, int s) {
    for (std::size_t c = 0; c < twists.size(); ++c) {
      if (s - twists[c] < 0) continue;
      for (const auto& m : monomials_of_degree(ring, s - twists[c])) {
        index_[{static_cast<std::uint32_t>(c), m.exponents()}] = size_++;
      }
    }
  }
  std::size_t size() const { return size_; }
  std::vector<Scalar> operator()(const ModuleVector& v, const Scalar& zero) const {
    std::vector<Scalar> out(size_, zero);
    for (const auto& t : v.terms) out[index_.at({t.comp, t.mono.exponents()})] = t.coeff;
    return out;
  }

 private:
  std::map<std::pair<std::uint32_t, std::vector<int>>, std::size_t> index_;
  std::size_t size_ = 0;
};

bool in_frobenius_maximal(const Polynomial& f, unsigned p) {
  for (const auto& t : f.terms()) {
    bool divisible = false;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] >= static_cast<int>(p)) divisible = true;
    }
    if (!divisible) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------- context

FrobeniusContext::FrobeniusContext(Ideal I, CohomOptions options)
    : ideal_(std::move(I)), p_(ideal_.ring()->field().characteristic()), options_(options),
      cache_(std::make_unique<Cache>()) {
  if (p_ == 0) throw DomainError("Frobenius tests need a field of characteristic p > 0");
  if (!ideal_.is_homogeneous()) throw DomainError("the ideal must be homogeneous");
}

const Ideal& FrobeniusContext::frobenius_power(unsigned e) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->powers.find(e);
  if (it == cache_->powers.end()) {
    auto J = std::make_unique<Ideal>(glc::frobenius_power(ideal_, ipow(p_, e)));
    if (!ideal_.contains(*J)) throw StructuralError("Frobenius power not contained in I");
    it = cache_->powers.emplace(e, std::move(J)).first;
  }
  return *it->second;
}

const ExtComputation& FrobeniusContext::ext() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->ext) cache_->ext = std::make_unique<ExtComputation>(ideal_, options_);
  return *cache_->ext;
}

// ----------------------------------------------------------- Fedder

FedderResult fedder_fpure(const FrobeniusContext& ctx) {
  // m^[p] is monomial, so containment is checked term by term on generators.
  FedderResult r;
  const Ideal colon_ideal = colon(ctx.frobenius_power(1), ctx.ideal());
  for (const auto& g : colon_ideal.generators()) {
    if (!in_frobenius_maximal(g, ctx.p())) {
      r.fpure = true;
      r.witness = g;
      return r;
    }
  }
  return r;
}

// ------------------------------------------------------ F-injectivity

ModuleVector frobenius_trace(const ChainMap& lambda, int j, const ModuleVector& v, unsigned q,
                             const ModuleOrder& order) {
  const auto jj = static_cast<std::size_t>(j);
  if (jj >= lambda.maps.size()) return {};
  // by_comp[c] lists (c', nu, b): lambda_j(e'_{c'}) has the term b nu e_c.
  struct Entry {
    std::uint32_t target;
    Monomial mono;
    Scalar coeff;
  };
  std::map<std::uint32_t, std::vector<Entry>> by_comp;
  const auto& cols = lambda.maps[jj];
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& t : cols[c].terms) {
      by_comp[t.comp].push_back({static_cast<std::uint32_t>(c), t.mono, t.coeff});
    }
  }
  std::vector<ModTerm> out;
  const int qi = static_cast<int>(q);
  for (const auto& u : v.terms) {
    auto it = by_comp.find(u.comp);
    if (it == by_comp.end()) continue;
    for (const auto& e : it->second) {
      const Monomial m = u.mono * e.mono;
      std::vector<int> root(m.size());
      bool survives = true;
      for (std::size_t i = 0; i < m.size() && survives; ++i) {
        if ((m[i] + 1) % qi != 0) survives = false;
        root[i] = (m[i] + 1) / qi - 1;
      }
      if (!survives) continue;
      // The prime field is fixed by Frobenius, so coefficients pass through.
      out.push_back({Monomial(root, order.ring()->weights()), e.target, u.coeff * e.coeff});
    }
  }
  return vec::normalize(std::move(out), order);
}

FInjectivityReport f_injective_check(const FrobeniusContext& ctx, unsigned e) {
  if (e == 0) throw DomainError("Frobenius exponent must be at least 1");
  FInjectivityReport rep;
  const unsigned q = static_cast<unsigned>(ipow(ctx.p(), e));
  rep.q = q;
  const ExtComputation& ext = ctx.ext();
  const GradedFreeResolution& res = *ext.resolution();
  const GradedFreeResolution frob = frobenius_resolution(res, q);
  ChainLifter lifter(ext.resolution());
  const ChainMap lambda = lifter.lift(frob);
  const RingPtr& ring = ctx.ring();
  const Scalar zero = ring->field().zero();
  const int d = ext.d();

  for (int j = 0; j <= ext.n(); ++j) {
    const ExtModule& E = ext.ext(j);
    if (E.is_zero()) continue;
    FInjectivityEntry entry;
    entry.j = j;
    entry.i = ext.n() - j;
    const ModuleOrder order = E.order();
    const auto& twists = E.presentation().twists;

    std::vector<std::pair<int, ModuleVector>> gens;
    for (auto& g : E.nonzero_generators()) gens.emplace_back(vec::degree(g, order), std::move(g));
    std::stable_sort(gens.begin(), gens.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::set<int> degrees;
    for (const auto& g : gens) degrees.insert(g.first);

    for (int s : degrees) {
      const long long target_dim = E.dim(s);
      const int src_deg = static_cast<int>(q) * (s + d) - d;
      const long long src_dim = E.dim(src_deg);
      // Representatives of a basis of [Ext^j]_{src_deg}.
      std::vector<ModuleVector> reps;
      if (src_dim > 0) {
        const Coordinates src_coords(*ring, twists, src_deg);
        RowSpace span(src_coords.size(), zero);
        for (const auto& z : E.presentation().cocycles) {
          const int dz = vec::degree(z, order);
          if (src_deg < dz) continue;
          for (const auto& m : monomials_of_degree(*ring, src_deg - dz)) {
            ModuleVector v = E.reduce(vec::mul_term(z, m, ring->field().one()));
            if (v.is_zero()) continue;
            if (span.insert(src_coords(v, zero))) reps.push_back(std::move(v));
            if (static_cast<long long>(reps.size()) == src_dim) break;
          }
          if (static_cast<long long>(reps.size()) == src_dim) break;
        }
        if (static_cast<long long>(reps.size()) != src_dim) {
          throw StructuralError("cocycle representatives do not span the Ext piece");
        }
      }
      const Coordinates tgt_coords(*ring, twists, s);
      RowSpace image(tgt_coords.size(), zero);
      for (const auto& v : reps) {
        const ModuleVector w = E.reduce(frobenius_trace(lambda, j, v, q, order));
        if (!w.is_zero()) image.insert(tgt_coords(w, zero));
      }
      if (static_cast<long long>(image.rank()) == target_dim) continue;
      entry.injective = false;
      entry.s = s;
      entry.t = -s - d;
      entry.target_dim = target_dim;
      entry.image_rank = static_cast<long long>(image.rank());
      for (const auto& [dg, g] : gens) {
        if (dg != s) continue;
        const ModuleVector r = E.reduce(g);
        if (!image.contains(tgt_coords(r, zero))) {
          entry.witness = r;
          break;
        }
      }
      break;
    }
    rep.injective = rep.injective && entry.injective;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

// ---------------------------------------------------- surjectivity

SurjectivityReport fpure_surjectivity_check(const FrobeniusContext& ctx, const Ideal& J,
                                            unsigned max_e) {
  if (J.ring() != ctx.ring() && *J.ring() != *ctx.ring()) {
    throw StructuralError("J lives in a different ring");
  }
  if (!ctx.ideal().contains(J)) throw DomainError("J is not contained in I");
  SurjectivityReport rep;
  for (unsigned e = 0; e <= max_e && rep.q == 0; ++e) {
    const Ideal& P = e == 0 ? ctx.ideal() : ctx.frobenius_power(e);
    if (J.contains(P)) rep.q = static_cast<unsigned>(ipow(ctx.p(), e));
  }
  if (rep.q == 0) {
    throw DomainError("no Frobenius power I^[p^e] with e <= " + std::to_string(max_e) +
                      " lies in J");
  }
  ExtComputation of_J(J, ctx.options());
  for (const ExtMap& f : induced_ext_maps(ctx.ext(), of_J)) {
    if (f.source->is_zero()) continue;
    SurjectivityEntry entry;
    entry.j = f.j;
    const InjectivityResult r = is_injective(f);
    entry.injective = r.injective;
    entry.witness = r.witness;
    entry.witness_degree = r.witness_degree;
    rep.holds = rep.holds && r.injective;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

// ------------------------------------------------------ deformation

DeformationReport deformation_check(const FrobeniusContext& ctx, const Polynomial& x,
                                    unsigned e) {
  DeformationReport rep;
  if (!x.is_homogeneous() || x.is_zero()) {
    throw DomainError("the element must be a nonzero homogeneous polynomial");
  }
  if (x.is_constant()) {
    rep.degenerate = true;
    rep.leg2 = true;
    rep.conclusion = "degenerate input: x is a unit, so A/(I + (x)) is the zero ring";
    return rep;
  }
  if (!ctx.ideal().contains(colon(ctx.ideal(), x))) {
    throw DomainError("x is a zerodivisor on A/I");
  }

  const FrobeniusContext section(ctx.ideal().with_generators({x}), ctx.options());
  rep.leg1_detail = f_injective_check(section, e);
  rep.leg1 = rep.leg1_detail->injective;

  const ExtComputation& ext = ctx.ext();
  const int delta = *x.homogeneous_degree();
  rep.leg2 = true;
  for (int j = 0; j <= ext.n(); ++j) {
    const auto src = ext.ext_ptr(j);
    if (src->is_zero()) continue;
    // Multiplication by x as a degree-preserving map into Ext^j(-deg x).
    GradedModulePresentation shifted = src->presentation();
    for (int& t : shifted.twists) t -= delta;
    auto tgt = std::make_shared<const ExtModule>(j, std::move(shifted),
                                                 src->cocycle_basis().basis());
    ExtMap f;
    f.j = j;
    f.source = src;
    f.target = tgt;
    for (std::size_t c = 0; c < src->presentation().twists.size(); ++c) {
      ModuleVector unit = vec::unit(static_cast<std::uint32_t>(c), tgt->order());
      f.columns.push_back(vec::mul_poly(unit, x, tgt->order()));
    }
    const InjectivityResult r = is_injective(f);
    rep.leg2_detail.push_back({j, r.injective, r.witness, r.witness_degree});
    rep.leg2 = rep.leg2 && r.injective;
  }
  rep.pass = rep.leg1 && rep.leg2;
  if (rep.pass) {
    rep.conclusion = "x^(p-1) F is injective on every H^i_m(A/I)";
  } else if (!rep.leg1) {
    rep.conclusion = "A/(I + (x)) is not F-injective; no conclusion";
  } else {
    rep.conclusion = "multiplication by x is not injective on some Ext^j; no conclusion";
  }
  return rep;
}

}  // namespace glc
