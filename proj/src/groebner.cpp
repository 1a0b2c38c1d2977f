#include "glc/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <map>
#include <mutex>

#include "glc/error.hpp"

namespace glc {

namespace {

int sugar_of(const ModuleVector& v, const ModuleOrder& order) {
  int s = INT_MIN;
  for (const auto& t : v.terms) s = std::max(s, order.degree(t));
  return s;
}

// Reduces f in place against `basis`; shared by the engine and Reducer.
ModuleVector reduce_against(ModuleVector f, const std::vector<ModuleVector>& basis,
                            const std::vector<std::vector<std::size_t>>& by_comp,
                            const ModuleOrder& order, bool full,
                            std::vector<Reducer::Quotient>* quotients,
                            const std::vector<int>* sugars = nullptr, int* sugar = nullptr) {
  std::vector<ModTerm> done;
  std::size_t pos = 0;
  auto find = [&](const ModTerm& t) -> std::optional<std::size_t> {
    if (t.comp >= by_comp.size()) return std::nullopt;
    for (std::size_t idx : by_comp[t.comp]) {
      if (basis[idx].leading().mono.divides(t.mono)) return idx;
    }
    return std::nullopt;
  };
  while (pos < f.terms.size()) {
    const ModTerm& lt = f.terms[pos];
    auto idx = find(lt);
    if (!idx) {
      if (!full) break;
      done.push_back(lt);
      ++pos;
      continue;
    }
    const ModuleVector& g = basis[*idx];
    const Monomial q = lt.mono / g.leading().mono;
    const Scalar c = lt.coeff;
    if (quotients) quotients->push_back({*idx, q, c});
    if (sugar) *sugar = std::max(*sugar, q.degree() + (*sugars)[*idx]);
    if (pos) {
      f.terms.erase(f.terms.begin(), f.terms.begin() + static_cast<std::ptrdiff_t>(pos));
      pos = 0;
    }
    f = vec::sub_mul(f, c, q, g, order);
  }
  if (done.empty()) {
    if (pos) f.terms.erase(f.terms.begin(), f.terms.begin() + static_cast<std::ptrdiff_t>(pos));
    return f;
  }
  done.insert(done.end(), f.terms.begin() + static_cast<std::ptrdiff_t>(pos), f.terms.end());
  return ModuleVector{std::move(done)};
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int sugar;
  bool live;
};

class Engine {
 public:
  Engine(const ModuleOrder& order, const GroebnerOptions& options)
      : order_(order), options_(options), by_comp_(order.rank()) {}

  GroebnerResult run(const std::vector<ModuleVector>& gens) {
    std::vector<std::pair<int, std::size_t>> queue;
    std::vector<ModuleVector> input(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].is_zero()) continue;
      for (const auto& t : gens[k].terms) {
        if (t.comp >= order_.rank()) throw StructuralError("generator outside the free module");
      }
      input[k] = vec::monic(gens[k]);
      queue.emplace_back(sugar_of(input[k], order_), k);
    }
    std::stable_sort(queue.begin(), queue.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    GroebnerResult result;
    std::size_t gi = 0;
    while (true) {
      int d = INT_MAX;
      if (!pairs_.empty()) d = pairs_.begin()->first;
      if (gi < queue.size()) d = std::min(d, queue[gi].first);
      if (d == INT_MAX) break;
      while (!pairs_.empty() && pairs_.begin()->first <= d) {
        std::vector<std::size_t> bucket = std::move(pairs_.begin()->second);
        pairs_.erase(pairs_.begin());
        std::sort(bucket.begin(), bucket.end(), [&](std::size_t a, std::size_t b) {
          const Pair& pa = pool_[a];
          const Pair& pb = pool_[b];
          return pa.j != pb.j ? pa.j < pb.j : pa.i < pb.i;
        });
        for (std::size_t id : bucket) {
          if (!pool_[id].live) continue;
          pool_[id].live = false;
          --live_;
          process_pair(pool_[id]);
        }
      }
      while (gi < queue.size() && queue[gi].first <= d) {
        const std::size_t k = queue[gi++].second;
        int s = sugar_of(input[k], order_);
        ModuleVector h =
            reduce_against(input[k], basis_, by_comp_, order_, false, nullptr, &sugars_, &s);
        if (!h.is_zero()) {
          insert(vec::monic(std::move(h)), s);
          if (options_.track_minimal) result.minimal.push_back(k);
        }
      }
    }
    std::sort(result.minimal.begin(), result.minimal.end());
    result.basis = finish();
    return result;
  }

 private:
  void process_pair(const Pair& p) {
    const ModuleVector& gi = basis_[p.i];
    const ModuleVector& gj = basis_[p.j];
    const Monomial qi = p.lcm / gi.leading().mono;
    const Monomial qj = p.lcm / gj.leading().mono;
    ModuleVector s = vec::mul_term(gi, qi, order_.ring()->field().one());
    s = vec::sub_mul(s, order_.ring()->field().one(), qj, gj, order_);
    int sugar = p.sugar;
    ModuleVector h = reduce_against(std::move(s), basis_, by_comp_, order_, false, nullptr,
                                    &sugars_, &sugar);
    if (!h.is_zero()) insert(vec::monic(std::move(h)), sugar);
  }

  void insert(ModuleVector h, int sugar) {
    const std::size_t hn = basis_.size();
    const ModTerm& lt = h.leading();
    const std::uint32_t comp = lt.comp;
    const GradedRingSpec& ring = *order_.ring();
    const bool rank_one = order_.rank() == 1;

    // Gebauer-Möller update.
    for (auto& [s, ids] : pairs_) {
      for (std::size_t id : ids) {
        Pair& p = pool_[id];
        if (!p.live) continue;
        if (basis_[p.i].leading().comp != comp) continue;
        if (!lt.mono.divides(p.lcm)) continue;
        const Monomial li = ring.lcm(basis_[p.i].leading().mono, lt.mono);
        const Monomial lj = ring.lcm(basis_[p.j].leading().mono, lt.mono);
        if (li != p.lcm && lj != p.lcm) {
          p.live = false;
          --live_;
        }
      }
    }

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> cands;
    for (std::size_t i : by_comp_[comp]) {
      if (redundant_[i]) continue;
      const Monomial& li = basis_[i].leading().mono;
      cands.push_back({i, ring.lcm(li, lt.mono), rank_one && li.coprime(lt.mono), true});
    }
    // Criteria M and F: a candidate survives unless the lcm of another
    // pending or surviving candidate divides its lcm.
    std::vector<char> pending(cands.size(), 1);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      pending[a] = 0;
      cands[a].keep = false;
      if (cands[a].coprime) {
        cands[a].keep = true;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
        if (b == a || !(pending[b] || cands[b].keep)) continue;
        dominated = cands[b].lcm.divides(cands[a].lcm);
      }
      cands[a].keep = !dominated;
    }

    for (std::size_t i : by_comp_[comp]) {
      if (!redundant_[i] && lt.mono.divides(basis_[i].leading().mono)) redundant_[i] = true;
    }

    basis_.push_back(std::move(h));
    sugars_.push_back(sugar);
    redundant_.push_back(false);
    by_comp_[comp].push_back(hn);

    for (const auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      const Monomial& li = basis_[c.i].leading().mono;
      const int s = std::max(sugars_[c.i] + (c.lcm / li).degree(),
                             sugar + (c.lcm / basis_[hn].leading().mono).degree());
      pool_.push_back({c.i, hn, c.lcm, s, true});
      pairs_[s].push_back(pool_.size() - 1);
      if (++live_ > options_.max_pairs) {
        throw ResourceError("gb-pairs", "Gröbner pair queue exceeded the configured cap");
      }
    }
  }

  std::vector<ModuleVector> finish() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!redundant_[i]) keep.push_back(i);
    }
    std::vector<ModuleVector> out;
    out.reserve(keep.size());
    if (options_.reduce_tails) {
      std::vector<ModuleVector> kept;
      for (std::size_t i : keep) kept.push_back(basis_[i]);
      std::vector<std::vector<std::size_t>> idx(order_.rank());
      for (std::size_t k = 0; k < kept.size(); ++k) idx[kept[k].leading().comp].push_back(k);
      for (std::size_t k = 0; k < kept.size(); ++k) {
        ModuleVector head;
        head.terms.push_back(kept[k].terms.front());
        ModuleVector tail;
        tail.terms.assign(kept[k].terms.begin() + 1, kept[k].terms.end());
        tail = reduce_against(std::move(tail), kept, idx, order_, true, nullptr);
        head.terms.insert(head.terms.end(), tail.terms.begin(), tail.terms.end());
        out.push_back(std::move(head));
      }
    } else {
      for (std::size_t i : keep) out.push_back(std::move(basis_[i]));
    }
    std::sort(out.begin(), out.end(), [&](const ModuleVector& a, const ModuleVector& b) {
      return order_.compare(a.leading(), b.leading()) < 0;
    });
    return out;
  }

  const ModuleOrder& order_;
  GroebnerOptions options_;
  std::vector<ModuleVector> basis_;
  std::vector<int> sugars_;
  std::vector<bool> redundant_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pool_;
  std::map<int, std::vector<std::size_t>> pairs_;
  std::size_t live_ = 0;
};

ModuleOrder ideal_order(const RingPtr& ring) {
  return ModuleOrder::term_over_position(ring, {0});
}

std::vector<ModuleVector> to_vectors(const std::vector<Polynomial>& polys,
                                     const ModuleOrder& order) {
  std::vector<ModuleVector> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(vec::from_polynomial(f, 0, order));
  return out;
}

Polynomial to_polynomial(const ModuleVector& v, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_sorted(ring, std::move(terms));
}

}  // namespace

namespace {
std::atomic<std::size_t> max_pairs_default{1'000'000};
}  // namespace

std::size_t default_max_pairs() { return max_pairs_default.load(); }
void set_default_max_pairs(std::size_t cap) { max_pairs_default.store(cap); }

GroebnerResult groebner_basis(const std::vector<ModuleVector>& gens, const ModuleOrder& order,
                              const GroebnerOptions& options) {
  Engine engine(order, options);
  return engine.run(gens);
}

Reducer::Reducer(std::vector<ModuleVector> basis, ModuleOrder order)
    : basis_(std::move(basis)), order_(std::move(order)), by_comp_(order_.rank()) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].is_zero()) throw StructuralError("zero vector in a reduction basis");
    if (!basis_[i].leading().coeff.is_one()) basis_[i] = vec::monic(basis_[i]);
    by_comp_[basis_[i].leading().comp].push_back(i);
  }
}

ModuleVector Reducer::reduce(ModuleVector v, bool full, std::vector<Quotient>* quotients) const {
  return reduce_against(std::move(v), basis_, by_comp_, order_, full, quotients);
}

std::optional<std::size_t> Reducer::divisor(const Monomial& m, std::uint32_t comp) const {
  if (comp >= by_comp_.size()) return std::nullopt;
  for (std::size_t idx : by_comp_[comp]) {
    if (basis_[idx].leading().mono.divides(m)) return idx;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::once_flag gb_once;
  std::vector<Polynomial> gb;
  Reducer reducer;
  std::once_flag min_once;
  std::vector<Polynomial> minimal;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (*g.ring() != *ring_) throw StructuralError("ideal generator from a different ring");
    if (g.ring()->order() != ring_->order()) g = g.reorder(ring_);
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, ring->field().one());
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::parse(const RingPtr& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(parse_polynomial(ring, g));
  return Ideal(ring, std::move(gens));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->gb_once, [&] {
    const ModuleOrder order = ideal_order(ring_);
    GroebnerResult r = glc::groebner_basis(to_vectors(gens_, order), order);
    for (const auto& v : r.basis) cache_->gb.push_back(to_polynomial(v, ring_));
    cache_->reducer = Reducer(std::move(r.basis), order);
  });
  return cache_->gb;
}

const Reducer& Ideal::reducer() const {
  groebner_basis();
  return cache_->reducer;
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner_basis()) out.push_back(g.leading_monomial());
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (*f.ring() != *ring_) throw StructuralError("polynomial from a different ring");
  const Reducer& r = reducer();
  const Polynomial g = f.ring()->order() == ring_->order() ? f : f.reorder(ring_);
  return to_polynomial(r.reduce(vec::from_polynomial(g, 0, r.order())), ring_);
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

std::vector<Polynomial> Ideal::minimal_generators() const {
  std::call_once(cache_->min_once, [&] {
    if (!is_homogeneous()) throw DomainError("minimal generators need homogeneous generators");
    const ModuleOrder order = ideal_order(ring_);
    GroebnerOptions opts;
    opts.track_minimal = true;
    opts.reduce_tails = false;
    GroebnerResult r = glc::groebner_basis(to_vectors(gens_, order), order, opts);
    for (std::size_t k : r.minimal) cache_->minimal.push_back(gens_[k].monic());
  });
  return cache_->minimal;
}

int Ideal::krull_dim() const {
  if (is_unit()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : leading_monomials()) supports.push_back(m.mask());
  const int n = static_cast<int>(ring_->nvars());
  int best = 0;
  // Largest variable set containing the support of no leading monomial.
  auto ok = [&](std::uint32_t set) {
    for (std::uint32_t s : supports) {
      if ((s & ~set) == 0) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int next, std::uint32_t set, int size) -> void {
    if (size + (n - next) <= best) return;
    if (next == n) {
      best = size;
      return;
    }
    const std::uint32_t with = set | (1u << next);
    if (ok(with)) self(self, next + 1, with, size + 1);
    self(self, next + 1, set, size);
  };
  dfs(dfs, 0, 0u, 0);
  return best;
}

Ideal Ideal::operator+(const Ideal& o) const {
  if (*ring_ != *o.ring_) throw StructuralError("ideals from different rings");
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& o) const {
  if (*ring_ != *o.ring_) throw StructuralError("ideals from different rings");
  std::vector<Polynomial> g;
  for (const auto& a : gens_) {
    for (const auto& b : o.gens_) g.push_back(a * b);
  }
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::with_generators(std::vector<Polynomial> extra) const {
  std::vector<Polynomial> g = gens_;
  for (auto& e : extra) g.push_back(std::move(e));
  return Ideal(ring_, std::move(g));
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

// ----------------------------------------------------------- submodules

std::vector<int> ModuleGens::generator_degrees() const {
  const ModuleOrder o = order();
  std::vector<int> out;
  for (const auto& g : generators) out.push_back(vec::degree(g, o));
  return out;
}

SubmoduleBasis::SubmoduleBasis(ModuleGens gens, std::optional<std::vector<int>> degrees,
                               const GroebnerOptions& options)
    : gens_(std::move(gens)), options_(options) {
  degrees_ = degrees ? std::move(*degrees) : gens_.generator_degrees();
  if (degrees_.size() != gens_.generators.size()) {
    throw StructuralError("degree list does not match the generators");
  }
  const std::size_t r = gens_.rank();
  const std::size_t m = degrees_.size();
  std::vector<int> twists = gens_.twists;
  twists.insert(twists.end(), degrees_.begin(), degrees_.end());
  aug_order_ = ModuleOrder::block(gens_.ring, twists, static_cast<std::uint32_t>(r));
  std::vector<ModuleVector> aug;
  aug.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<ModTerm> t = gens_.generators[i].terms;
    t.push_back({gens_.ring->one(), static_cast<std::uint32_t>(r + i), gens_.ring->field().one()});
    aug.push_back(vec::normalize(std::move(t), aug_order_));
  }
  GroebnerOptions opts = options_;
  opts.reduce_tails = false;
  opts.track_minimal = false;
  GroebnerResult res = groebner_basis(aug, aug_order_, opts);

  const ModuleOrder top = gens_.order();
  const ModuleOrder low = ModuleOrder::term_over_position(gens_.ring, degrees_);
  std::vector<ModuleVector> upper;
  for (const auto& g : res.basis) {
    if (g.leading().comp < r) {
      std::vector<ModTerm> t;
      for (const auto& term : g.terms) {
        if (term.comp < r) t.push_back(term);
      }
      upper.push_back(vec::normalize(std::move(t), top));
    } else {
      syz_.push_back(vec::remap(
          g, [r](std::uint32_t c) { return static_cast<std::uint32_t>(c - r); }, low));
    }
  }
  aug_ = Reducer(std::move(res.basis), aug_order_);
  sub_ = Reducer(std::move(upper), top);
}

std::optional<std::vector<Polynomial>> SubmoduleBasis::lift(const ModuleVector& v) const {
  const std::size_t r = gens_.rank();
  ModuleVector w = vec::reorder(v, aug_order_);
  w = aug_.reduce(std::move(w), false);
  if (!w.is_zero() && w.leading().comp < r) return std::nullopt;
  std::vector<Polynomial> out(degrees_.size(), Polynomial(gens_.ring));
  std::vector<std::vector<Term>> parts(degrees_.size());
  for (const auto& t : w.terms) parts[t.comp - r].push_back({t.mono, -t.coeff});
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out[i] = Polynomial::from_terms(gens_.ring, std::move(parts[i]));
  }
  return out;
}

ModuleGens SubmoduleBasis::syzygies(bool minimal) const {
  ModuleGens out{gens_.ring, degrees_, {}};
  if (!minimal) {
    out.generators = syz_;
    return out;
  }
  GroebnerOptions opts = options_;
  opts.track_minimal = true;
  opts.reduce_tails = false;
  GroebnerResult r = groebner_basis(syz_, out.order(), opts);
  for (std::size_t k : r.minimal) out.generators.push_back(syz_[k]);
  return out;
}

ModuleGens syzygies(const ModuleGens& M) { return SubmoduleBasis(M).syzygies(true); }

// ------------------------------------------------------ ideal operations

Ideal ideal_power(const Ideal& I, unsigned t, bool* warning) {
  if (warning) *warning = false;
  if (t == 0) {
    if (warning) *warning = true;
    return Ideal::unit(I.ring());
  }
  const bool graded = I.is_homogeneous();
  const std::vector<Polynomial> base = graded ? I.minimal_generators() : I.generators();
  std::vector<Polynomial> cur = base;
  for (unsigned k = 1; k < t; ++k) {
    std::vector<Polynomial> next;
    next.reserve(cur.size() * base.size());
    for (const auto& a : cur) {
      for (const auto& b : base) next.push_back(a * b);
    }
    Ideal step(I.ring(), std::move(next));
    cur = graded ? step.minimal_generators() : step.generators();
  }
  return Ideal(I.ring(), std::move(cur));
}

Ideal frobenius_power(const Ideal& I, unsigned long long q) {
  const std::uint32_t p = I.ring()->field().characteristic();
  if (p == 0) throw DomainError("Frobenius powers need positive characteristic");
  unsigned long long v = q;
  while (v > 1 && v % p == 0) v /= p;
  if (v != 1 || q < 1) throw DomainError("q must be a power of the characteristic");
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.frobenius(static_cast<unsigned>(q)));
  return Ideal(I.ring(), std::move(gens));
}

Ideal colon(const Ideal& J, const Ideal& I) {
  if (*J.ring() != *I.ring()) throw StructuralError("ideals from different rings");
  const RingPtr& ring = J.ring();
  const std::vector<Polynomial>& ig = I.generators();
  if (ig.empty()) return Ideal::unit(ring);
  if (J.is_zero()) {
    // (0 : I) = 0 in a domain.
    return Ideal::zero(ring);
  }
  const std::size_t s = ig.size();
  // Syzygies of (g_1..g_s) against J * A^s; the coefficient of the first
  // generator ranges over (J : I).
  if (!J.is_homogeneous() || !I.is_homogeneous()) {
    throw DomainError("colon ideals need homogeneous input");
  }
  std::vector<int> twists(s, 0);
  for (std::size_t i = 0; i < s; ++i) twists[i] = -*ig[i].homogeneous_degree();
  ModuleGens M{ring, twists, {}};
  const ModuleOrder o = M.order();
  std::vector<int> degrees;
  {
    std::vector<Polynomial> e = ig;
    M.generators.push_back(vec::from_entries(e, o));
    degrees.push_back(0);
  }
  for (const auto& j : J.generators()) {
    for (std::size_t i = 0; i < s; ++i) {
      M.generators.push_back(vec::from_polynomial(j, static_cast<std::uint32_t>(i), o));
      degrees.push_back(*j.homogeneous_degree() + twists[i]);
    }
  }
  SubmoduleBasis sb(M, degrees);
  ModuleGens syz = sb.syzygies(false);
  std::vector<Polynomial> out;
  for (const auto& z : syz.generators) {
    Polynomial c = vec::entry(z, 0, ring);
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  Ideal result(ring, std::move(out));
  return Ideal(ring, result.minimal_generators());
}

Ideal colon(const Ideal& J, const Polynomial& f) { return colon(J, Ideal(J.ring(), {f})); }

Ideal kernel_of_ring_map(const RingPtr& source, const RingPtr& target,
                         const std::vector<Polynomial>& images,
                         const std::optional<Ideal>& target_ideal) {
  const std::size_t n = source->nvars();
  const std::size_t m = target->nvars();
  if (images.size() != n) throw StructuralError("one image per source variable is required");
  if (n + m > kMaxVariables) throw StructuralError("too many variables for elimination");
  if (source->field() != target->field()) throw StructuralError("rings over different fields");
  std::optional<std::size_t> ref;
  for (std::size_t i = 0; i < n; ++i) {
    if (*images[i].ring() != *target) throw StructuralError("image from a different ring");
    if (!images[i].is_homogeneous()) throw DomainError("image of a variable is not homogeneous");
    if (!images[i].is_zero() && !ref) ref = i;
  }
  // Degree of image_i must be c * w_i for one positive rational c.
  std::vector<int> weights(m + n);
  for (std::size_t k = 0; k < m; ++k) weights[k] = target->weight(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].is_zero()) continue;
    const long long di = *images[i].homogeneous_degree();
    const long long dr = *images[*ref].homogeneous_degree();
    if (di * source->weight(*ref) != dr * source->weight(i)) {
      throw DomainError("images are not of degree proportional to the source weights");
    }
    weights[m + i] = static_cast<int>(di);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].is_zero()) weights[m + i] = 1;
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < m; ++k) names.push_back("_t" + std::to_string(k));
  for (std::size_t i = 0; i < n; ++i) names.push_back("_x" + std::to_string(i));
  RingPtr joint = GradedRingSpec::make(names, weights, source->field(),
                                       MonomialOrder{OrderKind::Elimination, m});
  auto lift_target = [&](const Polynomial& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      std::vector<int> e(m + n, 0);
      for (std::size_t k = 0; k < m; ++k) e[k] = t.mono[k];
      terms.push_back({joint->monomial(e), t.coeff});
    }
    return Polynomial::from_terms(joint, std::move(terms));
  };
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(Polynomial::variable(joint, m + i) - lift_target(images[i]));
  }
  if (target_ideal) {
    for (const auto& g : target_ideal->generators()) gens.push_back(lift_target(g));
  }
  Ideal elim(joint, std::move(gens));
  std::vector<Polynomial> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].is_zero()) kernel.push_back(Polynomial::variable(source, i));
  }
  for (const auto& g : elim.groebner_basis()) {
    bool free_of_target = true;
    for (const auto& t : g.terms()) {
      for (std::size_t k = 0; k < m && free_of_target; ++k) {
        if (t.mono[k]) free_of_target = false;
      }
    }
    if (!free_of_target) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<int> e(n);
      bool killed = false;
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = t.mono[m + i];
        if (e[i] && images[i].is_zero()) killed = true;
      }
      if (!killed) terms.push_back({source->monomial(e), t.coeff});
    }
    Polynomial f = Polynomial::from_terms(source, std::move(terms));
    if (!f.is_zero()) kernel.push_back(std::move(f));
  }
  Ideal K(source, std::move(kernel));
  return Ideal(source, K.minimal_generators());
}

std::vector<Monomial> slice_basis(const Ideal& I, int t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  const Reducer& r = I.reducer();
  for_each_monomial_of_degree(*I.ring(), t, [&](const Monomial& mono) {
    if (r.is_standard(mono, 0)) out.push_back(mono);
  });
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return I.ring()->compare(a, b) > 0;
  });
  return out;
}

std::size_t hilbert_function(const Ideal& I, int t) {
  if (t < 0) return 0;
  std::size_t count = 0;
  const Reducer& r = I.reducer();
  for_each_monomial_of_degree(*I.ring(), t, [&](const Monomial& mono) {
    if (r.is_standard(mono, 0)) ++count;
  });
  return count;
}

}  // namespace glc
