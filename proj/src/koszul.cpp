#include "glc/koszul.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "glc/error.hpp"

namespace glc {

namespace {

std::vector<std::vector<int>> subsets(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int degree_of(const std::vector<int>& S, const std::vector<int>& deg) {
  int s = 0;
  for (int i : S) s += deg[i];
  return s;
}

// Sum of the r largest degrees.
int top_sum(std::vector<int> deg, int r) {
  std::sort(deg.rbegin(), deg.rend());
  return std::accumulate(deg.begin(), deg.begin() + r, 0);
}

}  // namespace

bool is_parameter_sequence(const Ideal& I, const ParameterSequence& x) {
  if (static_cast<int>(x.elements.size()) != I.krull_dim()) return false;
  for (const auto& f : x.elements) {
    if (!f.is_homogeneous() || f.is_zero()) return false;
  }
  return I.with_generators(x.elements).krull_dim() <= 0;
}

ParameterSequence find_hsop(const Ideal& I, std::uint64_t seed, int max_attempts) {
  const RingPtr& ring = I.ring();
  const int delta = I.krull_dim();
  if (delta < 0) throw DomainError("A/I is the zero ring");
  ParameterSequence x;
  if (delta == 0) return x;
  int D = 1;
  for (int w : ring->weights()) D = std::lcm(D, w);
  std::mt19937_64 rng(seed);
  const std::uint32_t p = ring->field().characteristic();
  auto coefficient = [&]() {
    const std::uint64_t v = rng();
    if (p) return ring->field().from_int(static_cast<long long>(v % p));
    return ring->field().from_int(static_cast<long long>(v % 19) - 9);
  };
  for (int step = 1; step <= 4; ++step) {
    const int deg = D * step;
    const std::vector<Monomial> mons = monomials_of_degree(*ring, deg);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      ParameterSequence cand;
      for (int k = 0; k < delta; ++k) {
        std::vector<Term> terms;
        for (const auto& m : mons) terms.push_back({m, coefficient()});
        Polynomial f = I.normal_form(Polynomial::from_terms(ring, std::move(terms)));
        cand.elements.push_back(std::move(f));
        cand.degrees.push_back(deg);
      }
      if (is_parameter_sequence(I, cand)) return cand;
    }
  }
  throw DomainError("no system of parameters found; try a larger degree bound or another seed");
}

KoszulStrand koszul_strand(const Ideal& I, const ParameterSequence& x, int t,
                           std::size_t max_dim) {
  const RingPtr& ring = I.ring();
  const int m = static_cast<int>(x.elements.size());
  const Scalar zero = ring->field().zero();
  KoszulStrand st;
  st.t = t;

  // Basis of [K^r]_t: pairs (subset, standard monomial of degree t + deg S).
  struct Piece {
    std::vector<std::vector<int>> sets;
    std::vector<std::size_t> offset;
    std::vector<std::vector<Monomial>> mons;
    std::size_t dim = 0;
  };
  std::map<int, std::vector<Monomial>> slices;
  auto slice = [&](int deg) -> const std::vector<Monomial>& {
    auto it = slices.find(deg);
    if (it == slices.end()) it = slices.emplace(deg, slice_basis(I, deg)).first;
    return it->second;
  };
  std::vector<Piece> pieces(m + 1);
  for (int r = 0; r <= m; ++r) {
    Piece& P = pieces[r];
    P.sets = subsets(m, r);
    for (const auto& S : P.sets) {
      P.offset.push_back(P.dim);
      P.mons.push_back(slice(t + degree_of(S, x.degrees)));
      P.dim += P.mons.back().size();
    }
    if (P.dim > max_dim) {
      throw ResourceError("max-strand-dim", "Koszul strand of dimension " +
                                                std::to_string(P.dim) + " exceeds the cap");
    }
    st.dims.push_back(P.dim);
  }

  std::map<std::pair<int, std::vector<int>>, Polynomial> products;
  auto product = [&](int i, const Monomial& mu) -> const Polynomial& {
    auto key = std::make_pair(i, mu.exponents());
    auto it = products.find(key);
    if (it == products.end()) {
      const Polynomial f = x.elements[i].mul_term(mu, ring->field().one());
      it = products.emplace(std::move(key), I.normal_form(f)).first;
    }
    return it->second;
  };

  std::vector<long long> rank(m + 1, 0);  // rank of d^r
  for (int r = 0; r < m; ++r) {
    const Piece& src = pieces[r];
    const Piece& dst = pieces[r + 1];
    std::map<std::vector<int>, std::size_t> set_index;
    for (std::size_t k = 0; k < dst.sets.size(); ++k) set_index[dst.sets[k]] = k;
    Matrix M(dst.dim, src.dim, zero);
    std::vector<std::map<std::size_t, Scalar>> images(src.dim);
    for (std::size_t s = 0; s < src.sets.size(); ++s) {
      const auto& S = src.sets[s];
      for (int i = 0; i < m; ++i) {
        if (std::find(S.begin(), S.end(), i) != S.end()) continue;
        std::vector<int> T = S;
        T.insert(std::upper_bound(T.begin(), T.end(), i), i);
        const long long below = std::count_if(S.begin(), S.end(), [i](int v) { return v < i; });
        const bool negative = below % 2 == 1;
        const std::size_t tk = set_index.at(T);
        std::map<std::vector<int>, std::size_t> mon_index;
        for (std::size_t k = 0; k < dst.mons[tk].size(); ++k) {
          mon_index[dst.mons[tk][k].exponents()] = k;
        }
        for (std::size_t a = 0; a < src.mons[s].size(); ++a) {
          const Polynomial& img = product(i, src.mons[s][a]);
          for (const auto& term : img.terms()) {
            const std::size_t row = dst.offset[tk] + mon_index.at(term.mono.exponents());
            const Scalar c = negative ? -term.coeff : term.coeff;
            M(row, src.offset[s] + a) += c;
            auto [it, fresh] = images[src.offset[s] + a].try_emplace(row, c);
            if (!fresh) it->second += c;
          }
        }
      }
    }
    std::vector<SparseRow> rows;
    for (auto& img : images) {
      SparseRow row;
      for (auto& [col, v] : img) {
        if (!v.is_zero()) row.emplace_back(col, std::move(v));
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
    rank[r] = static_cast<long long>(sparse_rank(std::move(rows)));
    st.differentials.push_back(std::move(M));
  }

  for (int r = 0; r <= m; ++r) {
    const long long in = r > 0 ? rank[r - 1] : 0;
    const long long out = r < m ? rank[r] : 0;
    st.cohomology.push_back(static_cast<long long>(st.dims[r]) - in - out);
  }
  return st;
}

long long koszul_cohomology_slice(const Ideal& I, const ParameterSequence& x, int r, int t,
                                  std::size_t max_dim) {
  const KoszulStrand st = koszul_strand(I, x, t, max_dim);
  if (r < 0 || r >= static_cast<int>(st.cohomology.size())) return 0;
  return st.cohomology[static_cast<std::size_t>(r)];
}

std::pair<int, int> koszul_support_window(const ExtComputation& ext, const ParameterSequence& x,
                                          int r) {
  const int m = static_cast<int>(x.elements.size());
  const int sigma = std::accumulate(x.degrees.begin(), x.degrees.end(), 0);
  const int lo = -top_sum(x.degrees, r);
  // [H^r(x;R)]_t = [H_{m-r}(x;R)]_{t+sigma}, and the top degree of
  // H_i(x;R) is at most max over p - q = i of (top of H^q_m(R)) + sigma_p.
  const int i = m - r;
  std::optional<int> end;
  const int d = ext.d();
  for (int q = 0; q <= ext.n(); ++q) {
    const int p = i + q;
    if (p > m) break;
    const ExtModule& E = ext.ext(ext.n() - q);
    if (E.is_zero()) continue;
    const int a_q = -*E.min_degree() - d;
    const int v = a_q + top_sum(x.degrees, p);
    end = end ? std::max(*end, v) : v;
  }
  if (!end) return {lo, lo - 1};
  return {lo, *end - sigma};
}

bool koszul_cohomology_total_nonzero(const ExtComputation& ext, const ParameterSequence& x,
                                     int r, std::size_t max_dim) {
  const auto [lo, hi] = koszul_support_window(ext, x, r);
  for (int t = lo; t <= hi; ++t) {
    if (koszul_cohomology_slice(ext.ideal(), x, r, t, max_dim) != 0) return true;
  }
  return false;
}

HochsterRobertsReport hochster_roberts_check(const ExtComputation& ext,
                                             const ParameterSequence& x, std::size_t max_dim) {
  HochsterRobertsReport rep;
  const KoszulStrand st = koszul_strand(ext.ideal(), x, 0, max_dim);
  const int d = ext.d();
  for (int r = 0; r < ext.dimension(); ++r) {
    const ExtModule& E = ext.ext(ext.n() - r);
    HochsterRobertsRow row{r, 0, st.cohomology[static_cast<std::size_t>(r)], std::nullopt, false};
    bool concentrated = true;
    if (E.is_zero()) {
      row.lc_dim = 0;
    } else if (E.finite_length()) {
      long long total = 0;
      for (int s = *E.min_degree(); s <= *E.max_degree(); ++s) {
        const long long v = E.dim(s);
        total += v;
        if (v != 0 && -s - d != 0) concentrated = false;
      }
      row.lc_dim = total;
    } else {
      concentrated = false;
    }
    row.equal = row.lc_dim && *row.lc_dim == row.koszul_dim;
    if (!row.equal && rep.all_equal) {
      rep.all_equal = false;
      rep.first_discrepancy = r;
    }
    rep.hypothesis_holds = rep.hypothesis_holds && concentrated;
    rep.concentrated.push_back(concentrated);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace glc
