#include "glc/hilbert.hpp"

#include <algorithm>
#include <bit>

namespace glc {

namespace {

using Numerator = std::map<int, long long>;

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) {
      out.push_back(g);
    }
  }
  gens = std::move(out);
}

void accumulate(Numerator& acc, const Numerator& n, int shift, long long sign) {
  for (const auto& [d, c] : n) {
    long long& slot = acc[d + shift];
    slot += sign * c;
    if (slot == 0) acc.erase(d + shift);
  }
}

// Pivot recursion: N(L) = N(L + (p)) + s^{deg p} N(L : p) with p a power of
// a variable occurring in a mixed generator.
Numerator numerator(const GradedRingSpec& ring, std::vector<Monomial> gens) {
  minimalize(gens);
  Numerator out;
  if (gens.empty()) {
    out[0] = 1;
    return out;
  }
  std::vector<int> count(ring.nvars(), 0);
  bool mixed = false;
  for (const auto& g : gens) {
    if (std::popcount(g.mask()) < 2) continue;
    mixed = true;
    for (std::size_t i = 0; i < ring.nvars(); ++i) count[i] += g[i] > 0;
  }
  if (!mixed) {
    out[0] = 1;
    for (const auto& g : gens) {
      Numerator next = out;
      accumulate(next, out, g.degree(), -1);
      out = std::move(next);
    }
    return out;
  }
  const std::size_t x = static_cast<std::size_t>(
      std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exps;
  for (const auto& g : gens) {
    if (std::popcount(g.mask()) >= 2 && g[x] > 0) exps.push_back(g[x]);
  }
  std::sort(exps.begin(), exps.end());
  const Monomial p = ring.variable_monomial(x, exps[(exps.size() - 1) / 2]);

  std::vector<Monomial> with = gens;
  with.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / ring.gcd(g, p));
  out = numerator(ring, std::move(with));
  accumulate(out, numerator(ring, std::move(colon)), p.degree(), 1);
  return out;
}

}  // namespace

std::map<int, long long> hilbert_numerator(const GradedRingSpec& ring,
                                           std::vector<Monomial> monomials) {
  return numerator(ring, std::move(monomials));
}

long long SeriesExpander::ambient(int t) {
  if (t < 0) return 0;
  if (coeffs_.empty()) coeffs_.push_back(1);
  if (static_cast<std::size_t>(t) >= coeffs_.size()) {
    const int target = std::max(t, 2 * static_cast<int>(coeffs_.size()));
    std::vector<long long> c(target + 1, 0);
    c[0] = 1;
    for (int w : weights_) {
      for (int s = w; s <= target; ++s) c[s] += c[s - w];
    }
    coeffs_ = std::move(c);
  }
  return coeffs_[t];
}

long long SeriesExpander::coefficient(const std::map<int, long long>& numerator, int t) {
  long long sum = 0;
  for (const auto& [d, c] : numerator) {
    if (d > t) break;
    sum += c * ambient(t - d);
  }
  return sum;
}

}  // namespace glc
