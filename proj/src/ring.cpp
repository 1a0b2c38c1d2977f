#include "glc/ring.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "glc/error.hpp"

namespace glc {

namespace {

constexpr int kMaxExponent = std::numeric_limits<std::uint16_t>::max();

}  // namespace

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) {
    throw StructuralError("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
}

Monomial::Monomial(std::span<const int> exponents, std::span<const int> weights)
    : Monomial(exponents.size()) {
  if (exponents.size() != weights.size()) {
    throw StructuralError("exponent vector length does not match the variable count");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) {
      throw StructuralError("exponent out of range: " + std::to_string(exponents[i]));
    }
    e_[i] = static_cast<std::uint16_t>(exponents[i]);
    deg_ += exponents[i] * weights[i];
  }
  recompute_mask();
}

void Monomial::recompute_mask() {
  mask_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i]) mask_ |= 1u << (i % 32);
  }
}

int Monomial::total_exponent() const {
  int s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += e_[i];
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    const int s = e_[i] + o.e_[i];
    if (s > kMaxExponent) throw StructuralError("exponent overflow in monomial product");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  r.deg_ = deg_ + o.deg_;
  r.mask_ = mask_ | o.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  r.deg_ = deg_ - o.deg_;
  r.recompute_mask();
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    const long long s = static_cast<long long>(e_[i]) * k;
    if (s > kMaxExponent) throw StructuralError("exponent overflow in monomial power");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  r.deg_ = deg_ * k;
  if (k == 0) r.mask_ = 0;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ULL;
  }
  return h;
}

GradedRingSpec::GradedRingSpec(std::vector<std::string> variables, std::vector<int> weights,
                               FieldSpec field, MonomialOrder order)
    : variables_(std::move(variables)),
      weights_(std::move(weights)),
      field_(std::move(field)),
      order_(order) {
  if (variables_.size() != weights_.size()) {
    throw StructuralError("variable and weight lists differ in length");
  }
  if (variables_.size() > kMaxVariables) {
    throw StructuralError("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw StructuralError("empty variable name");
    if (!seen.insert(v).second) throw StructuralError("duplicate variable name: " + v);
  }
  for (int w : weights_) {
    if (w <= 0) throw DomainError("weights strictly positive (got " + std::to_string(w) + ")");
    degree_sum_ += w;
    max_weight_ = std::max(max_weight_, w);
  }
  if (order_.kind == OrderKind::Elimination && order_.block > variables_.size()) {
    throw StructuralError("elimination block larger than the variable count");
  }
}

std::optional<std::size_t> GradedRingSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

int GradedRingSpec::grevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                            std::size_t hi) const {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int GradedRingSpec::compare(const Monomial& a, const Monomial& b) const {
  switch (order_.kind) {
    case OrderKind::WeightedGrevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return grevlex(a, b, 0, nvars());
    case OrderKind::Lex:
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::Elimination: {
      int da = 0;
      int db = 0;
      for (std::size_t i = 0; i < order_.block; ++i) {
        da += a[i] * weights_[i];
        db += b[i] * weights_[i];
      }
      if (da != db) return da > db ? 1 : -1;
      if (int c = grevlex(a, b, 0, order_.block)) return c;
      const int ra = a.degree() - da;
      const int rb = b.degree() - db;
      if (ra != rb) return ra > rb ? 1 : -1;
      return grevlex(a, b, order_.block, nvars());
    }
  }
  return 0;
}

Monomial GradedRingSpec::monomial(std::span<const int> exponents) const {
  if (exponents.size() != nvars()) {
    throw StructuralError("monomial has " + std::to_string(exponents.size()) +
                          " exponents, ring has " + std::to_string(nvars()) + " variables");
  }
  return Monomial(exponents, weights_);
}

Monomial GradedRingSpec::variable_monomial(std::size_t i, int power) const {
  std::vector<int> e(nvars(), 0);
  e.at(i) = power;
  return monomial(e);
}

Monomial GradedRingSpec::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r(a);
  int deg = 0;
  for (std::size_t i = 0; i < nvars(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    deg += r.e_[i] * weights_[i];
  }
  r.deg_ = deg;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial GradedRingSpec::gcd(const Monomial& a, const Monomial& b) const {
  Monomial r(a);
  int deg = 0;
  for (std::size_t i = 0; i < nvars(); ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    deg += r.e_[i] * weights_[i];
  }
  r.deg_ = deg;
  r.recompute_mask();
  return r;
}

int GradedRingSpec::weighted_degree(std::span<const int> exponents) const {
  if (exponents.size() != nvars()) {
    throw StructuralError("monomial length does not match the ring");
  }
  int d = 0;
  for (std::size_t i = 0; i < nvars(); ++i) d += exponents[i] * weights_[i];
  return d;
}

std::shared_ptr<const GradedRingSpec> GradedRingSpec::with_order(MonomialOrder order) const {
  return make(variables_, weights_, field_, order);
}

bool GradedRingSpec::operator==(const GradedRingSpec& o) const {
  return variables_ == o.variables_ && weights_ == o.weights_ && field_ == o.field_ &&
         order_ == o.order_;
}

std::vector<Monomial> monomials_of_degree(const GradedRingSpec& ring, int t) {
  std::vector<Monomial> out;
  for_each_monomial_of_degree(ring, t, [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

}  // namespace glc
