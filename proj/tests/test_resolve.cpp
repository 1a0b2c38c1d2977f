#include <gtest/gtest.h>

#include <random>

#include "glc/error.hpp"
#include "glc/resolve.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace glc;
using support::poly;

namespace {

// Degree-t strand of F_k: coordinates are (basis element, monomial) pairs.
struct Strand {
  std::vector<std::pair<std::uint32_t, Monomial>> basis;
  std::map<std::pair<std::uint32_t, std::vector<int>>, std::size_t> index;
};

Strand strand(const GradedFreeResolution& res, std::size_t k, int t) {
  Strand s;
  for (std::uint32_t c = 0; c < res.rank(k); ++c) {
    for (const auto& m : monomials_of_degree(*res.ring(), t - res.twists(k)[c])) {
      s.index[{c, m.exponents()}] = s.basis.size();
      s.basis.emplace_back(c, m);
    }
  }
  return s;
}

// Rank of d_k restricted to degree t, computed from scratch.
std::size_t strand_rank(const GradedFreeResolution& res, std::size_t k, int t) {
  if (k == 0 || k > res.length()) return 0;
  const Strand src = strand(res, k, t);
  const Strand dst = strand(res, k - 1, t);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& [c, m] : src.basis) {
    std::vector<Scalar> row(dst.basis.size(), res.ring()->field().zero());
    for (const auto& term : res.differential(k)[c].terms) {
      row[dst.index.at({term.comp, (term.mono * m).exponents()})] += term.coeff;
    }
    rows.push_back(std::move(row));
  }
  return oracle::span_rank(std::move(rows));
}

// Homology vanishes in positions >= 1 and H_0 has the dimension of [A/I]_t.
void expect_exact(const GradedFreeResolution& res, const Ideal& I, int max_t) {
  ASSERT_TRUE(res.is_complex());
  for (int t = 0; t <= max_t; ++t) {
    for (std::size_t k = 0; k <= res.length(); ++k) {
      const std::size_t dim = strand(res, k, t).basis.size();
      const std::size_t out_rank = strand_rank(res, k, t);
      const std::size_t in_rank = strand_rank(res, k + 1, t);
      const std::size_t homology = dim - out_rank - in_rank;
      if (k == 0) {
        EXPECT_EQ(homology, oracle::quotient_dim(I.ring(), I.generators(), t)) << "t=" << t;
      } else {
        EXPECT_EQ(homology, 0u) << "k=" << k << " t=" << t;
      }
    }
  }
}

bool all_entries_in_maximal_ideal(const GradedFreeResolution& res) {
  for (std::size_t k = 1; k <= res.length(); ++k) {
    for (const auto& col : res.differential(k)) {
      for (const auto& t : col.terms) {
        if (t.mono.is_one()) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Resolution, KoszulOnTwoVariables) {
  auto r = support::standard(2);
  const Ideal I(r, {poly(r, "x"), poly(r, "y")});
  const auto res = free_resolution(I);
  ASSERT_EQ(res.length(), 2u);
  const auto b = betti(res);
  EXPECT_EQ(b.at({0, 0}), 1);
  EXPECT_EQ(b.at({1, 1}), 2);
  EXPECT_EQ(b.at({2, 2}), 1);
  expect_exact(res, I, 4);
}

TEST(Resolution, PrincipalIdeal) {
  auto r = support::standard(1);
  const Ideal I(r, {poly(r, "x^2")});
  const auto res = free_resolution(I);
  ASSERT_EQ(res.length(), 1u);
  const auto b = betti(res);
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(b.at({1, 2}), 1);
  EXPECT_EQ(res.entry(1, 0, 0), poly(r, "x^2"));
}

TEST(Resolution, KoszulBinomials) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto r = support::standard(n);
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(Polynomial::variable(r, i));
    const auto b = betti(free_resolution(Ideal(r, vars)));
    long long binom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      EXPECT_EQ(b.at({static_cast<int>(j), static_cast<int>(j)}), binom);
      binom = binom * static_cast<long long>(n - j) / static_cast<long long>(j + 1);
    }
  }
}

TEST(Resolution, TwistedCubicBetti) {
  auto A = support::standard(4);
  const Ideal I(A, {poly(A, "x*z-y^2"), poly(A, "x*w-y*z"), poly(A, "y*w-z^2")});
  const auto res = free_resolution(I);
  const auto b = betti(res);
  EXPECT_EQ(res.length(), 2u);
  EXPECT_EQ(b.at({1, 2}), 3);
  EXPECT_EQ(b.at({2, 3}), 2);
  expect_exact(res, I, 5);
}

TEST(Resolution, PinchedQuarticHasProjectiveDimensionThree) {
  auto A = support::standard(4);
  auto T = support::ring({"s", "t"}, {1, 1});
  const Ideal I = kernel_of_ring_map(
      A, T, {poly(T, "s^4"), poly(T, "s^3*t"), poly(T, "s*t^3"), poly(T, "t^4")});
  const auto res = free_resolution(I);
  EXPECT_EQ(res.length(), 3u);
  EXPECT_TRUE(all_entries_in_maximal_ideal(res));
  expect_exact(res, I, 6);
}

TEST(Resolution, RandomIdealsAreExactAndMinimal) {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 8; ++k) {
    auto r = k % 2 ? support::ring({"x", "y", "z"}, {1, 2, 1}, FieldSpec::prime(101))
                   : support::standard(3);
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3 + k % 2; ++g) gens.push_back(support::random_form(rng, r, 2 + g % 2, 0.4));
    const Ideal I(r, gens);
    const auto full = free_resolution(I, false);
    const auto res = free_resolution(I, true);
    EXPECT_TRUE(all_entries_in_maximal_ideal(res));
    expect_exact(full, I, 6);
    expect_exact(res, I, 6);
    // Hilbert series identity from the graded Betti numbers.
    const auto b = betti(res);
    const auto series = oracle::hilbert_series(r->weights(), 10);
    for (int t = 0; t <= 10; ++t) {
      long long alt = 0;
      for (const auto& [key, mult] : b) {
        if (key.second <= t) alt += (key.first % 2 ? -1 : 1) * mult * series[t - key.second];
      }
      EXPECT_EQ(alt, static_cast<long long>(oracle::quotient_dim(r, I.generators(), t)));
    }
  }
}

TEST(Resolution, BettiRejectsNonMinimal) {
  auto r = support::standard(2);
  const Ideal I(r, {poly(r, "x^2"), poly(r, "x*y"), poly(r, "y^2")});
  EXPECT_THROW(betti(free_resolution(I, false)), DomainError);
}

TEST(ChainLift, IdentityAndQuotients) {
  auto r1 = support::standard(1);
  const Ideal x(r1, {poly(r1, "x")});
  const Ideal x2(r1, {poly(r1, "x^2")});
  const auto rx = free_resolution(x);
  const auto rx2 = free_resolution(x2);
  const ChainMap f = lift_chain_map(x2, rx2, x, rx);
  ASSERT_EQ(f.maps.size(), 2u);
  EXPECT_EQ(vec::entry(f.maps[0][0], 0, r1), poly(r1, "1"));
  EXPECT_EQ(vec::entry(f.maps[1][0], 0, r1), poly(r1, "x"));
  EXPECT_TRUE(commutes(f, rx2, rx));
  EXPECT_THROW(lift_chain_map(x, rx, x2, rx2), DomainError);

  const ChainMap id = lift_chain_map(x, rx, x, rx);
  EXPECT_EQ(vec::entry(id.maps[1][0], 0, r1), poly(r1, "1"));

  auto r = support::standard(2);
  const Ideal I(r, {poly(r, "x"), poly(r, "y")});
  const Ideal I2 = ideal_power(I, 2);
  const auto rI = free_resolution(I);
  const auto rI2 = free_resolution(I2);
  const ChainMap g = lift_chain_map(I2, rI2, I, rI);
  EXPECT_TRUE(commutes(g, rI2, rI));
  for (const auto& col : g.maps[1]) {
    for (const auto& t : col.terms) EXPECT_EQ(t.mono.degree(), 1);
  }
}

TEST(ChainLift, FrobeniusResolutionIsExact) {
  auto r = support::standard(3, FieldSpec::prime(3));
  const Ideal I(r, {poly(r, "x*y"), poly(r, "y*z"), poly(r, "x^2 + z^2")});
  const auto res = free_resolution(I);
  const auto fres = frobenius_resolution(res, 3);
  const Ideal I3 = frobenius_power(I, 3);
  expect_exact(fres, I3, 9);
  ChainLifter lifter(std::make_shared<const GradedFreeResolution>(res));
  const ChainMap f = lifter.lift(fres);
  EXPECT_TRUE(commutes(f, fres, res));
}
