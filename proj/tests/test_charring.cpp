#include <gtest/gtest.h>

#include <cstdlib>

#include "rankin/charring.hpp"
#include "rankin/error.hpp"
#include "rankin/exterior_kernels.hpp"
#include "rankin/oracle.hpp"
#include "support/gen.hpp"

using namespace rankin;

namespace {

Decomposition of(std::size_t n, std::initializer_list<std::pair<GLWeight, Multiplicity>> terms) {
  Decomposition d(n);
  for (const auto& [w, m] : terms) d.add(w, m);
  return d;
}

// Exterior power straight from the weight multiset: every k-subset is
// visited, its weights summed, and the character peeled by the oracle.
Decomposition exterior_brute(std::size_t n, std::size_t k) {
  const auto weights = kernels::adjoint_weights(n);
  const std::size_t count = weights.size();
  oracle::WeightFunction wf(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    GLWeight sum = GLWeight::zero(n);
    for (std::size_t i = 0; i < count; ++i)
      if (mask >> i & 1) sum = sum + weights[i];
    wf.add(sum, 1);
  }
  return oracle::peel(wf);
}

// det^d inside lam x mu x Sym^a  <=>  det^d x dual(Sym^a) inside lam x mu.
Multiplicity det_mult_brute(const Decomposition& lam_mu, std::size_t n, Entry a, Entry d) {
  GLWeight target = GLWeight::constant(n, d);
  target[n - 1] = d - a;
  return lam_mu.multiplicity(target);
}

}  // namespace

TEST(WeylDim, Examples) {
  for (std::size_t n = 2; n <= 8; ++n) {
    GLWeight adj = GLWeight::zero(n);
    adj[0] = 1;
    adj[n - 1] = -1;
    EXPECT_EQ(weyl_dim(adj), BigInt(n * n - 1));
    EXPECT_EQ(weyl_dim(GLWeight::zero(n)), 1);
  }
  EXPECT_EQ(weyl_dim({2, 0}), 3);
  EXPECT_THROW(weyl_dim({0, 2}), Error);
}

TEST(WeylDim, ExceedsSixtyFourBits) {
  std::vector<Entry> big(12);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = 4000 * static_cast<Entry>(big.size() - i);
  EXPECT_GT(weyl_dim(GLWeight(big)), BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(Tensor, Examples) {
  EXPECT_EQ(tensor({1, 0}, {1, 0}), of(2, {{{2, 0}, 1}, {{1, 1}, 1}}));
  EXPECT_EQ(tensor({4, 1, -2}, {0, 0, 0}), Decomposition::single({4, 1, -2}));
  EXPECT_EQ(tensor({11, -9}, {10, -10}).multiplicity({1, 1}), 1);
  EXPECT_EQ(tensor_multiplicity({11, -9}, {10, -10}, {1, 1}), 1);
  EXPECT_THROW(tensor({1, 0}, {1, 0, 0}), Error);
}

TEST(Pieri, Examples) {
  EXPECT_EQ(pieri({1, 1}, 1), Decomposition::single({2, 1}));
  EXPECT_EQ(pieri({3, -1, -4}, 0), Decomposition::single({3, -1, -4}));
  EXPECT_EQ(pieri({0, 0}, -2), Decomposition::single({0, -2}));
  EXPECT_EQ(sym_power(3, -2), (GLWeight{0, 0, -2}));
}

TEST(Pieri, MatchesTensorWithSym) {
  testgen::Gen g(31);
  for (int it = 0; it < 80; ++it) {
    const std::size_t n = 2 + it % 3;
    const auto lam = g.dominant(n, 6);
    const Entry a = g.between(-5, 5);
    EXPECT_EQ(pieri(lam, a), oracle::tensor_oracle(lam, sym_power(n, a)));
  }
}

TEST(Grenie, Examples) {
  EXPECT_EQ(det_mult_grenie({1, -1}, {1, -1}, 0, 0), 1);
  EXPECT_EQ(det_mult_grenie({1, -1}, {1, -1}, 6, 3), 0);
  EXPECT_EQ(det_mult_grenie({1, -1}, {1, -1}, 1, 0), 0);
  try {
    det_mult_grenie({1, -1}, {1, -1}, -2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NegativeSymPower);
  }
}

TEST(Grenie, SampledAgainstBruteForce) {
  // The exhaustive grid runs in the acceptance suite; a sample here.
  testgen::Gen g(32);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = 2 + it % 2;
    const auto lam = g.dominant(n, 6, -3, -3), mu = g.dominant(n, 6, -3, -3);
    const Entry a = g.between(0, 12);
    const auto lam_mu = oracle::tensor_oracle(lam, mu);
    for (Entry d = -6; d <= 6; ++d) ASSERT_EQ(det_mult_grenie(lam, mu, a, d), det_mult_brute(lam_mu, n, a, d));
  }
}

TEST(CartanPrv, Examples) {
  EXPECT_EQ(cartan({2, 0}, {1, 1}), (GLWeight{3, 1}));
  EXPECT_EQ(cartan({10, -12}, {1, 1}), (GLWeight{11, -11}));
  EXPECT_EQ(prv({1, 0}, {1, 0}), (GLWeight{1, 1}));
  EXPECT_EQ(prv({11, -9}, {10, -12}), (GLWeight{1, -1}));
}

TEST(CartanPrv, BothOccurAndCartanOnce) {
  testgen::Gen g(33);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 2 + it % 3;
    const auto a = g.dominant(n, 8), b = g.dominant(n, 8);
    const auto t = tensor(a, b);
    EXPECT_EQ(t.multiplicity(cartan(a, b)), 1);
    EXPECT_GE(t.multiplicity(prv(a, b)), 1);
  }
}

TEST(CartanPrv, TauNIsIndependentOfMu) {
  testgen::Gen g(34);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + it % 5;
    const auto mu = g.pure(n);
    GLWeight tau_mu = mu.left() + dual(mu.right());
    std::vector<Entry> plus(n);
    for (std::size_t i = 0; i < n; ++i)
      plus[i] = 2 * mu.left()[i] - mu.w() + static_cast<Entry>(n) - 1 - 2 * static_cast<Entry>(i);
    EXPECT_EQ(prv(dual(tau_mu), GLWeight(plus)), rho2(n));
  }
}

TEST(Restrict, Examples) {
  EXPECT_EQ(restrict_to_K({0, 0}, {1, 1}), Decomposition::single({-1, -1}));
  EXPECT_EQ(restrict_to_K(GLWeight::zero(3), GLWeight::zero(3)), Decomposition::single(GLWeight::zero(3)));
  const auto f = restrict_to_K(dual({5, -5}), dual({6, -4}));
  EXPECT_EQ(f, tensor({5, -5}, {6, -4}));
  EXPECT_EQ(dimension(f), 121);
}

TEST(InvariantDim, Examples) {
  EXPECT_EQ(invariant_dim({GLWeight{1, -1}, GLWeight{1, -1}, GLWeight{1, -1}}), 1);
  EXPECT_EQ(invariant_dim({GLWeight{1, 0}, GLWeight{0, -1}}), 1);
  EXPECT_EQ(invariant_dim({GLWeight{1, 0}}), 0);
  EXPECT_EQ(invariant_dim({GLWeight{0, 0}}), 1);
}

TEST(InvariantDim, PermutationAndDualityInvariant) {
  testgen::Gen g(35);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 2 + it % 2;
    std::vector<GLWeight> ws;
    for (int k = 0; k < 3 + it % 2; ++k) ws.push_back(g.dominant(n, 4, -2, 2));
    // Force total sum zero so the answer is not trivially 0.
    Entry s = 0;
    for (const auto& w : ws) s += w.sum();
    ws.push_back(GLWeight::constant(n, 0));
    ws.back()[n - 1] = -s;
    ws.back() = dominant_rep(ws.back());
    const Multiplicity base = invariant_dim(ws);
    std::vector<GLWeight> rev(ws.rbegin(), ws.rend());
    EXPECT_EQ(invariant_dim(rev), base);
    std::vector<GLWeight> duals;
    for (const auto& w : ws) duals.push_back(dual(w));
    EXPECT_EQ(invariant_dim(duals), base);
    // Independent value: dimension of the zero weight space of the product
    // minus what the nontrivial constituents contribute, via peeling.
    oracle::WeightFunction acc = oracle::weight_mults(ws[0]);
    for (std::size_t i = 1; i < ws.size(); ++i) acc = oracle::convolve(acc, oracle::weight_mults(ws[i]));
    EXPECT_EQ(oracle::peel(acc).multiplicity(GLWeight::zero(n)), base);
  }
}

TEST(Exterior, Examples) {
  for (std::size_t n = 2; n <= 4; ++n) {
    GLWeight adj = GLWeight::zero(n);
    adj[0] = 1;
    adj[n - 1] = -1;
    EXPECT_EQ(exterior_p(n, 1), Decomposition::single(adj));
    EXPECT_EQ(exterior_p(n, n * n - 1), Decomposition::single(GLWeight::zero(n)));
    EXPECT_EQ(exterior_p(n, 0), Decomposition::single(GLWeight::zero(n)));
  }
  EXPECT_EQ(exterior_p(2, 2), Decomposition::single({1, -1}));
  EXPECT_THROW(exterior_p(2, 4), Error);
}

TEST(Exterior, MatchesBruteForceAndBinomial) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t k = 0; k <= n * n - 1; ++k) {
      const auto e = exterior_p(n, k);
      EXPECT_EQ(e, exterior_brute(n, k)) << "n=" << n << " k=" << k;
      EXPECT_EQ(dimension(e), binomial(n * n - 1, k));
    }
  EXPECT_EQ(exterior_p(4, 5), exterior_brute(4, 5));
}

TEST(Exterior, SelfDualLadder) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto& ladder = exterior_ladder(n);
    ASSERT_EQ(ladder.size(), n * n);
    for (std::size_t k = 0; k < ladder.size(); ++k) {
      EXPECT_EQ(ladder[k].dualized(), ladder[n * n - 1 - k]);
      EXPECT_EQ(exterior_p(n, k), ladder[k]);
    }
  }
}

TEST(Exterior, GuardTripsAboveLimit) {
  try {
    exterior_p(7, 20);
    FAIL() << "guard did not trip";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InfeasibleScale);
  }
}

TEST(Exterior, GuardCanBeLowered) {
  ::setenv("RANKIN_LAB_MAX_SUBSETS", "100", 1);
  EXPECT_EQ(max_subsets(), 100u);
  // n=5 is never cached in this binary: C(24,3) = 2024 trips the guard, C(24,1) does not.
  EXPECT_THROW(exterior_p(5, 3), Error);
  EXPECT_EQ(exterior_p(5, 1), Decomposition::single({1, 0, 0, 0, -1}));
  ::unsetenv("RANKIN_LAB_MAX_SUBSETS");
  EXPECT_EQ(max_subsets(), std::uint64_t{1} << 25);
}

TEST(Triple, Examples) {
  const GLWeight a{1, -1};
  EXPECT_EQ(triple_mult(2, 3, {a, a, a}), 1);
  EXPECT_EQ(triple_mult(2, 0, {GLWeight{0, 0}, GLWeight{0, 0}, GLWeight{0, 0}}), 1);
  EXPECT_EQ(triple_mult(3, 8, {GLWeight{2, 0, -2}, GLWeight{2, 0, -2}, GLWeight{2, -1, -1}}), 1);
  EXPECT_THROW(triple_mult(2, 10, {a, a, a}), Error);
}

TEST(Triple, DecomposeAgreesWithPointQueriesAndDimension) {
  for (std::size_t k = 0; k <= 9; ++k) {
    const auto td = triple_decompose(2, k);
    BigInt total = 0;
    for (const auto& [key, m] : td.terms()) {
      EXPECT_EQ(triple_mult(2, k, key), m);
      total += m * weyl_dim(key[0]) * weyl_dim(key[1]) * weyl_dim(key[2]);
    }
    EXPECT_EQ(total, binomial(9, k));
  }
}
