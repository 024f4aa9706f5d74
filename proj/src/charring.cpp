#include "rankin/charring.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "rankin/error.hpp"
#include "rankin/exterior_kernels.hpp"
#include "rankin/oracle.hpp"

namespace rankin {

BigInt weyl_dim(const GLWeight& lambda) {
  require_dominant(lambda);
  const std::size_t n = lambda.n();
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= BigInt(lambda[i] - lambda[j] + static_cast<Entry>(j - i));
      den *= BigInt(static_cast<Entry>(j - i));
    }
  }
  return num / den;
}

BigInt dimension(const Decomposition& d) {
  BigInt total = 0;
  for (const auto& [lambda, m] : d.terms()) total += BigInt(m) * weyl_dim(lambda);
  return total;
}

GLWeight sym_power(std::size_t n, Entry a) {
  GLWeight w = GLWeight::zero(n);
  if (n == 0) return w;
  if (a >= 0) w[0] = a;
  else w[n - 1] = a;
  return w;
}

namespace {

// nu with lambda_1 <= nu_1, lambda_i <= nu_i <= lambda_{i-1}, |nu - lambda| = a.
void horizontal_strips(const GLWeight& lambda, std::size_t i, Entry left, GLWeight& nu, Decomposition& out) {
  const std::size_t n = lambda.n();
  if (i == n) {
    if (left == 0) out.add(nu, 1);
    return;
  }
  Entry room = left;
  if (i > 0) room = std::min(room, lambda[i - 1] - lambda[i]);
  if (i + 1 == n) {
    if (left > room) return;
    nu[i] = lambda[i] + left;
    horizontal_strips(lambda, i + 1, 0, nu, out);
    return;
  }
  for (Entry add = 0; add <= room; ++add) {
    nu[i] = lambda[i] + add;
    horizontal_strips(lambda, i + 1, left - add, nu, out);
  }
}

}  // namespace

Decomposition pieri(const GLWeight& lambda, Entry a) {
  require_dominant(lambda);
  if (a < 0) return pieri(dual(lambda), -a).dualized();
  Decomposition out(lambda.n());
  if (lambda.n() == 0) return out;
  GLWeight nu = lambda;
  horizontal_strips(lambda, 0, a, nu, out);
  return out;
}

int det_mult_grenie(const GLWeight& lambda, const GLWeight& mu, Entry a, Entry d) {
  require_same_n(lambda, mu);
  require_dominant(lambda);
  require_dominant(mu);
  if (a < 0) throw Error(Errc::NegativeSymPower, "the closed form assumes a >= 0");
  const std::size_t n = lambda.n();
  Entry lower = std::numeric_limits<Entry>::min();
  Entry upper = std::numeric_limits<Entry>::max();
  Entry total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lower = std::max(lower, lambda[i] + mu[n - 1 - i]);
    if (i + 1 < n) upper = std::min(upper, lambda[i] + mu[n - 2 - i]);
    total += lambda[i] + mu[i];
  }
  if (d < lower || d > upper) return 0;
  return a == static_cast<Entry>(n) * d - total ? 1 : 0;
}

GLWeight cartan(const GLWeight& lambda, const GLWeight& mu) {
  require_same_n(lambda, mu);
  require_dominant(lambda);
  require_dominant(mu);
  return lambda + mu;
}

GLWeight prv(const GLWeight& lambda, const GLWeight& mu) {
  require_same_n(lambda, mu);
  require_dominant(lambda);
  require_dominant(mu);
  return dominant_rep(lambda + mu.reversed());
}

Decomposition restrict_to_K(const GLWeight& left, const GLWeight& right) {
  require_same_n(left, right);
  return tensor(left, dual(right));
}

Multiplicity invariant_dim(std::span<const GLWeight> weights) {
  if (weights.empty()) return 1;
  for (const auto& w : weights) {
    require_same_n(weights[0], w);
    require_dominant(w);
  }
  Entry total = 0;
  for (const auto& w : weights) total += w.sum();
  if (total != 0) return 0;
  switch (weights.size()) {
    case 1: return weights[0].is_zero() ? 1 : 0;
    case 2: return weights[1] == dual(weights[0]) ? 1 : 0;
    default: break;
  }
  // Invariants in X (x) A (x) B are Hom(dual(B), X (x) A).
  const std::size_t last = weights.size() - 1;
  const GLWeight target = dual(weights[last]);
  Decomposition partial = Decomposition::single(weights[0]);
  for (std::size_t i = 1; i + 1 < last; ++i) {
    Decomposition next(weights[0].n());
    for (const auto& [lambda, m] : partial.terms()) next.add(tensor(lambda, weights[i]), m);
    partial = std::move(next);
  }
  Multiplicity count = 0;
  for (const auto& [lambda, m] : partial.terms())
    count += m * tensor_multiplicity(lambda, weights[last - 1], target);
  return count;
}

std::uint64_t max_subsets() {
  constexpr std::uint64_t fallback = std::uint64_t{1} << 25;
  const char* env = std::getenv("RANKIN_LAB_MAX_SUBSETS");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return fallback;
  return value;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

namespace {

struct ExteriorCache {
  std::mutex mutex;
  std::map<std::size_t, std::shared_ptr<const std::vector<Decomposition>>> ladders;
  std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const Decomposition>> levels;
};

ExteriorCache& cache() {
  static ExteriorCache instance;
  return instance;
}

Decomposition peel_tally(std::size_t n, const kernels::Tally& tally, const kernels::WeightCodec& codec) {
  oracle::WeightFunction wf(n);
  for (const auto& [code, m] : tally) wf.add(codec.decode(code), m);
  return oracle::peel(wf);
}

void check_rank(std::size_t n) {
  if (n == 0) throw Error(Errc::OutOfRange, "rank must be positive");
}

std::vector<kernels::Code> adjoint_deltas(const kernels::WeightCodec& codec) {
  std::vector<kernels::Code> deltas;
  for (const auto& w : kernels::adjoint_weights(codec.n())) deltas.push_back(codec.delta(w));
  return deltas;
}

kernels::WeightCodec adjoint_codec(std::size_t n) {
  return kernels::WeightCodec(n, std::max<Entry>(1, static_cast<Entry>(n) - 1));
}

}  // namespace

const std::vector<Decomposition>& exterior_ladder(std::size_t n) {
  check_rank(n);
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.ladders.find(n); it != c.ladders.end()) return *it->second;
  }
  const std::size_t count = n * n - 1;
  if (count >= 63 || (std::uint64_t{1} << count) > max_subsets())
    throw Error(Errc::InfeasibleScale, "the exterior ladder for n=" + std::to_string(n) + " walks 2^" +
                                           std::to_string(count) + " subsets, above the guard " +
                                           std::to_string(max_subsets()));
  const auto codec = adjoint_codec(n);
  const auto deltas = adjoint_deltas(codec);
  const auto tallies = kernels::ladder_parallel(deltas, codec);
  auto ladder = std::make_shared<std::vector<Decomposition>>();
  for (const auto& tally : tallies) ladder->push_back(peel_tally(n, tally, codec));
  std::lock_guard lock(c.mutex);
  // A concurrent caller may have filled the slot first; both results agree.
  auto [it, inserted] = c.ladders.try_emplace(n, std::move(ladder));
  return *it->second;
}

Decomposition exterior_p(std::size_t n, std::size_t k) {
  check_rank(n);
  const std::size_t count = n * n - 1;
  if (k > count)
    throw Error(Errc::OutOfRange, "k=" + std::to_string(k) + " exceeds n^2-1=" + std::to_string(count));
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.ladders.find(n); it != c.ladders.end()) return (*it->second)[k];
    if (auto it = c.levels.find({n, k}); it != c.levels.end()) return *it->second;
  }
  const std::uint64_t guard = max_subsets();
  if (count < 63 && (std::uint64_t{1} << count) <= guard) return exterior_ladder(n)[k];
  if (binomial(count, k) > guard)
    throw Error(Errc::InfeasibleScale, "wedge^" + std::to_string(k) + " for n=" + std::to_string(n) +
                                           " enumerates more than " + std::to_string(guard) + " subsets");
  const auto codec = adjoint_codec(n);
  const auto deltas = adjoint_deltas(codec);
  auto level = std::make_shared<const Decomposition>(peel_tally(n, kernels::level_parallel(deltas, codec, k), codec));
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.levels.try_emplace({n, k}, std::move(level));
  return *it->second;
}

namespace {

void check_triple(std::size_t n, std::size_t k) {
  check_rank(n);
  if (k > 3 * (n * n - 1))
    throw Error(Errc::OutOfRange, "k=" + std::to_string(k) + " exceeds 3(n^2-1)");
}

}  // namespace

Multiplicity triple_mult(std::size_t n, std::size_t k, const std::array<GLWeight, 3>& target) {
  check_triple(n, k);
  for (const auto& t : target) {
    if (t.n() != n) throw Error(Errc::DimensionMismatch, "target has the wrong rank");
    require_dominant(t);
  }
  const auto& ladder = exterior_ladder(n);
  const std::size_t top = ladder.size() - 1;
  std::array<std::vector<Multiplicity>, 3> mult;
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& level : ladder) mult[i].push_back(level.multiplicity(target[i]));
  Multiplicity total = 0;
  for (std::size_t a = 0; a <= std::min(k, top); ++a) {
    if (!mult[0][a]) continue;
    for (std::size_t b = 0; b <= std::min(k - a, top); ++b) {
      const std::size_t c = k - a - b;
      if (c > top) continue;
      total += mult[0][a] * mult[1][b] * mult[2][c];
    }
  }
  return total;
}

TripleDecomposition triple_decompose(std::size_t n, std::size_t k) {
  check_triple(n, k);
  const auto& ladder = exterior_ladder(n);
  const std::size_t top = ladder.size() - 1;
  TripleDecomposition out;
  for (std::size_t a = 0; a <= std::min(k, top); ++a) {
    for (std::size_t b = 0; b <= std::min(k - a, top); ++b) {
      const std::size_t c = k - a - b;
      if (c > top) continue;
      for (const auto& [x, mx] : ladder[a].terms())
        for (const auto& [y, my] : ladder[b].terms())
          for (const auto& [z, mz] : ladder[c].terms()) out.add({x, y, z}, mx * my * mz);
    }
  }
  return out;
}

}  // namespace rankin
