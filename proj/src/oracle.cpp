#include "rankin/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "rankin/error.hpp"

namespace rankin::oracle {

void WeightFunction::add(const GLWeight& weight, Multiplicity value) {
  if (weight.n() != n_) throw Error(Errc::DimensionMismatch, "weight of the wrong rank");
  if (value == 0) return;
  auto [it, inserted] = support_.try_emplace(weight, 0);
  it->second += value;
  if (it->second == 0) support_.erase(it);
}

Multiplicity WeightFunction::at(const GLWeight& weight) const {
  const auto it = support_.find(weight);
  return it == support_.end() ? 0 : it->second;
}

Multiplicity WeightFunction::mass() const {
  Multiplicity m = 0;
  for (const auto& [w, v] : support_) m += v;
  return m;
}

bool WeightFunction::is_weyl_symmetric() const {
  // Equal values along each orbit, and every orbit fully present.
  std::map<GLWeight, std::uint64_t> seen;
  for (const auto& [w, m] : support_) {
    const GLWeight d = dominant_rep(w);
    if (at(d) != m) return false;
    ++seen[d];
  }
  for (const auto& [d, count] : seen) {
    std::uint64_t orbit = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < d.n(); ++i) {
      run = (i > 0 && d[i] == d[i - 1]) ? run + 1 : 1;
      orbit = orbit * (i + 1) / run;
    }
    if (count != orbit) return false;
  }
  return true;
}

namespace {

enum class Mode { All, Dominant, Target };

// Depth-first walk over Gelfand-Tsetlin patterns with top row fixed. Rows are
// filled from rank n-1 down to rank 1; entry i of row k lies between entries
// i+1 and i of row k+1. The weight of a pattern is the sequence of
// differences of consecutive row sums.
template <Mode M, class Visit>
class GTWalker {
 public:
  GTWalker(const GLWeight& top, Visit& visit, const std::vector<Entry>* prefix = nullptr)
      : n_(top.n()), rows_(n_), sums_(n_), weight_(n_), prefix_(prefix), visit_(visit) {
    for (std::size_t k = 0; k < n_; ++k) rows_[k].resize(k + 1);
    rows_[n_ - 1] = top.vec();
    sums_[n_ - 1] = top.sum();
  }

  void run() {
    if (n_ == 1) {
      weight_[0] = sums_[0];
      visit_(weight_);
      return;
    }
    fill(n_ - 2, 0, 0);
  }

 private:
  void fill(std::size_t k, std::size_t i, Entry partial) {
    const auto& above = rows_[k + 1];
    if (i == k + 1) {
      sums_[k] = partial;
      weight_[k + 1] = sums_[k + 1] - partial;
      if constexpr (M == Mode::Dominant) {
        if (k + 2 < n_ && weight_[k + 1] < weight_[k + 2]) return;
      }
      if (k == 0) {
        weight_[0] = partial;
        if constexpr (M == Mode::Dominant) {
          if (weight_[0] < weight_[1]) return;
        }
        visit_(weight_);
        return;
      }
      fill(k - 1, 0, 0);
      return;
    }
    const Entry lo = above[i + 1];
    const Entry hi = above[i];
    if constexpr (M == Mode::Target) {
      if (i == k) {
        const Entry forced = (*prefix_)[k] - partial;
        if (forced < lo || forced > hi) return;
        rows_[k][i] = forced;
        fill(k, i + 1, partial + forced);
        return;
      }
    }
    for (Entry v = lo; v <= hi; ++v) {
      rows_[k][i] = v;
      fill(k, i + 1, partial + v);
    }
  }

  std::size_t n_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<Entry> sums_;
  std::vector<Entry> weight_;
  const std::vector<Entry>* prefix_;
  Visit& visit_;
};

struct VecHash {
  std::size_t operator()(const std::vector<Entry>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Entry e : v) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
    return h;
  }
};

using Tally = std::unordered_map<std::vector<Entry>, Multiplicity, VecHash>;

Tally gt_tally(const GLWeight& lambda) {
  Tally tally;
  auto visit = [&tally](const std::vector<Entry>& w) { ++tally[w]; };
  GTWalker<Mode::All, decltype(visit)>(lambda, visit).run();
  return tally;
}

void check_top(const GLWeight& lambda) {
  if (lambda.n() == 0) throw Error(Errc::OutOfRange, "rank must be positive");
  require_dominant(lambda);
}

}  // namespace

WeightFunction weight_mults(const GLWeight& lambda) {
  check_top(lambda);
  WeightFunction wf(lambda.n());
  for (auto& [w, m] : gt_tally(lambda)) wf.add(GLWeight(w), m);
  return wf;
}

std::vector<std::pair<GLWeight, Multiplicity>> dominant_weight_mults(const GLWeight& lambda) {
  check_top(lambda);
  std::map<std::vector<Entry>, Multiplicity> tally;
  auto visit = [&tally](const std::vector<Entry>& w) { ++tally[w]; };
  GTWalker<Mode::Dominant, decltype(visit)>(lambda, visit).run();
  std::vector<std::pair<GLWeight, Multiplicity>> out;
  out.reserve(tally.size());
  for (auto& [w, m] : tally) out.emplace_back(GLWeight(w), m);
  return out;
}

Multiplicity weight_multiplicity(const GLWeight& lambda, const GLWeight& weight) {
  check_top(lambda);
  require_same_n(lambda, weight);
  if (lambda.sum() != weight.sum()) return 0;
  // A weight occurs only if its sorted form is dominated by lambda; the
  // walk below discovers that anyway, so no separate test is made.
  std::vector<Entry> prefix(weight.n());
  Entry acc = 0;
  for (std::size_t k = 0; k < weight.n(); ++k) prefix[k] = (acc += weight[k]);
  Multiplicity count = 0;
  auto visit = [&count](const std::vector<Entry>&) { ++count; };
  GTWalker<Mode::Target, decltype(visit)>(lambda, visit, &prefix).run();
  return count;
}

void for_each_gt_weight(const GLWeight& lambda, const std::function<void(const GLWeight&)>& visit) {
  check_top(lambda);
  auto adapter = [&visit](const std::vector<Entry>& w) { visit(GLWeight(w)); };
  GTWalker<Mode::All, decltype(adapter)>(lambda, adapter).run();
}

WeightFunction convolve(const WeightFunction& a, const WeightFunction& b) {
  if (a.n() != b.n()) throw Error(Errc::DimensionMismatch, "convolution of different ranks");
  Tally tally;
  std::vector<Entry> sum(a.n());
  for (const auto& [wa, ma] : a.support()) {
    for (const auto& [wb, mb] : b.support()) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = wa[i] + wb[i];
      tally[sum] += ma * mb;
    }
  }
  WeightFunction out(a.n());
  for (auto& [w, m] : tally) out.add(GLWeight(w), m);
  return out;
}

namespace {

using DominantPart = std::map<GLWeight, Multiplicity, std::greater<>>;

// Peels a character given by its values on dominant weights only.
Decomposition peel_dominant(std::size_t n, DominantPart part) {
  Decomposition out(n);
  while (!part.empty()) {
    const auto top = part.begin();
    const GLWeight lambda = top->first;
    const Multiplicity mult = top->second;
    if (mult < 0)
      throw Error(Errc::MalformedCharacter, "negative value at " + lambda.to_string());
    for (const auto& [w, m] : dominant_weight_mults(lambda)) {
      auto [it, inserted] = part.try_emplace(w, 0);
      it->second -= mult * m;
      if (it->second < 0)
        throw Error(Errc::MalformedCharacter, "peeling " + lambda.to_string() + " overdraws " + w.to_string());
      if (it->second == 0) part.erase(it);
    }
    out.add(lambda, mult);
  }
  return out;
}

}  // namespace

Decomposition peel(const WeightFunction& wf) {
  if (wf.n() == 0) throw Error(Errc::OutOfRange, "rank must be positive");
  DominantPart part;
  for (const auto& [w, m] : wf.support()) {
    if (m < 0) throw Error(Errc::MalformedCharacter, "negative value at " + w.to_string());
    if (w.is_dominant()) part.emplace(w, m);
  }
  if (!wf.is_weyl_symmetric())
    throw Error(Errc::MalformedCharacter, "support is not symmetric under permutations");
  return peel_dominant(wf.n(), std::move(part));
}

Decomposition tensor_oracle(const GLWeight& lambda, const GLWeight& mu) {
  require_same_n(lambda, mu);
  check_top(lambda);
  check_top(mu);
  const Tally a = gt_tally(lambda);
  const Tally b = gt_tally(mu);
  // Only dominant weights of the product are needed to peel a symmetric
  // character.
  const std::size_t n = lambda.n();
  Tally product;
  std::vector<Entry> sum(n);
  for (const auto& [wa, ma] : a) {
    for (const auto& [wb, mb] : b) {
      bool dominant = true;
      for (std::size_t i = 0; i < n; ++i) {
        sum[i] = wa[i] + wb[i];
        if (i && sum[i] > sum[i - 1]) { dominant = false; break; }
      }
      if (dominant) product[sum] += ma * mb;
    }
  }
  DominantPart part;
  for (auto& [w, m] : product) part.emplace(GLWeight(w), m);
  return peel_dominant(n, std::move(part));
}

}  // namespace rankin::oracle
