#include <algorithm>
#include <optional>

#include "rankin/charring.hpp"
#include "rankin/error.hpp"

namespace rankin {

namespace {

// Counts LR tableaux of shape nu/lam with content mu, lam and mu partitions
// with at most n parts. a(r,k) is the number of entries k in row r. The
// reverse reading word is a lattice word iff, for every row r and k >= 1,
// the k's in rows <= r never outnumber the (k-1)'s in rows < r. Columns
// strictly increase iff lam_r + #(entries <= k in row r) <= lam_{r-1} +
// #(entries <= k-1 in row r-1).
class LRWalker {
 public:
  LRWalker(const std::vector<Entry>& lam, const std::vector<Entry>& mu,
           const std::vector<Entry>* target)
      : n_(lam.size()), lam_(lam), mu_(mu), target_(target) {
    labels_ = 0;
    while (labels_ < mu_.size() && mu_[labels_] > 0) ++labels_;
    used_.assign(labels_, 0);
    used_before_row_.assign(labels_, 0);
    prev_end_.assign(labels_ + 1, 0);
    row_end_.assign(n_, std::vector<Entry>(labels_ + 1, 0));
    nu_.assign(n_, 0);
  }

  template <class Visit>
  void run(Visit&& visit) {
    row(0, std::forward<Visit>(visit));
  }

 private:
  template <class Visit>
  void row(std::size_t r, Visit&& visit) {
    if (r == n_) {
      for (std::size_t k = 0; k < labels_; ++k)
        if (used_[k] != mu_[k]) return;
      visit(nu_);
      return;
    }
    // Entries still to place must fit in rows r.. (label k only in rows >= k).
    for (std::size_t k = 0; k < labels_; ++k)
      if (used_[k] != mu_[k] && std::max(r, k) >= n_) return;
    used_before_row_ = used_;
    const std::size_t top_label = std::min(r + 1, labels_);
    Entry row_budget = -1;
    if (target_) {
      row_budget = (*target_)[r] - lam_[r];
      if (row_budget < 0) return;
    }
    cell(r, 0, top_label, lam_[r], row_budget, visit);
  }

  // Chooses a(r,k); `pos` is lam_r plus the entries already placed in row r.
  template <class Visit>
  void cell(std::size_t r, std::size_t k, std::size_t top_label, Entry pos, Entry budget, Visit&& visit) {
    if (k == top_label) {
      if (target_ && budget != 0) return;
      nu_[r] = pos;
      // Row r becomes the previous row for r+1.
      std::vector<Entry> saved_prev = prev_end_;
      prev_end_[0] = lam_[r];
      for (std::size_t i = 0; i < labels_; ++i) prev_end_[i + 1] = i < top_label ? row_end_[r][i + 1] : pos;
      std::vector<Entry> saved_used = used_before_row_;
      row(r + 1, visit);
      used_before_row_ = saved_used;
      prev_end_ = saved_prev;
      return;
    }
    Entry hi = mu_[k] - used_[k];
    if (k >= 1) hi = std::min(hi, used_before_row_[k - 1] - used_[k]);
    if (r >= 1) hi = std::min(hi, prev_end_[k] - pos);
    if (target_) hi = std::min(hi, budget);
    if (hi < 0) return;
    Entry lo = 0;
    if (target_ && k + 1 == top_label) lo = budget;
    for (Entry a = lo; a <= hi; ++a) {
      used_[k] += a;
      row_end_[r][k + 1] = pos + a;
      cell(r, k + 1, top_label, pos + a, target_ ? budget - a : budget, visit);
      used_[k] -= a;
    }
  }

  std::size_t n_;
  const std::vector<Entry>& lam_;
  const std::vector<Entry>& mu_;
  const std::vector<Entry>* target_;
  std::size_t labels_ = 0;
  std::vector<Entry> used_;
  std::vector<Entry> used_before_row_;
  // prev_end_[k]: lam_{r-1} + #(entries < k in row r-1), k = 0..labels.
  std::vector<Entry> prev_end_;
  // row_end_[r][k+1]: lam_r + #(entries <= k in row r) for the row being built.
  std::vector<std::vector<Entry>> row_end_;
  std::vector<Entry> nu_;
};

std::vector<Entry> as_partition(const GLWeight& w, Entry shift) {
  std::vector<Entry> out(w.vec());
  for (Entry& e : out) e -= shift;
  return out;
}

Entry boxes(const std::vector<Entry>& p) {
  Entry s = 0;
  for (Entry e : p) s += e;
  return s;
}

}  // namespace

Decomposition tensor(const GLWeight& lambda, const GLWeight& mu) {
  require_same_n(lambda, mu);
  require_dominant(lambda);
  require_dominant(mu);
  const std::size_t n = lambda.n();
  Decomposition out(n);
  if (n == 0) return out;
  const Entry shift_l = lambda[n - 1];
  const Entry shift_m = mu[n - 1];
  auto lam = as_partition(lambda, shift_l);
  auto content = as_partition(mu, shift_m);
  // The product is symmetric; fill with the smaller content.
  if (boxes(content) > boxes(lam)) std::swap(lam, content);
  LRWalker walker(lam, content, nullptr);
  walker.run([&](const std::vector<Entry>& nu) {
    out.add(GLWeight(nu).shifted(shift_l + shift_m), 1);
  });
  return out;
}

Multiplicity tensor_multiplicity(const GLWeight& lambda, const GLWeight& mu, const GLWeight& nu) {
  require_same_n(lambda, mu);
  require_same_n(lambda, nu);
  require_dominant(lambda);
  require_dominant(mu);
  require_dominant(nu);
  const std::size_t n = lambda.n();
  if (n == 0) return 1;
  const Entry shift_l = lambda[n - 1];
  const Entry shift_m = mu[n - 1];
  auto lam = as_partition(lambda, shift_l);
  auto content = as_partition(mu, shift_m);
  const auto target = as_partition(nu, shift_l + shift_m);
  if (target[n - 1] < 0) return 0;
  if (boxes(target) != boxes(lam) + boxes(content)) return 0;
  if (boxes(content) > boxes(lam)) std::swap(lam, content);
  for (std::size_t i = 0; i < n; ++i)
    if (target[i] < lam[i]) return 0;
  Multiplicity count = 0;
  LRWalker walker(lam, content, &target);
  walker.run([&](const std::vector<Entry>&) { ++count; });
  return count;
}

}  // namespace rankin
