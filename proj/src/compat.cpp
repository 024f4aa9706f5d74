#include "rankin/compat.hpp"

#include <algorithm>
#include <limits>

#include "rankin/charring.hpp"
#include "rankin/error.hpp"
#include "rankin/ltheory.hpp"

namespace rankin::compat {

namespace {

void require_match(const PureWeight& mu, const PureWeight& nu) {
  if (mu.n() != nu.n()) throw Error(Errc::DimensionMismatch, "mu and nu have different ranks");
}

std::vector<Entry> integer_range(Entry lo, Entry hi) {
  std::vector<Entry> out;
  for (Entry j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

// det^c (x) Sym^a as a highest weight.
GLWeight twisted_sym(std::size_t n, Entry a, Entry c) { return sym_power(n, a).shifted(c); }

}  // namespace

MMStats mm_stats(const PureWeight& mu, const PureWeight& nu, Entry t) {
  require_match(mu, nu);
  const auto n = static_cast<Entry>(mu.n());
  if (t < n || t > n + 2) throw Error(Errc::BadIndex, "t must be one of n, n+1, n+2");
  MMStats out{t, std::numeric_limits<Entry>::min(), std::numeric_limits<Entry>::max()};
  bool any = false;
  for (Entry i = std::max<Entry>(1, t - n); i <= std::min(n, t - 1); ++i) {
    const Entry v = mu.left()[i - 1] + nu.left()[t - i - 1];
    out.max = std::max(out.max, v);
    out.min = std::min(out.min, v);
    any = true;
  }
  if (!any) throw Error(Errc::BadIndex, "no index pairs with i+j=" + std::to_string(t) + " for n=" + std::to_string(n));
  return out;
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::a: return "a";
    case CaseLabel::b: return "b";
    case CaseLabel::c: return "c";
    case CaseLabel::d: return "d";
    case CaseLabel::none: return "none";
  }
  return "none";
}

CaseData classify_case(std::size_t rank, Entry k, HalfInt kappa, Entry j) {
  // Every threshold lies in (1/n)Z once 2*kappa is an integer, so the
  // comparisons are made on n*j.
  const auto n = static_cast<Entry>(rank);
  const Entry twice_kappa = kappa.twice();
  const Entry nj = n * j;
  const Entry two_n_kappa = n * twice_kappa;
  CaseData out;
  if (nj >= n - k && nj >= n + k - two_n_kappa) {
    out.label = CaseLabel::a;
    out.vj = {twisted_sym(rank, nj + k - n, 1 - j), twisted_sym(rank, nj - n - k + two_n_kappa, 1 - j)};
    out.l_j = 2 * (n - 1);
  } else if (n - two_n_kappa + k <= nj && nj <= -k) {
    out.label = CaseLabel::b;
    out.vj = {twisted_sym(rank, nj + k, -j), twisted_sym(rank, nj - n - k + two_n_kappa, 1 - j)};
    out.l_j = n - 1;
  } else if (n - k <= nj && nj <= -two_n_kappa + k) {
    out.label = CaseLabel::c;
    out.vj = {twisted_sym(rank, nj + k - n, 1 - j), twisted_sym(rank, nj + two_n_kappa - k, -j)};
    out.l_j = n - 1;
  } else if (nj <= -k && nj <= k - two_n_kappa) {
    out.label = CaseLabel::d;
    out.vj = {twisted_sym(rank, nj + k, -j), twisted_sym(rank, nj + two_n_kappa - k, -j)};
    out.l_j = 0;
  }
  return out;
}

CaseData classify_case(const PureWeight& mu, const PureWeight& nu, Entry j) {
  require_match(mu, nu);
  return classify_case(mu.n(), k_eta(mu, nu), kappa(mu, nu), j);
}

std::vector<Entry> cond_set(const PureWeight& mu, const PureWeight& nu, Condition which) {
  require_match(mu, nu);
  const auto n = static_cast<Entry>(mu.n());
  const Entry twice_kappa = kappa(mu, nu).twice();
  if (which == Condition::b) {
    const auto low = mm_stats(mu, nu, n);
    const auto mid = mm_stats(mu, nu, n + 1);
    return integer_range(std::max(-low.min, 1 - twice_kappa + mid.max),
                         std::min(-mid.max, 1 - twice_kappa + low.min));
  }
  const auto mid = mm_stats(mu, nu, n + 1);
  const auto high = mm_stats(mu, nu, n + 2);
  return integer_range(std::max(1 - mid.min, high.max - twice_kappa),
                       std::min(1 - high.max, -twice_kappa + mid.min));
}

bool cond_b_simplified(const PureWeight& mu, const PureWeight& nu) {
  const auto n = static_cast<Entry>(mu.n());
  const HalfInt k = kappa(mu, nu);
  const HalfInt half = HalfInt::from_twice(1);
  return HalfInt(mm_stats(mu, nu, n + 1).max) <= k - half && k - half <= HalfInt(mm_stats(mu, nu, n).min);
}

bool cond_c_simplified(const PureWeight& mu, const PureWeight& nu) {
  const auto n = static_cast<Entry>(mu.n());
  const HalfInt k = kappa(mu, nu);
  const HalfInt half = HalfInt::from_twice(1);
  return HalfInt(mm_stats(mu, nu, n + 2).max) <= k + half && k + half <= HalfInt(mm_stats(mu, nu, n + 1).min);
}

std::string_view to_string(Compatibility c) {
  switch (c) {
    case Compatibility::incompatible: return "false";
    case Compatibility::via_b: return "via_b";
    case Compatibility::via_c: return "via_c";
  }
  return "false";
}

Compatibility compatible(const PureWeight& mu, const PureWeight& nu) {
  if (!cond_set(mu, nu, Condition::b).empty()) return Compatibility::via_b;
  if (!cond_set(mu, nu, Condition::c).empty()) return Compatibility::via_c;
  return Compatibility::incompatible;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::vacuous_pass: return "VACUOUS_PASS";
    case Verdict::fail: return "FAIL";
  }
  return "FAIL";
}

Lemma34Report verify_lemma_3_4(const PureWeight& mu, const PureWeight& nu) {
  Lemma34Report out;
  out.cond_b = cond_set(mu, nu, Condition::b);
  out.cond_c = cond_set(mu, nu, Condition::c);
  out.critical = ltheory::critical_places(mu, nu).places;
  if (out.cond_b.empty() && out.cond_c.empty()) {
    out.verdict = Verdict::vacuous_pass;
    return out;
  }
  const bool ok = (out.cond_b.empty() || out.cond_b == out.critical) &&
                  (out.cond_c.empty() || out.cond_c == out.critical);
  out.verdict = ok ? Verdict::pass : Verdict::fail;
  return out;
}

int hom_dim_Fxi(const PureWeight& mu, const PureWeight& nu, Entry j) {
  const auto data = classify_case(mu, nu, j);
  Condition which;
  if (data.label == CaseLabel::b) which = Condition::b;
  else if (data.label == CaseLabel::c) which = Condition::c;
  else
    throw Error(Errc::UnsupportedCase, "j=" + std::to_string(j) + " falls in case " +
                                           std::string(to_string(data.label)) + ", not b or c");
  const auto window = cond_set(mu, nu, which);
  return std::binary_search(window.begin(), window.end(), j) ? 1 : 0;
}

Multiplicity hom_dim_Fxi_by_invariants(const PureWeight& mu, const PureWeight& nu, Entry j) {
  const auto data = classify_case(mu, nu, j);
  if (!data.vj)
    throw Error(Errc::UnsupportedCase, "no coefficient system V_j at j=" + std::to_string(j));
  const auto& [vl, vr] = *data.vj;
  // Hom_{G_C}(V_j, F_mu (x) F_nu) splits over the two GL_n(C) factors.
  const Multiplicity left = invariant_dim({dual(mu.left()), dual(nu.left()), vl});
  const Multiplicity right = invariant_dim({dual(mu.right()), dual(nu.right()), vr});
  return left * right;
}

Entry central_point(const PureWeight& mu, const PureWeight& nu) {
  const HalfInt k = kappa(mu, nu);
  if (!k.is_half_odd())
    throw Error(Errc::NotHalfOdd, "kappa=" + k.to_string() + " is an integer; no central point");
  return (HalfInt::from_twice(1) - k).floor();
}

}  // namespace rankin::compat
