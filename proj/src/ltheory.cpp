#include "rankin/ltheory.hpp"

#include <algorithm>
#include <cstdlib>

#include "rankin/error.hpp"

namespace rankin::ltheory {

namespace {

void require_match(const PureWeight& mu, const PureWeight& nu) {
  if (mu.n() != nu.n()) throw Error(Errc::DimensionMismatch, "pi_mu and pi_nu have different ranks");
}

}  // namespace

std::vector<GammaShift> gamma_shifts(const PureWeight& mu, const PureWeight& nu) {
  require_match(mu, nu);
  const std::size_t n = mu.n();
  const HalfInt k = kappa(mu, nu);
  std::vector<GammaShift> out;
  out.reserve(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Entry integral = mu.left()[i - 1] + nu.left()[j - 1] + static_cast<Entry>(n + 1) -
                             static_cast<Entry>(i + j);
      out.push_back({i, j, (HalfInt(integral) - k).abs()});
    }
  }
  return out;
}

HalfInt c_mu_nu(const PureWeight& mu, const PureWeight& nu) {
  const auto shifts = gamma_shifts(mu, nu);
  return std::min_element(shifts.begin(), shifts.end(),
                          [](const GammaShift& a, const GammaShift& b) { return a.shift < b.shift; })
      ->shift;
}

CriticalData critical_places(const PureWeight& mu, const PureWeight& nu) {
  CriticalData out;
  out.kappa = kappa(mu, nu);
  out.c = c_mu_nu(mu, nu);
  out.lo = HalfInt(1) - out.kappa - out.c;
  out.hi = -out.kappa + out.c;
  for (Entry s = out.lo.ceil(); s <= out.hi.floor(); ++s) out.places.push_back(s);
  return out;
}

bool is_critical(const PureWeight& mu, const PureWeight& nu, Entry s) {
  const HalfInt k = kappa(mu, nu);
  for (const auto& g : gamma_shifts(mu, nu)) {
    if (HalfInt(s) + k + g.shift < HalfInt(1)) return false;
    if (HalfInt(1 - s) - k + g.shift < HalfInt(1)) return false;
  }
  return true;
}

Entry scan_bound(const PureWeight& mu, const PureWeight& nu) {
  require_match(mu, nu);
  Entry largest = 0;
  for (const auto* w : {&mu.left(), &mu.right(), &nu.left(), &nu.right()})
    for (Entry e : w->entries()) largest = std::max(largest, std::abs(e));
  return 2 * largest + 2 * static_cast<Entry>(mu.n()) + 2;
}

std::vector<Entry> scan_critical(const PureWeight& mu, const PureWeight& nu) {
  const Entry bound = scan_bound(mu, nu);
  std::vector<Entry> out;
  for (Entry s = -bound; s <= bound; ++s)
    if (is_critical(mu, nu, s)) out.push_back(s);
  return out;
}

}  // namespace rankin::ltheory
