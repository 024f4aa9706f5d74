#include "rankin/cohomology.hpp"

#include "rankin/charring.hpp"
#include "rankin/compat.hpp"
#include "rankin/error.hpp"
#include "rankin/ktypes.hpp"

namespace rankin::cohomology {

namespace {

// sum over d of Hom(wedge^d p~ (x) coeff, X), with X probed one K-type at a time.
template <typename Probe>
CohProfile profile(std::size_t n, const Decomposition& coeff, Probe probe) {
  const auto& ladder = exterior_ladder(n);
  CohProfile out;
  out.dims.assign(ladder.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t d = 0; d < ladder.size(); ++d) {
    Multiplicity total = 0;
    for (const auto& [sigma, a] : ladder[d].terms())
      for (const auto& [rho, b] : coeff.terms()) {
        const Decomposition product = tensor(sigma, rho);
        for (const auto& [lambda, c] : product.terms()) total += a * b * c * probe(lambda);
      }
    out.dims[d] = total;
  }
  return out;
}

}  // namespace

CohProfile full_from_reduced(const CohProfile& reduced) {
  CohProfile out;
  out.pair = Pair::full;
  out.dims.assign(reduced.dims.size() + 1, 0);
  for (std::size_t d = 0; d < out.dims.size(); ++d)
    out.dims[d] = reduced.at(d) + (d > 0 ? reduced.at(d - 1) : 0);
  return out;
}

std::optional<GLWeight> su_match(const GLWeight& lambda, Entry target_sum) {
  const auto n = static_cast<Entry>(lambda.n());
  const Entry diff = target_sum - lambda.sum();
  if (diff % n != 0) return std::nullopt;
  return lambda.shifted(diff / n);
}

CohProfile coh_profile_pi(const PureWeight& mu) {
  const std::size_t n = mu.n();
  // F_mu^v restricted to U(n): E_{mu_L}^v (x) E_{mu_R}.
  const Decomposition coeff = tensor(dual(mu.left()), mu.right());
  const Entry target = ktypes::jmu_min_ktype(mu).sum();
  return profile(n, coeff, [&](const GLWeight& lambda) -> Multiplicity {
    const auto matched = su_match(dual(lambda), target);
    return matched ? ktypes::jmu_mult(mu, *matched) : 0;
  });
}

IjProfile coh_profile_Ij(const PureWeight& mu, const PureWeight& nu, std::optional<Entry> j) {
  const HalfInt k = kappa(mu, nu);
  if (!k.is_half_odd())
    throw Error(Errc::AssumptionViolated, "kappa=" + k.to_string() + " is not half-odd");
  const Entry j0 = compat::central_point(mu, nu);
  if (j && *j != j0)
    throw Error(Errc::AssumptionViolated,
                "j=" + std::to_string(*j) + " is not the central point " + std::to_string(j0));
  const auto data = compat::classify_case(mu, nu, j0);
  if (data.label != compat::CaseLabel::b && data.label != compat::CaseLabel::c)
    throw Error(Errc::UnsupportedCase, "central point is in case " + std::string(compat::to_string(data.label)));
  const std::size_t n = mu.n();
  const auto& [vl, vr] = *data.vj;
  const auto spectrum = ktypes::ij_spectrum(mu, nu, j0);
  IjProfile out;
  out.reduced = profile(n, restrict_to_K(vl, vr), [&](const GLWeight& lambda) -> Multiplicity {
    const auto matched = su_match(dual(lambda), spectrum.t);
    return matched && spectrum.contains(*matched) ? 1 : 0;
  });
  out.full = full_from_reduced(out.reduced);
  out.l = static_cast<std::size_t>(*data.l_j);
  out.matches_pattern = true;
  for (std::size_t d = 0; d < out.full.dims.size(); ++d) {
    Multiplicity expected = 0;
    if (d == out.l || d == out.l + 2) expected = 1;
    if (d == out.l + 1) expected = 2;
    if (out.full.dims[d] != expected) out.matches_pattern = false;
  }
  return out;
}

Multiplicity coh_total(const PureWeight& mu, const PureWeight& nu) {
  const std::size_t n = mu.n();
  const std::size_t top = n * n - 1;
  if (exterior_p(n, top).multiplicity(GLWeight::zero(n)) != 1)
    throw Error(Errc::AssumptionViolated, "trivial type does not occur once in the top exterior power");
  const auto ij = coh_profile_Ij(mu, nu);
  const std::size_t bn = ktypes::b_n(n);
  return coh_profile_pi(mu).at(bn) * coh_profile_pi(nu).at(bn) * ij.reduced.at(ktypes::c_n(n));
}

}  // namespace rankin::cohomology
