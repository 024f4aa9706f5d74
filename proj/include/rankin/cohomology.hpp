#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rankin/decomposition.hpp"
#include "rankin/weights.hpp"

// Relative Lie algebra cohomology dimensions, reduced to SU(n)-equivariant
// maps out of exterior powers of the traceless adjoint.
namespace rankin::cohomology {

enum class Pair { reduced, full };

struct CohProfile {
  Pair pair = Pair::reduced;
  std::vector<Multiplicity> dims;  ///< indexed by degree

  Multiplicity at(std::size_t d) const { return d < dims.size() ? dims[d] : 0; }
};

/// full[d] = reduced[d] + reduced[d-1], one degree longer.
CohProfile full_from_reduced(const CohProfile& reduced);

/// Shift lambda by a multiple of (1,...,1) so its entry sum becomes target_sum.
/// Empty when the difference is not divisible by n.
std::optional<GLWeight> su_match(const GLWeight& lambda, Entry target_sum);

/// H^d(g, K~; J_mu (x) F_mu^v) for d = 0..n^2-1.
CohProfile coh_profile_pi(const PureWeight& mu);

struct IjProfile {
  CohProfile reduced;
  CohProfile full;
  std::size_t l = 0;
  /// full is 1, 2, 1 at l, l+1, l+2 and zero elsewhere.
  bool matches_pattern = false;
};

/// H^d(g, K~; I_j (x) V_j); only at the central point j = 1/2 - kappa.
IjProfile coh_profile_Ij(const PureWeight& mu, const PureWeight& nu, std::optional<Entry> j = std::nullopt);

/// pi(mu)[b_n] * pi(nu)[b_n] * Ij[c_n]. Also checks the trivial
/// representation occurs once in the top exterior power.
Multiplicity coh_total(const PureWeight& mu, const PureWeight& nu);

}  // namespace rankin::cohomology
