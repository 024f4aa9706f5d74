#pragma once

#include <cstddef>
#include <vector>

#include "rankin/halfint.hpp"
#include "rankin/weights.hpp"

// Archimedean gamma-factor bookkeeping for pi_mu x pi_nu. Only pole
// positions are tracked; no L-value is ever evaluated.
namespace rankin::ltheory {

/// |mu_i + nu_j - kappa + (n+1) - (i+j)| for 1-based (i, j).
struct GammaShift {
  std::size_t i = 0;
  std::size_t j = 0;
  HalfInt shift;
  friend bool operator==(const GammaShift&, const GammaShift&) = default;
};

struct CriticalData {
  HalfInt kappa;
  HalfInt c;
  HalfInt lo;  ///< 1 - kappa - c
  HalfInt hi;  ///< -kappa + c
  std::vector<Entry> places;
};

/// All n^2 shifts, row-major in (i, j).
std::vector<GammaShift> gamma_shifts(const PureWeight& mu, const PureWeight& nu);
/// Minimum shift.
HalfInt c_mu_nu(const PureWeight& mu, const PureWeight& nu);
/// Closed-form interval [1-kappa-c, -kappa+c] and its integers.
CriticalData critical_places(const PureWeight& mu, const PureWeight& nu);
/// Neither gamma factor of L(s) nor of the dual L(1-s) sits at a pole.
bool is_critical(const PureWeight& mu, const PureWeight& nu, Entry s);

/// Half-width of the exhaustive scan window: 2 max|entry| + 2n + 2.
Entry scan_bound(const PureWeight& mu, const PureWeight& nu);
/// Integers in [-B, B] passing is_critical.
std::vector<Entry> scan_critical(const PureWeight& mu, const PureWeight& nu);

}  // namespace rankin::ltheory
