#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankin/compat.hpp"
#include "rankin/decomposition.hpp"
#include "rankin/weights.hpp"

// U(n)-types of the induced representations I_j and J_mu, and the small
// multiplicity-one statements that the archimedean argument rests on.
namespace rankin::ktypes {

/// K-types (m, 0, ..., 0, t - m), m >= m_min, each once.
struct IjSpectrum {
  std::size_t n = 0;
  Entry t = 0;
  Entry m_min = 0;

  bool contains(const GLWeight& lambda) const;
  /// The member with m = m_min.
  GLWeight minimal() const;
};

IjSpectrum ij_spectrum(const PureWeight& mu, const PureWeight& nu, Entry j);

/// (2 mu_i - w + n + 1 - 2i)_i.
GLWeight jmu_min_ktype(const PureWeight& mu);
/// mu_L + dual(mu_R) = (2 mu_i - w)_i.
GLWeight tau(const PureWeight& mu);

/// Multiplicity of E_lambda in J_mu|_K. By Frobenius reciprocity this is the
/// dimension of the jmu_min_ktype(mu) weight space of E_lambda, counted on
/// Gelfand-Tsetlin patterns.
Multiplicity jmu_mult(const PureWeight& mu, const GLWeight& lambda);

struct DistinguishedKTypes {
  GLWeight tau_mu;
  GLWeight tau_mu_plus;
  GLWeight tau_nu;
  GLWeight tau_nu_plus;
  GLWeight tau_n;
  GLWeight sigma_j;
  GLWeight sigma_j_plus;
  GLWeight sigma_n;
  compat::CaseLabel label = compat::CaseLabel::none;
};

/// Throws UnsupportedCase unless j lies in case b or c.
DistinguishedKTypes distinguished(const PureWeight& mu, const PureWeight& nu, Entry j);

/// (n-1, -1, ..., -1) for case b, (1, ..., 1, 1-n) for case c.
GLWeight sigma_n_closed_form(std::size_t n, compat::CaseLabel label);

/// b_n = n(n-1)/2.
std::size_t b_n(std::size_t n);
/// c_n = n - 1.
std::size_t c_n(std::size_t n);

struct Check {
  std::string what;
  Multiplicity value = 0;
  Multiplicity expected = 1;
};

enum class LemmaVerdict { pass, fail, skipped };
std::string_view to_string(LemmaVerdict v);

struct LemmaReport {
  std::string id;
  std::size_t n = 0;
  std::vector<Check> checks;
  LemmaVerdict verdict = LemmaVerdict::fail;
  std::string note;  ///< reason for SKIPPED
};

/// Known ids: 4.4 4.6 4.7 4.8 4.9 4.10 4.11. The last two need mu and nu;
/// j defaults to the central point.
LemmaReport verify_lemma(std::string_view id, std::size_t n,
                         const std::optional<PureWeight>& mu = std::nullopt,
                         const std::optional<PureWeight>& nu = std::nullopt,
                         std::optional<Entry> j = std::nullopt);

bool is_known_lemma(std::string_view id);

}  // namespace rankin::ktypes
