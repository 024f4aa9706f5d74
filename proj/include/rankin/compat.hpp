#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rankin/decomposition.hpp"
#include "rankin/halfint.hpp"
#include "rankin/weights.hpp"

namespace rankin::compat {

/// Extremes of mu_i + nu_j over i + j = t, 1 <= i, j <= n.
struct MMStats {
  Entry t = 0;
  Entry max = 0;
  Entry min = 0;
};

MMStats mm_stats(const PureWeight& mu, const PureWeight& nu, Entry t);

enum class CaseLabel { a, b, c, d, none };
std::string_view to_string(CaseLabel label);

/// Which of the four cohomological windows contains j, the coefficient
/// V_j = (left; right) built with the negative-Sym convention, and the
/// lowest nonvanishing degree l(j).
struct CaseData {
  CaseLabel label = CaseLabel::none;
  std::optional<std::pair<GLWeight, GLWeight>> vj;
  std::optional<Entry> l_j;
};

CaseData classify_case(std::size_t n, Entry k_eta, HalfInt kappa, Entry j);
CaseData classify_case(const PureWeight& mu, const PureWeight& nu, Entry j);

enum class Condition { b, c };

/// Integer solutions j of the two-sided window attached to case b or c.
std::vector<Entry> cond_set(const PureWeight& mu, const PureWeight& nu, Condition which);

/// M^{n+1} <= kappa - 1/2 <= m^n.
bool cond_b_simplified(const PureWeight& mu, const PureWeight& nu);
/// M^{n+2} <= kappa + 1/2 <= m^{n+1}.
bool cond_c_simplified(const PureWeight& mu, const PureWeight& nu);

enum class Compatibility { incompatible, via_b, via_c };
std::string_view to_string(Compatibility c);
Compatibility compatible(const PureWeight& mu, const PureWeight& nu);

enum class Verdict { pass, vacuous_pass, fail };
std::string_view to_string(Verdict v);

struct Lemma34Report {
  Verdict verdict = Verdict::fail;
  std::vector<Entry> cond_b;
  std::vector<Entry> cond_c;
  std::vector<Entry> critical;
};

/// Every nonempty window must equal the critical places.
Lemma34Report verify_lemma_3_4(const PureWeight& mu, const PureWeight& nu);

/// dim Hom(F_mu^v (x) F_nu^v (x) V_j, C) from the window test; defined in cases b and c.
int hom_dim_Fxi(const PureWeight& mu, const PureWeight& nu, Entry j);
/// The same dimension as a product of two U(n)-invariant counts, one per GL_n factor.
Multiplicity hom_dim_Fxi_by_invariants(const PureWeight& mu, const PureWeight& nu, Entry j);

/// j0 = -kappa + 1/2; requires kappa half-odd.
Entry central_point(const PureWeight& mu, const PureWeight& nu);

}  // namespace rankin::compat
