#include "rankin/ktypes.hpp"

#include <algorithm>
#include <array>

#include "rankin/charring.hpp"
#include "rankin/error.hpp"
#include "rankin/oracle.hpp"

namespace rankin::ktypes {

namespace {

constexpr std::array<std::string_view, 7> kLemmas = {"4.4", "4.6", "4.7", "4.8", "4.9", "4.10", "4.11"};

GLWeight sigma_j_of(const compat::CaseData& data) {
  const auto& [left, right] = *data.vj;
  return left + dual(right);
}

GLWeight sigma_j_plus_of(std::size_t n, Entry t) {
  const Entry m = std::max<Entry>(0, t);
  GLWeight out = GLWeight::zero(n);
  out[0] = m;
  out[n - 1] += t - m;
  return out;
}

void finish(LemmaReport& report) {
  const bool ok = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const Check& c) { return c.value == c.expected; });
  report.verdict = ok ? LemmaVerdict::pass : LemmaVerdict::fail;
}

// Check "4.7": a PRV weight identity over a grid of (k_eta, 2 kappa, j).
Multiplicity prv_grid_failures(std::size_t n) {
  Multiplicity failures = 0;
  const auto rank = static_cast<Entry>(n);
  for (Entry k = -12; k <= 12; ++k)
    for (Entry twice_kappa = -12; twice_kappa <= 12; ++twice_kappa)
      for (Entry j = -12; j <= 12; ++j) {
        const auto data = compat::classify_case(n, k, HalfInt::from_twice(twice_kappa), j);
        if (data.label != compat::CaseLabel::b && data.label != compat::CaseLabel::c) continue;
        const GLWeight sj = sigma_j_of(data);
        const GLWeight sjp = sigma_j_plus_of(n, rank * twice_kappa - 2 * k);
        if (prv(sj, sjp) != sigma_n_closed_form(n, data.label)) ++failures;
      }
  return failures;
}

}  // namespace

bool IjSpectrum::contains(const GLWeight& lambda) const {
  if (lambda.n() != n || n == 0) return false;
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (lambda[i] != 0) return false;
  if (n == 1) return lambda[0] == t;
  return lambda[0] >= m_min && lambda[0] + lambda[n - 1] == t;
}

GLWeight IjSpectrum::minimal() const { return sigma_j_plus_of(n, t); }

IjSpectrum ij_spectrum(const PureWeight& mu, const PureWeight& nu, Entry /*j*/) {
  if (mu.n() != nu.n()) throw Error(Errc::DimensionMismatch, "mu and nu have different ranks");
  IjSpectrum s;
  s.n = mu.n();
  s.t = static_cast<Entry>(s.n) * (mu.w() + nu.w()) - 2 * k_eta(mu, nu);
  s.m_min = std::max<Entry>(0, s.t);
  return s;
}

GLWeight jmu_min_ktype(const PureWeight& mu) {
  const std::size_t n = mu.n();
  std::vector<Entry> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = 2 * mu.left()[i] - mu.w() + static_cast<Entry>(n) - 1 - 2 * static_cast<Entry>(i);
  return GLWeight(std::move(out));
}

GLWeight tau(const PureWeight& mu) { return mu.left() + dual(mu.right()); }

Multiplicity jmu_mult(const PureWeight& mu, const GLWeight& lambda) {
  if (lambda.n() != mu.n()) throw Error(Errc::DimensionMismatch, "lambda and mu have different ranks");
  require_dominant(lambda, "lambda");
  const GLWeight delta = jmu_min_ktype(mu);
  if (lambda.sum() != delta.sum()) return 0;
  return oracle::weight_multiplicity(lambda, delta);
}

GLWeight sigma_n_closed_form(std::size_t n, compat::CaseLabel label) {
  const auto rank = static_cast<Entry>(n);
  if (label == compat::CaseLabel::b) {
    GLWeight out = GLWeight::constant(n, -1);
    out[0] = rank - 1;
    return out;
  }
  if (label == compat::CaseLabel::c) {
    GLWeight out = GLWeight::constant(n, 1);
    out[n - 1] = 1 - rank;
    return out;
  }
  throw Error(Errc::UnsupportedCase, "sigma_n exists only in cases b and c");
}

DistinguishedKTypes distinguished(const PureWeight& mu, const PureWeight& nu, Entry j) {
  const auto data = compat::classify_case(mu, nu, j);
  if (data.label != compat::CaseLabel::b && data.label != compat::CaseLabel::c)
    throw Error(Errc::UnsupportedCase, "j=" + std::to_string(j) + " is in case " +
                                           std::string(compat::to_string(data.label)));
  DistinguishedKTypes k;
  k.label = data.label;
  k.tau_mu = tau(mu);
  k.tau_mu_plus = jmu_min_ktype(mu);
  k.tau_nu = tau(nu);
  k.tau_nu_plus = jmu_min_ktype(nu);
  k.tau_n = rho2(mu.n());
  k.sigma_j = sigma_j_of(data);
  k.sigma_j_plus = ij_spectrum(mu, nu, j).minimal();
  k.sigma_n = prv(k.sigma_j, k.sigma_j_plus);
  if (prv(dual(k.tau_mu), k.tau_mu_plus) != k.tau_n || prv(dual(k.tau_nu), k.tau_nu_plus) != k.tau_n)
    throw Error(Errc::AssumptionViolated, "PRV component of tau^v (x) tau^+ is not rho");
  return k;
}

std::size_t b_n(std::size_t n) { return n * (n - 1) / 2; }
std::size_t c_n(std::size_t n) { return n - 1; }

std::string_view to_string(LemmaVerdict v) {
  switch (v) {
    case LemmaVerdict::pass: return "PASS";
    case LemmaVerdict::fail: return "FAIL";
    case LemmaVerdict::skipped: return "SKIPPED";
  }
  return "FAIL";
}

bool is_known_lemma(std::string_view id) {
  return std::find(kLemmas.begin(), kLemmas.end(), id) != kLemmas.end();
}

LemmaReport verify_lemma(std::string_view id, std::size_t n, const std::optional<PureWeight>& mu,
                         const std::optional<PureWeight>& nu, std::optional<Entry> j) {
  if (!is_known_lemma(id)) throw Error(Errc::BadIndex, "unknown lemma id " + std::string(id));
  if (n < 2) throw Error(Errc::OutOfRange, "n must be at least 2");
  LemmaReport report;
  report.id = std::string(id);
  report.n = n;
  const GLWeight sigma_b = sigma_n_closed_form(n, compat::CaseLabel::b);
  const GLWeight sigma_c = sigma_n_closed_form(n, compat::CaseLabel::c);
  const GLWeight tau_n = rho2(n);
  try {
    if (id == "4.4") {
      const auto wedge = exterior_p(n, n - 1);
      report.checks.push_back({"mult " + sigma_b.to_string(), wedge.multiplicity(sigma_b)});
      report.checks.push_back({"mult " + sigma_c.to_string(), wedge.multiplicity(sigma_c)});
    } else if (id == "4.6") {
      const auto wedge = exterior_p(n, b_n(n));
      report.checks.push_back({"mult " + tau_n.to_string(), wedge.multiplicity(tau_n)});
    } else if (id == "4.7") {
      report.checks.push_back({"prv grid failures", prv_grid_failures(n), 0});
      const auto wedge = exterior_p(n, n - 1);
      report.checks.push_back({"mult " + sigma_b.to_string(), wedge.multiplicity(sigma_b)});
      report.checks.push_back({"mult " + sigma_c.to_string(), wedge.multiplicity(sigma_c)});
    } else if (id == "4.8") {
      const std::size_t top = 2 * b_n(n) + c_n(n);
      report.checks.push_back({"mult b", triple_mult(n, top, {tau_n, tau_n, sigma_b})});
      report.checks.push_back({"mult c", triple_mult(n, top, {tau_n, tau_n, sigma_c})});
    } else if (id == "4.9") {
      report.checks.push_back({"inv b", invariant_dim({tau_n, tau_n, sigma_b})});
      report.checks.push_back({"inv c", invariant_dim({tau_n, tau_n, sigma_c})});
    } else {
      if (!mu || !nu) throw Error(Errc::AssumptionViolated, "lemma " + std::string(id) + " needs mu and nu");
      if (mu->n() != n || nu->n() != n) throw Error(Errc::DimensionMismatch, "mu, nu must have rank n");
      const Entry jj = j ? *j : compat::central_point(*mu, *nu);
      const auto k = distinguished(*mu, *nu, jj);
      if (id == "4.10")
        report.checks.push_back({"inv", invariant_dim({dual(k.tau_mu), dual(k.tau_nu), k.sigma_j})});
      else
        report.checks.push_back({"inv", invariant_dim({k.tau_mu_plus, k.tau_nu_plus, k.sigma_j_plus})});
    }
  } catch (const Error& e) {
    if (e.code() != Errc::InfeasibleScale) throw;
    report.checks.clear();
    report.verdict = LemmaVerdict::skipped;
    report.note = e.what();
    return report;
  }
  finish(report);
  return report;
}

}  // namespace rankin::ktypes
