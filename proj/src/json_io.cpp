#include "rankin/json_io.hpp"

#include <limits>

namespace rankin::json_io {

Json to_json(HalfInt h) {
  if (h.is_integral()) return h.twice() / 2;
  return h.to_string();
}

Json to_json(const GLWeight& w) { return Json(w.vec()); }

Json to_json(const BigInt& b) {
  if (b <= std::numeric_limits<std::int64_t>::max() && b >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(b);
  return b.str();
}

Json to_json(const Decomposition& d) {
  Json terms = Json::array();
  for (const auto& [w, m] : d.terms()) terms.push_back({{"weight", to_json(w)}, {"mult", m}});
  return terms;
}

Json to_json(const TripleDecomposition& d) {
  Json terms = Json::array();
  for (const auto& [key, m] : d.terms())
    terms.push_back({{"weights", {to_json(key[0]), to_json(key[1]), to_json(key[2])}}, {"mult", m}});
  return terms;
}

Json to_json(const ltheory::CriticalData& c) {
  return {{"kappa", to_json(c.kappa)}, {"c", to_json(c.c)}, {"lo", to_json(c.lo)}, {"hi", to_json(c.hi)},
          {"places", c.places}};
}

Json to_json(const compat::CaseData& c) {
  Json out;
  out["label"] = std::string(compat::to_string(c.label));
  if (c.vj)
    out["vj"] = {to_json(c.vj->first), to_json(c.vj->second)};
  else
    out["vj"] = nullptr;
  if (c.l_j)
    out["l"] = *c.l_j;
  else
    out["l"] = nullptr;
  return out;
}

Json to_json(const ktypes::DistinguishedKTypes& k) {
  return {{"label", std::string(compat::to_string(k.label))},
          {"tau_mu", to_json(k.tau_mu)},
          {"tau_mu_plus", to_json(k.tau_mu_plus)},
          {"tau_nu", to_json(k.tau_nu)},
          {"tau_nu_plus", to_json(k.tau_nu_plus)},
          {"tau_n", to_json(k.tau_n)},
          {"sigma_j", to_json(k.sigma_j)},
          {"sigma_j_plus", to_json(k.sigma_j_plus)},
          {"sigma_n", to_json(k.sigma_n)}};
}

Json to_json(const ktypes::LemmaReport& r) {
  Json out;
  out["lemma"] = r.id;
  out["n"] = r.n;
  if (r.checks.size() == 1 && r.checks.front().expected == 1) {
    out["multiplicity"] = r.checks.front().value;
  } else if (!r.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"what", c.what}, {"value", c.value}, {"expected", c.expected}});
    out["checks"] = std::move(checks);
  }
  if (!r.note.empty()) out["note"] = r.note;
  out["verdict"] = std::string(ktypes::to_string(r.verdict));
  return out;
}

std::string render(const Json& doc, bool pretty) { return doc.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace rankin::json_io
