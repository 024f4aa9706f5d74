#include "rankin/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>

#include "rankin/compat.hpp"
#include "rankin/error.hpp"
#include "rankin/ktypes.hpp"
#include "rankin/ltheory.hpp"

namespace rankin::sweep {

namespace {

using json_io::Json;

struct Instance {
  std::string key;
  std::size_t n = 0;
  std::optional<PureWeight> mu;
  std::optional<PureWeight> nu;
  std::string verdict;
};

std::string instance_key(std::size_t n, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "n%02zu-%06zu", n, index);
  return buf;
}

std::uint32_t fnv1a(const std::string& text) {
  std::uint32_t h = 2166136261u;
  for (unsigned char ch : text) h = (h ^ ch) * 16777619u;
  return h;
}

std::uint64_t stream_seed(std::uint64_t seed, const std::string& lemma, std::size_t n) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    fnv1a(lemma),
                    static_cast<std::uint32_t>(n)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::string evaluate(const std::string& lemma, Instance& inst) {
  if (lemma == "3.4") {
    const auto report = compat::verify_lemma_3_4(*inst.mu, *inst.nu);
    const bool scan_ok =
        ltheory::critical_places(*inst.mu, *inst.nu).places == ltheory::scan_critical(*inst.mu, *inst.nu);
    if (!scan_ok) return "FAIL";
    return std::string(compat::to_string(report.verdict));
  }
  const auto report = ktypes::verify_lemma(lemma, inst.n, inst.mu, inst.nu);
  return std::string(ktypes::to_string(report.verdict));
}

}  // namespace

Entry Rng::uniform(Entry lo, Entry hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Entry>(engine_() % span);
}

PureWeight random_pure(Rng& rng, std::size_t n, Entry bound) {
  std::vector<Entry> left(n);
  for (auto& e : left) e = rng.uniform(-bound, bound);
  std::sort(left.begin(), left.end(), std::greater<>());
  const Entry w = rng.uniform(left.front() - bound, left.back() + bound);
  return PureWeight::from_left(GLWeight(std::move(left)), w);
}

std::pair<PureWeight, PureWeight> random_compatible(Rng& rng, std::size_t n, Entry bound) {
  for (;;) {
    PureWeight mu = random_pure(rng, n, bound);
    PureWeight nu = random_pure(rng, n, bound);
    if (!kappa(mu, nu).is_half_odd()) continue;
    if (compat::compatible(mu, nu) == compat::Compatibility::incompatible) continue;
    const auto label = compat::classify_case(mu, nu, compat::central_point(mu, nu)).label;
    if (label == compat::CaseLabel::b || label == compat::CaseLabel::c) return {std::move(mu), std::move(nu)};
  }
}

bool is_randomized(const std::string& lemma) { return lemma == "3.4" || lemma == "4.10" || lemma == "4.11"; }

bool is_sweepable(const std::string& lemma) { return lemma == "3.4" || ktypes::is_known_lemma(lemma); }

Report run(const Spec& spec) {
  Report report;
  Json lemmas = Json::array();
  for (const auto& lemma : spec.lemmas) {
    if (!is_sweepable(lemma)) throw Error(Errc::BadIndex, "unknown lemma id " + lemma);
    if (is_randomized(lemma) && !spec.seed)
      throw Error(Errc::Parse, "lemma " + lemma + " draws random instances; --seed is required");
    const auto start = std::chrono::steady_clock::now();

    std::vector<Instance> instances;
    for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
      if (!is_randomized(lemma)) {
        instances.push_back({instance_key(n, 0), n, std::nullopt, std::nullopt, ""});
        continue;
      }
      Rng rng(stream_seed(*spec.seed, lemma, n));
      for (std::size_t s = 0; s < spec.samples; ++s) {
        Instance inst{instance_key(n, s), n, std::nullopt, std::nullopt, ""};
        if (lemma == "3.4") {
          inst.mu = random_pure(rng, n);
          inst.nu = random_pure(rng, n);
        } else {
          auto [mu, nu] = random_compatible(rng, n);
          inst.mu = std::move(mu);
          inst.nu = std::move(nu);
        }
        instances.push_back(std::move(inst));
      }
    }

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < instances.size(); ++i) {
      try {
        instances[i].verdict = evaluate(lemma, instances[i]);
      } catch (const Error& e) {
        instances[i].verdict = e.code() == Errc::InfeasibleScale ? "SKIPPED" : "FAIL";
      }
    }
    std::sort(instances.begin(), instances.end(),
              [](const Instance& a, const Instance& b) { return a.key < b.key; });

    std::map<std::string, std::size_t> counts{{"PASS", 0}, {"VACUOUS_PASS", 0}, {"FAIL", 0}, {"SKIPPED", 0}};
    Json rows = Json::array();
    for (const auto& inst : instances) {
      ++counts[inst.verdict];
      Json row{{"key", inst.key}, {"n", inst.n}};
      if (inst.mu) row["mu"] = inst.mu->to_string();
      if (inst.nu) row["nu"] = inst.nu->to_string();
      row["verdict"] = inst.verdict;
      rows.push_back(std::move(row));
    }
    report.failures += counts["FAIL"];
    report.skipped += counts["SKIPPED"];

    Json entry{{"lemma", lemma}, {"n_min", spec.n_min}, {"n_max", spec.n_max}};
    if (is_randomized(lemma)) entry["samples"] = spec.samples;
    entry["counts"] = {{"PASS", counts["PASS"]}, {"VACUOUS_PASS", counts["VACUOUS_PASS"]},
                       {"FAIL", counts["FAIL"]}, {"SKIPPED", counts["SKIPPED"]}};
    entry["instances"] = std::move(rows);
    if (spec.timings) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      entry["wall_ms"] = ms;
    }
    lemmas.push_back(std::move(entry));
  }
  report.doc["seed"] = spec.seed ? Json(*spec.seed) : Json(nullptr);
  report.doc["lemmas"] = std::move(lemmas);
  report.doc["verdict"] = report.failures ? "FAIL" : report.skipped ? "SKIPPED" : "PASS";
  return report;
}

}  // namespace rankin::sweep
