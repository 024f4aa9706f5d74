#include "rankin/cli.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rankin/charring.hpp"
#include "rankin/cohomology.hpp"
#include "rankin/compat.hpp"
#include "rankin/error.hpp"
#include "rankin/json_io.hpp"
#include "rankin/ktypes.hpp"
#include "rankin/ltheory.hpp"
#include "rankin/oracle.hpp"
#include "rankin/sweep.hpp"

namespace rankin::cli {

namespace {

using json_io::Json;
using json_io::to_json;

struct Outcome {
  Json doc;
  int code = 0;
};

struct PairArgs {
  std::string mu;
  std::string nu;
};

void add_pair(CLI::App* cmd, PairArgs& p) {
  cmd->add_option("--mu", p.mu, "pure weight \"l1,..,ln;r1,..,rn\"")->required();
  cmd->add_option("--nu", p.nu, "pure weight \"l1,..,ln;r1,..,rn\"")->required();
}

std::pair<PureWeight, PureWeight> parse_both(const PairArgs& p) {
  auto mu = parse_pure(p.mu);
  auto nu = parse_pure(p.nu);
  if (mu.n() != nu.n()) throw Error(Errc::DimensionMismatch, "mu and nu have different ranks");
  return {std::move(mu), std::move(nu)};
}

Json stats_json(const PureWeight& mu, const PureWeight& nu) {
  Json out = Json::array();
  const auto n = static_cast<Entry>(mu.n());
  for (Entry t = n; t <= n + 2; ++t) {
    try {
      const auto s = compat::mm_stats(mu, nu, t);
      out.push_back({{"t", t}, {"M", s.max}, {"m", s.min}});
    } catch (const Error& e) {
      if (e.code() != Errc::BadIndex) throw;
    }
  }
  return out;
}

Outcome cmd_compat(const PairArgs& p) {
  const auto [mu, nu] = parse_both(p);
  const auto lemma = compat::verify_lemma_3_4(mu, nu);
  Json doc;
  doc["kappa"] = to_json(kappa(mu, nu));
  doc["k_eta"] = k_eta(mu, nu);
  doc["stats"] = stats_json(mu, nu);
  doc["cond_b"] = lemma.cond_b;
  doc["cond_c"] = lemma.cond_c;
  doc["compatible"] = std::string(compat::to_string(compat::compatible(mu, nu)));
  doc["lemma_3_4"] = std::string(compat::to_string(lemma.verdict));
  doc["central_point"] = kappa(mu, nu).is_half_odd() ? Json(compat::central_point(mu, nu)) : Json(nullptr);
  return {doc, lemma.verdict == compat::Verdict::fail ? 1 : 0};
}

Outcome cmd_ktypes(const PairArgs& p, const std::optional<Entry>& j_opt) {
  const auto [mu, nu] = parse_both(p);
  const Entry j = j_opt ? *j_opt : compat::central_point(mu, nu);
  const auto k = ktypes::distinguished(mu, nu, j);
  const auto spectrum = ktypes::ij_spectrum(mu, nu, j);
  Json doc;
  doc["j"] = j;
  const Json types = to_json(k);
  for (const auto& [key, value] : types.items()) doc[key] = value;
  doc["ij"] = {{"t", spectrum.t}, {"m_min", spectrum.m_min}};
  return {doc, 0};
}

Outcome cmd_coh(const PairArgs& p) {
  const auto [mu, nu] = parse_both(p);
  const std::size_t n = mu.n();
  const auto ij = cohomology::coh_profile_Ij(mu, nu);
  const auto pi_mu = cohomology::coh_profile_pi(mu);
  const auto pi_nu = cohomology::coh_profile_pi(nu);
  const std::size_t bn = ktypes::b_n(n);
  Json doc;
  doc["n"] = n;
  doc["j"] = compat::central_point(mu, nu);
  doc["b_n"] = bn;
  doc["c_n"] = ktypes::c_n(n);
  doc["pi_mu"] = pi_mu.dims;
  doc["pi_nu"] = pi_nu.dims;
  doc["ij_reduced"] = ij.reduced.dims;
  doc["ij_full"] = ij.full.dims;
  doc["l"] = ij.l;
  doc["matches_pattern"] = ij.matches_pattern;
  doc["total"] = cohomology::coh_total(mu, nu);
  return {doc, ij.matches_pattern ? 0 : 1};
}

struct DecomposeArgs {
  std::string op;
  std::string a;
  std::string b;
  std::string pair;
  std::vector<std::string> weights;
  Entry k = 0;
  std::size_t n = 0;
  bool use_oracle = false;
};

Outcome cmd_decompose(const DecomposeArgs& d) {
  Json doc;
  doc["op"] = d.op;
  auto need = [](const std::string& value, const char* flag) {
    if (value.empty()) throw Error(Errc::Parse, std::string(flag) + " is required for this op");
    return value;
  };
  if (d.op == "tensor") {
    const auto a = parse_weight(need(d.a, "--a"));
    const auto b = parse_weight(need(d.b, "--b"));
    const auto result = d.use_oracle ? oracle::tensor_oracle(a, b) : tensor(a, b);
    doc["terms"] = to_json(result);
    doc["dimension"] = to_json(dimension(result));
  } else if (d.op == "pieri") {
    const auto result = pieri(parse_weight(need(d.a, "--a")), d.k);
    doc["terms"] = to_json(result);
    doc["dimension"] = to_json(dimension(result));
  } else if (d.op == "exterior") {
    if (d.n < 1) throw Error(Errc::Parse, "--n is required for this op");
    if (d.k < 0) throw Error(Errc::OutOfRange, "--k must be nonnegative");
    const auto result = exterior_p(d.n, static_cast<std::size_t>(d.k));
    doc["terms"] = to_json(result);
    doc["dimension"] = to_json(dimension(result));
  } else if (d.op == "restrict") {
    const auto [left, right] = parse_pair(need(d.pair, "--pair"));
    const auto result = restrict_to_K(left, right);
    doc["terms"] = to_json(result);
    doc["dimension"] = to_json(dimension(result));
  } else if (d.op == "invariant") {
    if (d.weights.empty()) throw Error(Errc::Parse, "--w is required for this op");
    std::vector<GLWeight> ws;
    for (const auto& w : d.weights) ws.push_back(parse_weight(w));
    doc["value"] = invariant_dim(ws);
  } else if (d.op == "triple") {
    if (d.n < 1) throw Error(Errc::Parse, "--n is required for this op");
    if (d.k < 0) throw Error(Errc::OutOfRange, "--k must be nonnegative");
    doc["terms"] = to_json(triple_decompose(d.n, static_cast<std::size_t>(d.k)));
  } else if (d.op == "dim") {
    doc["dimension"] = to_json(weyl_dim(parse_weight(need(d.a, "--a"))));
  } else {
    throw Error(Errc::Parse, "unknown op " + d.op);
  }
  return {doc, 0};
}

struct VerifyArgs {
  std::string lemma;
  std::size_t n = 0;
  std::string mu;
  std::string nu;
  std::optional<Entry> j;
};

Outcome cmd_verify(const VerifyArgs& v) {
  std::optional<PureWeight> mu, nu;
  if (!v.mu.empty()) mu = parse_pure(v.mu);
  if (!v.nu.empty()) nu = parse_pure(v.nu);
  if (v.lemma == "3.4") {
    if (!mu || !nu) throw Error(Errc::Parse, "lemma 3.4 needs --mu and --nu");
    const auto [m, n2] = parse_both({v.mu, v.nu});
    const auto r = compat::verify_lemma_3_4(m, n2);
    Json doc{{"lemma", "3.4"}, {"n", m.n()}, {"cond_b", r.cond_b}, {"cond_c", r.cond_c},
             {"places", r.critical}, {"verdict", std::string(compat::to_string(r.verdict))}};
    return {doc, r.verdict == compat::Verdict::fail ? 1 : 0};
  }
  std::size_t n = v.n;
  if (n == 0 && mu) n = mu->n();
  if (n == 0) throw Error(Errc::Parse, "--n is required");
  const auto report = ktypes::verify_lemma(v.lemma, n, mu, nu, v.j);
  return {to_json(report), report.verdict == ktypes::LemmaVerdict::pass ? 0 : 1};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics for archimedean Rankin-Selberg periods"};
  app.name("rankin_lab");
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.fallthrough();

  PairArgs pair;
  std::optional<Entry> j;

  auto* critical = app.add_subcommand("critical", "critical places of pi_mu x pi_nu");
  add_pair(critical, pair);

  auto* compat_cmd = app.add_subcommand("compat", "compatibility windows and the critical-place check");
  add_pair(compat_cmd, pair);

  auto* vj = app.add_subcommand("vj", "case label, V_j and l(j)");
  add_pair(vj, pair);
  vj->add_option("--j", j, "integer j")->required();

  auto* kt = app.add_subcommand("ktypes", "distinguished K-types (j defaults to the central point)");
  add_pair(kt, pair);
  kt->add_option("--j", j, "integer j");

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "character ring operations");
  decompose->add_option("--op", dec.op, "tensor|pieri|exterior|restrict|invariant|triple|dim")
      ->required()
      ->check(CLI::IsMember({"tensor", "pieri", "exterior", "restrict", "invariant", "triple", "dim"}));
  decompose->add_option("--a", dec.a, "weight");
  decompose->add_option("--b", dec.b, "weight");
  decompose->add_option("--pair", dec.pair, "weight pair \"l;r\"");
  decompose->add_option("--w", dec.weights, "weight (repeatable)");
  decompose->add_option("--k", dec.k, "exterior degree or Sym power");
  decompose->add_option("--n", dec.n, "rank");
  decompose->add_flag("--oracle", dec.use_oracle, "use the convolution-peeling path for tensor");

  auto* coh = app.add_subcommand("coh", "cohomology profiles at the central point");
  add_pair(coh, pair);

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "check one multiplicity-one statement");
  verify->add_option("--lemma", ver.lemma, "3.4|4.4|4.6|4.7|4.8|4.9|4.10|4.11")->required();
  verify->add_option("--n", ver.n, "rank");
  verify->add_option("--mu", ver.mu, "pure weight");
  verify->add_option("--nu", ver.nu, "pure weight");
  verify->add_option("--j", ver.j, "integer j (default: central point)");

  sweep::Spec sw;
  std::vector<std::string> sweep_lemmas;
  std::optional<std::uint64_t> seed;
  auto* sweep_cmd = app.add_subcommand("sweep", "run verifiers over many instances");
  sweep_cmd->add_option("--lemma", sweep_lemmas, "lemma id(s), repeatable or comma separated")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--n-min", sw.n_min, "smallest rank")->check(CLI::Range(2, 32));
  sweep_cmd->add_option("--n-max", sw.n_max, "largest rank")->check(CLI::Range(2, 32));
  sweep_cmd->add_option("--samples", sw.samples, "random instances per rank");
  sweep_cmd->add_option("--seed", seed, "seed for randomized lemmas");
  sweep_cmd->add_flag("--timings", sw.timings, "add wall-clock per lemma (output no longer reproducible)");

  std::vector<const char*> argv{"rankin_lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    err << "rankin_lab: " << msg.substr(0, msg.find('\n')) << "\n";
    return 2;
  }

  try {
    Outcome result;
    if (critical->parsed()) {
      const auto [mu, nu] = parse_both(pair);
      result.doc = to_json(ltheory::critical_places(mu, nu));
    } else if (compat_cmd->parsed()) {
      result = cmd_compat(pair);
    } else if (vj->parsed()) {
      const auto [mu, nu] = parse_both(pair);
      result.doc = to_json(compat::classify_case(mu, nu, *j));
    } else if (kt->parsed()) {
      result = cmd_ktypes(pair, j);
    } else if (decompose->parsed()) {
      result = cmd_decompose(dec);
    } else if (coh->parsed()) {
      result = cmd_coh(pair);
    } else if (verify->parsed()) {
      result = cmd_verify(ver);
    } else if (sweep_cmd->parsed()) {
      if (sw.n_min > sw.n_max) throw Error(Errc::OutOfRange, "--n-min exceeds --n-max");
      sw.lemmas = sweep_lemmas;
      sw.seed = seed;
      const auto report = sweep::run(sw);
      result.doc = report.doc;
      result.code = report.failures || report.skipped ? 1 : 0;
    }
    out << json_io::render(result.doc, pretty);
    return result.code;
  } catch (const Error& e) {
    err << "rankin_lab: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rankin::cli
