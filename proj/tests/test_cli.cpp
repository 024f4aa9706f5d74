#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rankin/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rankin::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(RANKIN_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string> kPair = {"--mu", "5,-5;6,-4", "--nu", "5,-5;5,-5"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST(Cli, GoldenDocuments) {
  EXPECT_EQ(run(with({"critical"}, kPair)).out, fixture("worked_critical.json"));
  EXPECT_EQ(run(with({"compat"}, kPair)).out, fixture("worked_compat.json"));
  EXPECT_EQ(run(with({"vj", "--j", "0"}, kPair)).out, fixture("worked_vj.json"));
  EXPECT_EQ(run(with({"ktypes"}, kPair)).out, fixture("worked_ktypes.json"));
  EXPECT_EQ(run(with({"coh"}, kPair)).out, fixture("worked_coh.json"));
  EXPECT_EQ(run({"vj", "--mu", "0,0;0,0", "--nu", "0,0;0,0", "--j", "0"}).out, fixture("zero_vj.json"));
  const auto v = run({"verify", "--lemma", "4.6", "--n", "3"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, fixture("verify_4_6_n3.json"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run(with({"critical"}, kPair)).code, 0);
  const auto unknown = run(with({"critical", "--bogus"}, kPair));
  EXPECT_EQ(unknown.code, 2);
  EXPECT_TRUE(unknown.out.empty());
  EXPECT_EQ(std::count(unknown.err.begin(), unknown.err.end(), '\n'), 1);
  EXPECT_EQ(run({"critical", "--mu", "1,0;1,1", "--nu", "0,0;0,0"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run(with({"vj", "--j", "1"}, kPair)).code, 0);
  EXPECT_EQ(run(with({"ktypes", "--j", "1"}, kPair)).code, 2);
  EXPECT_EQ(run({"verify", "--lemma", "4.6", "--n", "7"}).code, 1);
  EXPECT_EQ(run({"sweep", "--lemma", "3.4"}).code, 2);
  EXPECT_EQ(run({"decompose", "--op", "frobnicate"}).code, 2);
}

TEST(Cli, DecomposeOps) {
  EXPECT_EQ(run({"decompose", "--op", "tensor", "--a", "1,0", "--b", "1,0"}).out,
            "{\"op\":\"tensor\",\"terms\":[{\"weight\":[2,0],\"mult\":1},{\"weight\":[1,1],\"mult\":1}],"
            "\"dimension\":4}\n");
  EXPECT_EQ(run({"decompose", "--op", "tensor", "--a", "3,1,-2", "--b", "2,0,-1"}).out,
            run({"decompose", "--op", "tensor", "--a", "3,1,-2", "--b", "2,0,-1", "--oracle"}).out);
  EXPECT_EQ(run({"decompose", "--op", "invariant", "--w", "1,-1", "--w", "1,-1", "--w", "1,-1"}).out,
            "{\"op\":\"invariant\",\"value\":1}\n");
  EXPECT_EQ(run({"decompose", "--op", "pieri", "--a", "0,0", "--k", "-2"}).out,
            "{\"op\":\"pieri\",\"terms\":[{\"weight\":[0,-2],\"mult\":1}],\"dimension\":3}\n");
  EXPECT_EQ(run({"decompose", "--op", "restrict", "--pair", "0,0;1,1"}).out,
            "{\"op\":\"restrict\",\"terms\":[{\"weight\":[-1,-1],\"mult\":1}],\"dimension\":1}\n");
  EXPECT_EQ(run({"decompose", "--op", "exterior", "--n", "2", "--k", "2"}).out,
            "{\"op\":\"exterior\",\"terms\":[{\"weight\":[1,-1],\"mult\":1}],\"dimension\":3}\n");
  EXPECT_EQ(run({"decompose", "--op", "dim", "--a", "1,0,0,-1"}).out, "{\"op\":\"dim\",\"dimension\":15}\n");
  const auto big = run({"decompose", "--op", "dim", "--a", "90000,60000,30000,0,-30000,-60000"});
  EXPECT_EQ(big.code, 0);
  EXPECT_NE(big.out.find("\"dimension\":\""), std::string::npos);
  const auto triple = nlohmann::json::parse(run({"decompose", "--op", "triple", "--n", "2", "--k", "3"}).out);
  EXPECT_FALSE(triple["terms"].empty());
}

TEST(Cli, PrettyIsTheSameDocument) {
  const auto compact = run(with({"ktypes"}, kPair)).out;
  const auto pretty = run(with({"ktypes", "--pretty"}, kPair)).out;
  EXPECT_NE(compact, pretty);
  EXPECT_EQ(nlohmann::ordered_json::parse(compact), nlohmann::ordered_json::parse(pretty));
}

TEST(Cli, SweepIsReproducible) {
  const std::vector<std::string> args = {"sweep", "--lemma", "3.4,4.10", "--n-min", "2", "--n-max", "3",
                                         "--samples", "40", "--seed", "7"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["verdict"], "PASS");
  EXPECT_EQ(doc["lemmas"][0]["instances"].size(), 80u);
  EXPECT_EQ(doc["lemmas"][0]["counts"]["FAIL"], 0);
  const auto other = run({"sweep", "--lemma", "3.4", "--n-min", "2", "--n-max", "2", "--samples", "40", "--seed", "8"});
  EXPECT_NE(other.out, run({"sweep", "--lemma", "3.4", "--n-min", "2", "--n-max", "2", "--samples", "40",
                            "--seed", "7"}).out);
}

TEST(Cli, SweepReportsSkippedNotPass) {
  const auto r = run({"sweep", "--lemma", "4.6", "--n-min", "6", "--n-max", "6"});
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["lemmas"][0]["counts"]["SKIPPED"], 1);
  EXPECT_EQ(doc["lemmas"][0]["counts"]["PASS"], 0);
  EXPECT_EQ(doc["verdict"], "SKIPPED");
}

TEST(Cli, NoFloatsAnywhere) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           with({"critical"}, kPair), with({"compat"}, kPair), with({"coh"}, kPair),
           {"critical", "--mu", "3,1;2,0", "--nu", "1,-2;3,0"}}) {
    const auto doc = nlohmann::json::parse(run(args).out);
    std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& j) {
      EXPECT_FALSE(j.is_number_float());
      if (j.is_structured())
        for (const auto& child : j) walk(child);
    };
    walk(doc);
  }
}
