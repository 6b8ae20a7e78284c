// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "simpord/io.hpp"
#include "simpord_cli.hpp"

using namespace simpord;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(SIMPORD_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, OrdCmp) {
  EXPECT_EQ(run({"ord", "cmp", "t(1,0)", "t(t(1,0))"}).out, "LESS\n");
  EXPECT_EQ(run({"ord", "cmp", "0", "1"}).out, "LESS\n");
  EXPECT_EQ(run({"ord", "cmp", "t(0,1)", "t(1)"}).out, "EQUAL\n");
  EXPECT_EQ(run({"ord", "cmp", "t(1)", "1"}).out, "GREATER\n");
  const auto bad = run({"ord", "cmp", "t(1", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("position 3"), std::string::npos);
}

TEST(Cli, TermCmp) {
  auto r = run({"term", "cmp", "--order", "theta", "--k", "1", "1", "f_0(1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "LESS\no(s) = 1\no(t) = t(1)\n");
  r = run({"term", "cmp", "--order", "theta", "--k", "1", "g(1,1)", "f_1(1,1)"});
  EXPECT_EQ(r.out, "LESS\no(s) = 1+1\no(t) = t(1,1)\n");
  r = run({"term", "cmp", "--order", "lpo", "--sig", sample("f0.json"), "--prec", "1,f_0", "1", "f_0(1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "LESS\n");
  EXPECT_EQ(run({"term", "cmp", "--order", "lpo", "--prec", "1,f_0", "1", "f_0(1)"}).code, 2);
  EXPECT_EQ(run({"term", "cmp", "--order", "theta", "--k", "1", "--sig", sample("sig.json"), "1", "1"}).code, 2);
  EXPECT_EQ(run({"term", "cmp", "--order", "theta", "--k", "1", "h", "1"}).code, 2);
}

TEST(Cli, Embed) {
  EXPECT_EQ(run({"embed", "--k", "1", "f_1(1,1)"}).out, "t(1,1)\n");
  EXPECT_EQ(run({"embed", "--k", "1", "g(1,1)"}).out, "1+1\n");
  const auto r = run({"embed", "--k", "0", "f_1(1,1)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownSymbol"), std::string::npos);
}

TEST(Cli, TermOf) {
  auto r = run({"termof", "--k", "1", "t(1,0)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "f_1(f_0(1),1)\ncheck: o(f_1(f_0(1),1)) = t(t(1),1) = plus(t(1,0)) OK\n");
  r = run({"termof", "--k", "1", "0"});
  EXPECT_EQ(r.out.substr(0, 2), "1\n");
  r = run({"termof", "--k", "0", "t(1,0)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("VectorTooLong"), std::string::npos);
}

TEST(Cli, CheckExitCodes) {
  auto r = run({"check", "--order", "theta", "--k", "1", "--conditions", "1,2,3", "--max-size", "4"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  r = run({"check", "--order", "lpo", "--sig", sample("sig.json"), "--prec", "a,g", "--conditions", "1,2", "--max-size",
           "5"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  r = run({"check", "--k", "1", "--conditions", "3", "--max-size", "4", "--extra-arg-edges", sample("planted_cycle.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness (arg-cycle)"), std::string::npos);
  r = run({"check", "--k", "1", "--conditions", "3", "--max-size", "4", "--budget", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"check", "--k", "1", "--conditions", "4"}).code, 2);
  EXPECT_EQ(run({"check", "--order", "lpo", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"check", "--k", "1", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("SIMPORD_BUDGET", "2", 1);
  const auto small = run({"check", "--k", "1", "--conditions", "3", "--max-size", "4"});
  ::setenv("SIMPORD_BUDGET", "lots", 1);
  const auto bad = run({"check", "--k", "1", "--conditions", "3", "--max-size", "4"});
  const auto flag = run({"check", "--k", "1", "--conditions", "3", "--max-size", "4", "--budget", "100000"});
  ::unsetenv("SIMPORD_BUDGET");
  EXPECT_EQ(small.code, 3);
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(flag.code, 0);
}

TEST(Cli, JsonMatchesTextAndSchemaShape) {
  const std::vector<std::string> base{"check", "--k", "1", "--conditions", "0,1,2,3", "--max-size", "4"};
  auto with_json = base;
  with_json.insert(with_json.end(), {"--format", "json"});
  const auto text = run(base);
  const auto json = run(with_json);
  EXPECT_EQ(text.code, json.code);
  const auto doc = nlohmann::json::parse(json.out);
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 4u);
  for (const auto& r : doc) {
    for (const char* key : {"condition", "status", "pairs_checked", "universe_size", "budget_used", "note"})
      EXPECT_TRUE(r.contains(key)) << key;
    std::string upper = r["status"].get<std::string>();
    for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    const std::string line = "condition " + std::to_string(r["condition"].get<int>()) + " (" +
                             condition_name(r["condition"].get<int>()) + "): " + upper + "\n";
    EXPECT_NE(text.out.find(line), std::string::npos) << line;
  }
  const auto planted =
      run({"check", "--k", "1", "--conditions", "3", "--max-size", "4", "--format", "json", "--extra-arg-edges",
           sample("planted_cycle.json")});
  const auto pd = nlohmann::json::parse(planted.out);
  EXPECT_EQ(pd[0]["status"], "fail");
  EXPECT_EQ(pd[0]["witness_kind"], "arg-cycle");
  EXPECT_EQ(pd[0]["witness"].size(), 2u);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"check", "--k", "1", "--conditions", "0", "--max-size", "5", "--budget", "3000",
                                      "--seed", "9"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, Wfp) {
  auto r = run({"wfp", sample("chain.edges")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "y: accessible rank 0\nx: accessible rank 1\n");
  r = run({"wfp", sample("two_cycle.edges")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("x: non-accessible"), std::string::npos);
  EXPECT_NE(r.out.find("y: non-accessible"), std::string::npos);
  r = run({"wfp", sample("empty.edges"), "--nodes", "p,q"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p: accessible rank 0\nq: accessible rank 0\n");
  r = run({"wfp", sample("mixed.edges"), "--budget", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"wfp", sample("bad.edges")}).code, 2);
  EXPECT_EQ(run({"wfp", sample("missing.edges")}).code, 2);
}

TEST(Cli, Enumerate) {
  auto r = run({"enum", "terms", "--k", "1", "--max-size", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  r = run({"enum", "terms", "--sig", sample("sig.json"), "--max-size", "5", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out).size(), 4u);
  r = run({"enum", "ords", "--max-nodes", "1", "--max-len", "1"});
  EXPECT_EQ(r.out, "0\n1\n");
  EXPECT_EQ(run({"enum", "terms", "--max-size", "3"}).code, 2);
}

TEST(Io, SignatureJson) {
  const auto sig = load_signature(sample("sig.json"));
  EXPECT_EQ(sig.size(), 2u);
  EXPECT_EQ(signature_from_json(signature_to_json(sig)), sig);
  EXPECT_THROW(signature_from_json(nlohmann::json::parse(R"({"symbols":[{"name":"a"}]})")), Error);
  EXPECT_THROW(signature_from_json(nlohmann::json::parse(R"({"symbols":[{"name":"a","arity":0},{"name":"a","arity":1}]})")),
               Error);
}

TEST(Io, EdgeList) {
  std::istringstream in("# header\ny x\nz   # isolated\n\n");
  const auto e = parse_edge_list(in);
  EXPECT_EQ(e.nodes, (std::vector<std::string>{"y", "x", "z"}));
  ASSERT_EQ(e.edges.size(), 1u);
  std::istringstream bad("a b c\n");
  EXPECT_THROW(parse_edge_list(bad), Error);
}
