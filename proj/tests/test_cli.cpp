#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sumcheck/cli.hpp"
#include "sumcheck/document.hpp"

using namespace sumcheck;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sumcheck_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

const char* kLinearTrue = R"({"H":[0,1],"modulus":5,"polynomial":[{"coeff":1,"exps":{"1":1}},{"coeff":1,"exps":{"2":1}}],"v":4})";
const char* kLinearFalse = R"({"H":[0,1],"modulus":5,"polynomial":[{"coeff":1,"exps":{"1":1}},{"coeff":1,"exps":{"2":1}}],"v":3})";

std::string bundled_witness() { return std::string(SUMCHECK_INSTANCES_DIR) + "/root_planting_witness.json"; }

}  // namespace

TEST(InstanceDocument, ParsesAndReducesResidues) {
  const auto doc = parse_instance_document(R"({"H":[6,-1],"modulus":5,"polynomial":[],"v":12,"schedule":[2,1]})");
  EXPECT_EQ(doc.instance.H[0].value(), 1u);
  EXPECT_EQ(doc.instance.H[1].value(), 4u);
  EXPECT_EQ(doc.instance.v.value(), 2u);
  EXPECT_TRUE(doc.instance.p.is_zero());
  EXPECT_EQ(doc.schedule, (std::vector<VarId>{2, 1}));
}

TEST(InstanceDocument, RoundTrip) {
  for (const char* text : {kLinearTrue, kLinearFalse}) {
    auto doc = parse_instance_document(text);
    EXPECT_EQ(parse_instance_document(serialize(doc)), doc);
    doc.schedule = std::vector<VarId>{2, 1, 5};
    EXPECT_EQ(parse_instance_document(serialize(doc)), doc);
    EXPECT_EQ(serialize(parse_instance_document(serialize(doc))), serialize(doc));
  }
}

TEST(InstanceDocument, BundledWitnessIsCanonical) {
  std::ifstream in(bundled_witness());
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(serialize(parse_instance_document(buf.str())), buf.str());
}

TEST(InstanceDocument, Errors) {
  auto message = [](const std::string& text) {
    try {
      parse_instance_document(text);
    } catch (const DocumentError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"H":[],"modulus":5,"polynomial":[],"v":0})").find("H must be nonempty"), std::string::npos);
  EXPECT_NE(message(R"({"H":[1,6],"modulus":5,"polynomial":[],"v":0})").find("duplicate"), std::string::npos);
  EXPECT_NE(message(R"({"H":[1],"modulus":6,"polynomial":[],"v":0})").find("prime"), std::string::npos);
  EXPECT_NE(message(R"({"H":[1],"modulus":5,"polynomial":[]})").find("\"v\""), std::string::npos);
  EXPECT_NE(message(R"({"H":[1],"modulus":5,"polynomial":[],"v":0,"schedule":[1,1]})").find("repeats"),
            std::string::npos);
  EXPECT_NE(message(R"({"H":[1], "modulus":5,)").find("at byte"), std::string::npos);
  EXPECT_NE(message("[1,2]").find("object"), std::string::npos);
}

TEST_F(CliTest, RunAcceptsTrueClaim) {
  const auto r = run({"run", write("t.json", kLinearTrue)});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict   accept"), std::string::npos);
}

TEST_F(CliTest, RunRejectsFalseClaimInRoundOne) {
  const auto r = run({"run", write("f.json", kLinearFalse), "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("accept"), false);
  EXPECT_EQ(j.at("transcript").at("first_failure").at("check"), "evaluation");
  EXPECT_EQ(j.at("transcript").at("first_failure").at("round"), 1);
}

TEST_F(CliTest, RunHonoursScheduleAndProver) {
  const auto path = write("t.json", kLinearTrue);
  const auto r = run({"run", path, "--schedule", "2,1", "--prover", "random:3", "--seed", "9", "--format", "json"});
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("schedule"), Json::parse("[2,1]"));
  EXPECT_EQ(j.at("prover"), "random:3");
  EXPECT_EQ(run({"run", path, "--seed", "9"}).out, run({"run", path, "--seed", "9"}).out);
}

TEST_F(CliTest, MalformedDocumentIsUsageError) {
  const auto r = run({"run", write("bad.json", R"({"H":[],"modulus":5,"polynomial":[],"v":0})")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("H must be nonempty"), std::string::npos);
  const auto syntax = run({"membership", write("syntax.json", "{\"H\": [0,")});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find("at byte"), std::string::npos);
  EXPECT_EQ(run({"run", (dir_ / "missing.json").string()}).code, 2);
}

TEST_F(CliTest, PreconditionViolationIsNamed) {
  const auto r = run({"run", write("t.json", kLinearTrue), "--schedule", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("precondition"), std::string::npos);
}

TEST_F(CliTest, Membership) {
  EXPECT_EQ(run({"membership", write("t.json", kLinearTrue)}).code, 0);
  const auto r = run({"membership", write("f.json", kLinearFalse), "--format", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out).at("sum"), 4);
}

TEST(Cli, VerifyBoundsOnBundledWitness) {
  const auto r = run({"verify-bounds", bundled_witness(), "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("bound"), "1/5");
  bool found = false;
  for (const auto& row : j.at("strategies")) {
    if (row.at("strategy") == "root-plant") {
      found = true;
      EXPECT_EQ(row.at("probability").at("value"), "1/5");
      EXPECT_EQ(row.at("pass"), true);
    }
  }
  EXPECT_TRUE(found);
  const auto text = run({"verify-bounds", bundled_witness()});
  EXPECT_NE(text.out.find("1/5  [1 of 5 runs]"), std::string::npos);
}

TEST(Cli, VerifyBoundsGeneratedValid) {
  const auto r = run({"verify-bounds", "--gen", "valid", "--modulus", "7", "--arity", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("strategies")[0].at("probability").at("value"), "1");
  EXPECT_EQ(j.at("strategies")[0].at("verdict"), "completeness OK");
}

TEST(Cli, VerifyBoundsMonteCarloReproducible) {
  const std::vector<std::string> args{"verify-bounds", bundled_witness(), "--mode", "mc", "--trials", "1000",
                                      "--seed", "7", "--format", "json"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyBoundsNeedsOneSource) {
  EXPECT_EQ(run({"verify-bounds"}).code, 2);
  EXPECT_EQ(run({"verify-bounds", bundled_witness(), "--gen", "valid"}).code, 2);
  EXPECT_EQ(run({"verify-bounds", "--gen", "maybe"}).code, 2);
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("SUMCHECK_BUDGET", "10", 1);
  const auto r = run({"verify-bounds", "--gen", "false", "--modulus", "13", "--arity", "3"});
  ::unsetenv("SUMCHECK_BUDGET");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, ConformanceSingleCase) {
  const auto r = run({"conformance", "--cases", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("laws").size(), 14u);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_EQ(run({"conformance", "--law", "roots", "--law", "sum_merge", "--cases", "20"}).code, 0);
  EXPECT_EQ(run({"conformance", "--law", "bogus"}).code, 2);
}

TEST_F(CliTest, GenWritesParsableDocuments) {
  const auto out = (dir_ / "gen.json").string();
  EXPECT_EQ(run({"gen", "false", "--modulus", "11", "--arity", "3", "--gen-seed", "5", "-o", out}).code, 0);
  EXPECT_EQ(run({"membership", out}).code, 1);
  const auto a = run({"gen", "valid", "--gen-seed", "5"});
  EXPECT_EQ(a.out, run({"gen", "valid", "--gen-seed", "5"}).out);
  EXPECT_NO_THROW(parse_instance_document(a.out));
  EXPECT_EQ(run({"gen", "valid", "--modulus", "9"}).code, 2);
}

TEST(Cli, BenchSingleRow) {
  const auto r = run({"bench", "--sizes", "5:2:2", "--repeats", "2", "--runs", "10", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j.at("rows").size(), 1u);
  EXPECT_TRUE(j.at("rows")[0].at("protocol_runs_per_s").contains("sd"));
  const auto text = run({"bench", "--sizes", "5:2:2,7:2:3", "--repeats", "2", "--runs", "10"});
  EXPECT_EQ(std::count(text.out.begin(), text.out.end(), '\n'), 3);
  EXPECT_EQ(run({"bench", "--sizes", "5-2-2"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"run"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
