#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "flopcalc/cli.hpp"
#include "json.hpp"

using namespace flopcalc;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliNumber, Examples) {
  EXPECT_EQ(run({"number", "rp:4", "4"}).out, "1\n");
  EXPECT_EQ(run({"number", "rp:2,2", "1,1,2"}).out, "0\n");
  EXPECT_EQ(run({"number", "rp:3", "1,2"}).out, "0\n");
  EXPECT_EQ(run({"number", "hyp:2,4", "5", "--power-sum"}).out, "1\n");
  EXPECT_EQ(run({"number", "bundle:base=rp:2,1;A=g1,g2;B=0,0", "6", "-s"}).out, "1\n");
  EXPECT_EQ(run({"number", "rp:4", "4"}).code, kPass);
}

TEST(CliNumber, Json) {
  const CliRun r = run({"number", "rp:2,2", "2,1,1", "--format", "json"});
  ASSERT_EQ(r.code, kPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["space"], "rp:2,2");
  EXPECT_EQ(j["partition"], nlohmann::json::array({2, 1, 1}));
  EXPECT_EQ(j["kind"], "w");
  EXPECT_EQ(j["value"], 0);
}

TEST(CliNumber, ErrorsAndExitCodes) {
  CliRun r = run({"number", "rp:2,x", "1,1"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("'x'"), std::string::npos) << r.err;
  r = run({"number", "rp:4", "3"});
  EXPECT_EQ(r.code, kSemanticError);
  EXPECT_NE(r.err.find("weight"), std::string::npos) << r.err;
  EXPECT_EQ(run({"number", "rp:4", "a,b"}).code, kUsageError);
  EXPECT_EQ(run({"number", "rp:4"}).code, kUsageError);
  EXPECT_EQ(run({"number", "hyp:2,4", "3,2", "-s"}).code, kSemanticError);
  EXPECT_EQ(run({}).code, kUsageError);
  EXPECT_EQ(run({"bogus"}).code, kUsageError);
  EXPECT_EQ(run({"--help"}).code, kPass);
}

TEST(CliVerify, ClaimsPass) {
  for (const auto& [claim, dim] : std::vector<std::pair<std::string, std::string>>{
           {"prop2", "8"}, {"prop3", "14"}, {"lemma4", "10"}, {"cor6", "16"}, {"prop7", "16"},
           {"prop8", "8"}, {"theorem1", "10"}, {"generators", "14"}}) {
    const CliRun r = run({"verify", claim, "--max-dim", dim});
    EXPECT_EQ(r.code, kPass) << claim << "\n" << r.out << r.err;
    EXPECT_NE(r.out.find("result: pass"), std::string::npos) << claim;
    EXPECT_NE(r.out.find("statement: "), std::string::npos) << claim;
  }
}

TEST(CliVerify, Theorem1ListsDimensions) {
  const CliRun r = run({"verify", "theorem1", "--max-dim", "8"});
  ASSERT_EQ(r.code, kPass) << r.out;
  for (const char* needle : {"n=1 dimension=0", "n=2 dimension=1", "n=4 dimension=2", "n=6 dimension=2", "n=8 dimension=3"}) {
    EXPECT_NE(r.out.find(needle), std::string::npos) << needle;
  }
}

TEST(CliVerify, UnknownClaimAndBadBounds) {
  CliRun r = run({"verify", "prop9"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("unknown claim"), std::string::npos);
  EXPECT_EQ(run({"verify", "theorem1", "--max-dim", "30"}).code, kSemanticError);
  EXPECT_EQ(run({"verify", "theorem1", "--config", "/nonexistent/cfg.json"}).code, kUsageError);
  EXPECT_EQ(run({"verify", "theorem1", "--format", "yaml"}).code, kUsageError);
}

TEST(CliVerify, FailurePrintsReplayableWitness) {
  const std::string path = ::testing::TempDir() + "flopcalc_tiny_family.json";
  {
    std::ofstream f(path);
    f << R"({"max_base_factors": 0, "alphabet": ["0"]})";
  }
  const CliRun r = run({"verify", "theorem1", "--max-dim", "5", "--config", path});
  EXPECT_EQ(r.code, kVerifiedFalse) << r.out;
  EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);
  const auto at = r.out.find("witness: flopcalc number '");
  ASSERT_NE(at, std::string::npos) << r.out;
  // Replay every listed number; their sum is 1.
  std::istringstream lines(r.out.substr(at));
  std::string line;
  bool total = false;
  int replayed = 0;
  while (std::getline(lines, line)) {
    const auto q1 = line.find('\''), q2 = line.rfind('\'');
    if (q1 == std::string::npos || line.find("flopcalc number") == std::string::npos) break;
    const std::string spec = line.substr(q1 + 1, q2 - q1 - 1);
    std::istringstream rest(line.substr(q2 + 1));
    std::string part, hash, word, expected;
    rest >> part >> hash >> word >> expected;
    const CliRun replay = run({"number", spec, part});
    ASSERT_EQ(replay.code, kPass);
    EXPECT_EQ(replay.out, expected + "\n");
    total ^= replay.out == "1\n";
    ++replayed;
  }
  EXPECT_GT(replayed, 0);
  EXPECT_TRUE(total);
  std::remove(path.c_str());
}

TEST(CliVerify, JsonReport) {
  const CliRun r = run({"verify", "prop7", "--format", "json"});
  ASSERT_EQ(r.code, kPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["claim"], "prop7");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["checked"], 2);
  EXPECT_TRUE(j["witness"].is_null());
}

TEST(CliVerify, DeterministicOutput) {
  const auto a = run({"verify", "prop2", "--max-dim", "7", "--seed", "5", "--jobs", "3"});
  const auto b = run({"verify", "prop2", "--max-dim", "7", "--seed", "5", "--jobs", "1"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, kPass);
}

TEST(CliTable, Intersection) {
  const CliRun r = run({"table", "intersection", "8", "--format", "csv"});
  ASSERT_EQ(r.code, kPass);
  EXPECT_EQ(r.out, "4i\\4j,0,4,8\n0,1,1,1\n4,0,1,0\n8,0,0,1\n");
  const auto j = nlohmann::json::parse(run({"table", "intersection", "8", "--format", "json"}).out);
  EXPECT_EQ(j["matrix"], nlohmann::json::parse("[[1,1,1],[0,1,0],[0,0,1]]"));
  EXPECT_EQ(run({"table", "intersection", "7"}).code, kSemanticError);
}

TEST(CliTable, QuotientBasisAndMoBasis) {
  const CliRun q = run({"table", "quotient-basis", "12"});
  ASSERT_EQ(q.code, kPass);
  EXPECT_EQ(q.out,
            "4j=0  J=2,2,2,2,2,2  rp:2,2,2,2,2,2\n"
            "4j=4  J=4,2,2,2,2  rp:4,2,2,2,2\n"
            "4j=8  J=8,2,2  rp:8,2,2\n"
            "4j=12  J=8,4  rp:8,4\n"
            "independent: yes\n");
  const CliRun m = run({"table", "mo-basis", "8", "--format", "csv"});
  ASSERT_EQ(m.code, kPass);
  EXPECT_EQ(m.out,
            "degrees,space\n8,rp:8\n\"6,2\",rp:6*rp:2\n\"4,4\",rp:4*rp:4\n\"4,2,2\",rp:4*rp:2*rp:2\n"
            "\"2,2,2,2\",rp:2*rp:2*rp:2*rp:2\n");
  const auto j = nlohmann::json::parse(run({"table", "mo-basis", "8", "--format", "json"}).out);
  EXPECT_EQ(j["basis"].size(), 5u);
}

TEST(CliTable, FlopIdealCsvRowsArePartitions) {
  const CliRun r = run({"table", "flop-ideal", "5", "--format", "csv"});
  ASSERT_EQ(r.code, kPass);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("partition,c0", 0), 0u);
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, partitions(5).size());
}

TEST(CliTable, UnknownKind) {
  const CliRun r = run({"table", "eigenvalues", "4"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("unknown table kind"), std::string::npos);
}
