#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "descent/cli.hpp"
#include "json.hpp"

using namespace descent;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "rdp-descent");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Invocation& r) { return nlohmann::json::parse(r.out); }

std::string status_of(const nlohmann::json& j, const std::string& id) {
  for (const auto& c : j["criteria"]) {
    if (c["id"] == id) return c["status"];
  }
  return "absent";
}

}  // namespace

TEST(Analyze, NondescentExample) {
  Invocation r = run({"analyze", "--char", "2", "--vars", "x,y,z", "--poly", "z^2+x^3+y^5+y^3*z",
               "--json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  auto j = json_of(r);
  EXPECT_EQ(j["verdict"]["outcome"], "BLOCKED");
  EXPECT_EQ(status_of(j, "LENGTH_FORMULA"), "FAIL");
  for (const auto& c : j["criteria"]) {
    if (c["id"] == "LENGTH_FORMULA") {
      EXPECT_EQ(c["witness"]["len_J"], 10);
      EXPECT_EQ(c["witness"]["len_Jp"], 44);
    }
  }
  EXPECT_EQ(j["input"]["catalog"], "E_8^3");
}

TEST(Analyze, ShapeWitnessDescends) {
  Invocation r = run({"analyze", "--char", "2", "--vars", "x,y,z", "--poly", "z^2+x^3+y^5", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(status_of(j, "SHAPE_WITNESS"), "PASS");
  EXPECT_EQ(j["verdict"]["outcome"], "DESCENDS");
}

TEST(Analyze, NonIsolatedIsUndetermined) {
  Invocation r = run({"analyze", "--char", "2", "--vars", "x,y,z", "--poly", "x*y", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(status_of(j, "TJURINA_P_DIVISIBLE"), "NOT_APPLICABLE");
  EXPECT_EQ(status_of(j, "LENGTH_FORMULA"), "NOT_APPLICABLE");
  EXPECT_EQ(j["verdict"]["outcome"], "UNDETERMINED");
}

TEST(Analyze, JsonIsDeterministic) {
  std::vector<std::string> args{"analyze", "--char", "3", "--poly", "z^2+x^3+y^5+x^2*y^2",
                                "--json"};
  Invocation a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json_of(a)["timings_ms"], nlohmann::json::object());
}

TEST(Analyze, TimingsOnRequest) {
  Invocation r = run({"analyze", "--char", "2", "--poly", "z^2+x^3+y^5", "--json", "--timings"});
  EXPECT_FALSE(json_of(r)["timings_ms"].empty());
}

TEST(Analyze, KeyOrderFollowsSchema) {
  Invocation r = run({"analyze", "--char", "2", "--poly", "z^2+x^3+y^5", "--json"});
  auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"input", "criteria", "verdict", "timings_ms"}));
}

TEST(Analyze, E60NoteIsShown) {
  Invocation r = run({"analyze", "--char", "2", "--poly", "z^2+x^3+y^2*z"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("note"), std::string::npos);
  EXPECT_NE(r.out.find("BLOCKED"), std::string::npos);
}

TEST(Analyze, CatalogFactForOddD0) {
  Invocation r = run({"analyze", "--char", "2", "--poly", "z^2+x^2*y+y^4*z", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["verdict"]["outcome"], "DESCENDS");
  EXPECT_EQ(status_of(j, "SHAPE_WITNESS"), "FAIL");
  EXPECT_TRUE(j["verdict"].contains("catalog_fact"));
}

TEST(Analyze, ParseErrorReportsPosition) {
  Invocation r = run({"analyze", "--char", "2", "--poly", "z^2+x^3+y^5+y^3z"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 15"), std::string::npos) << r.err;
  Invocation j = run({"analyze", "--char", "2", "--poly", "z^2+q", "--json"});
  EXPECT_EQ(j.code, 2);
  auto e = nlohmann::json::parse(j.err);
  EXPECT_EQ(e["error"]["kind"], "parse");
  EXPECT_EQ(e["error"]["position"], 4);
}

TEST(Analyze, UsageErrors) {
  EXPECT_EQ(run({"analyze", "--char", "4", "--poly", "x^2"}).code, 2);
  EXPECT_EQ(run({"analyze", "--char", "2"}).code, 2);
  EXPECT_EQ(run({"analyze", "--char", "2", "--poly", "x+1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze", "--char", "2", "--vars", "x,x", "--poly", "x^2"}).code, 2);
  for (const auto& a : {std::vector<std::string>{"analyze", "--char", "4", "--poly", "x"}}) {
    EXPECT_FALSE(run(a).err.empty());
  }
}

TEST(Analyze, StepCapGivesExitThree) {
  Invocation r = run({"analyze", "--char", "2", "--poly", "z^2+x^3+y^5+y^3*z", "--step-cap", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST(Analyze, OtherVariableCount) {
  Invocation r = run({"analyze", "--char", "2", "--vars", "x,y", "--poly", "y^2+x^3", "--json"});
  auto j = json_of(r);
  EXPECT_EQ(j["criteria"].size(), 3u);
  EXPECT_EQ(j["input"]["catalog"], nullptr);
}

TEST(Analyze, HelpExitsZero) {
  Invocation r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

TEST(Tables, CharTwoMatches) {
  Invocation r = run({"tables", "--char", "2"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  for (const char* cell : {"8,32", "6,28", "14,56", "12,48", "10,40", "8,35", "16,64", "10,44",
                           "8,37"}) {
    EXPECT_NE(r.out.find(cell), std::string::npos) << cell;
  }
  EXPECT_NE(r.out.find("0 differences"), std::string::npos);
}

TEST(Tables, CharThreeAndFiveMatch) {
  Invocation r3 = run({"tables", "--char", "3", "--json"});
  EXPECT_EQ(r3.code, 0);
  EXPECT_TRUE(json_of(r3)["differences"].empty());
  Invocation r5 = run({"tables", "--char", "5", "--max-n", "6"});
  EXPECT_EQ(r5.code, 0);
  EXPECT_NE(r5.out.find("6,173"), std::string::npos);
  EXPECT_NE(r5.out.find("8,239"), std::string::npos);
}

TEST(Tables, OnlySmallCharacteristics) { EXPECT_EQ(run({"tables", "--char", "7"}).code, 2); }

TEST(Tables, MismatchExitsOne) {
  auto dir = ::testing::TempDir();
  std::string path = dir + "/bad_catalog.txt";
  {
    std::ofstream f(path);
    f << "E;8;3;2;z^2+x^3+y^5+y^3*z;0:1;1;10;40;yes;BLOCKED;altered\n";
  }
  Invocation r = run({"tables", "--char", "2", "--max-n", "1", "--catalog", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("diff E_8^3 lenJp: computed 44, stored 40"), std::string::npos) << r.out;
  EXPECT_FALSE(r.err.empty());
}

TEST(Classify, CharTwoList) {
  Invocation r = run({"classify", "--char", "2", "--max-n", "12", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = json_of(r);
  std::vector<std::string> desc = j["descending"];
  const std::vector<std::string> expected{
      "A_1",   "A_3",   "A_7",    "D_4^0",  "D_5^0",  "D_6^0", "D_7^0", "D_8^0",
      "D_9^0", "D_10^0", "D_11^0", "D_12^0", "E_7^0", "E_8^0"};
  EXPECT_EQ(desc, expected);
  ASSERT_EQ(j["notes"].size(), 1u);
  EXPECT_NE(j["notes"][0].get<std::string>().find("E_6^0"), std::string::npos);
}

TEST(Classify, CharThreeAndFive) {
  auto j3 = json_of(run({"classify", "--char", "3", "--json"}));
  EXPECT_EQ(j3["descending"], nlohmann::json({"A_2", "A_8", "E_6^0", "E_8^0"}));
  auto j5 = json_of(run({"classify", "--char", "5", "--json"}));
  EXPECT_EQ(j5["descending"], nlohmann::json({"A_4", "E_8^0"}));
}

TEST(Oracle, Examples) {
  Invocation a = run({"oracle", "--char", "2", "--poly", "z^2+x^3+y^5+y^3*z", "--ideal", "jacobian"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "10 = 10\n");
  Invocation b = run({"oracle", "--char", "2", "--gens", "x,y,z"});
  EXPECT_EQ(b.out, "1 = 1\n");
  Invocation c = run({"oracle", "--char", "2", "--poly", "z^2+x^3+y^2*z", "--ideal", "bracket"});
  EXPECT_EQ(c.out, "32 = 32\n");
}

TEST(Oracle, UnstableReportsCap) {
  Invocation r = run({"oracle", "--char", "2", "--gens", "x^40,y,z", "--degree-cap", "16"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("UNSTABLE (degree cap 16 reached)"), std::string::npos) << r.out;
  Invocation inf = run({"oracle", "--char", "2", "--gens", "x,y", "--degree-cap", "12", "--json"});
  EXPECT_EQ(inf.code, 0);
  EXPECT_EQ(json_of(inf)["engine"], "INFINITE");
  EXPECT_EQ(json_of(inf)["oracle"], "UNSTABLE");
}

TEST(Oracle, UsageErrors) {
  EXPECT_EQ(run({"oracle", "--char", "2"}).code, 2);
  EXPECT_EQ(run({"oracle", "--char", "2", "--ideal", "jacobian"}).code, 2);
  EXPECT_EQ(run({"oracle", "--char", "2", "--poly", "x^2", "--ideal", "other"}).code, 2);
  EXPECT_EQ(run({"oracle", "--char", "2", "--gens", "x", "--degree-cap", "300"}).code, 2);
}
