// Copyright 2026 The ivfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ivfg/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "ivfg/document.hpp"
#include "support/fixtures.hpp"

namespace ivfg {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ivfg");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ivfg_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string put(const std::string& name, const IvfGraph& g) {
    const fs::path p = dir_ / name;
    write_file(p, serialize(g));
    return p.string();
  }
  std::string put_text(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    write_file(p, text);
    return p.string();
  }

  fs::path dir_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST_F(CliTest, ReportOnTriangle) {
  const Result r = invoke({"report", put("t.txt", testing::triangle())});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "delta(a,b) = (0.2000, 1.0000)\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "radius = (0.2000, 1.0000)\n"));
  EXPECT_TRUE(contains(r.out, "diameter = (0.3000, 1.1000)\n"));
  EXPECT_TRUE(contains(r.out, "e(b) = (0.3000, 1.0000)\n"));
}

TEST_F(CliTest, StatusOnAlternatingC4) {
  const Result r = invoke({"status", put("c4.txt", testing::alternating_c4())});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "self-median: yes\n"));
  for (const char* v : {"v1", "v2", "v3", "v4"}) {
    EXPECT_TRUE(contains(r.out, "S(" + std::string(v) + ") = (0.8000, 2.4000)\n"));
  }
}

TEST_F(CliTest, StatusOnTriangleReportsEmptyMedian) {
  const Result r = invoke({"status", put("t.txt", testing::triangle())});
  EXPECT_TRUE(contains(r.out, "median: (none)\n"));
  EXPECT_TRUE(contains(r.out, "mu-minimizers: a\n"));
  EXPECT_TRUE(contains(r.out, "self-median: no\n"));
}

TEST_F(CliTest, IsoExitCodes) {
  IvfGraph renamed;
  renamed.set_vertex("p", testing::iv("0.3", "0.6"))
      .set_vertex("q", testing::iv("0.4", "0.7"))
      .set_vertex("r", testing::iv("0.5", "0.8"))
      .set_edge("p", "q", testing::iv("0.2", "0.5"))
      .set_edge("q", "r", testing::iv("0.3", "0.6"))
      .set_edge("p", "r", testing::iv("0.1", "0.4"));
  const std::string t = put("t.txt", testing::triangle());
  const Result found = invoke({"iso", t, put("r.txt", renamed), "--kind", "iso"});
  EXPECT_EQ(found.code, cli::kOk);
  EXPECT_EQ(found.out, "kind: iso\na -> p\nb -> q\nc -> r\n");

  IvfGraph reweighted = testing::triangle();
  reweighted.set_edge("a", "b", testing::iv("0.1", "0.5"));
  const Result missing = invoke({"iso", t, put("w.txt", reweighted), "--kind", "iso"});
  EXPECT_EQ(missing.code, cli::kNegative);
  EXPECT_TRUE(contains(missing.out, "NotFound"));
}

TEST_F(CliTest, ValidateExitCodes) {
  EXPECT_EQ(invoke({"validate", put("t.txt", testing::triangle())}).out, "valid\n");
  const Result bad = invoke({"validate", put_text("bad.txt", "v a 0.6 0.4\n")});
  EXPECT_EQ(bad.code, cli::kNegative);
  EXPECT_TRUE(contains(bad.out, "invalid: 1 violation(s)"));
  EXPECT_EQ(invoke({"validate", put_text("syntax.txt", "v a 0.30001 0.6\n")}).code,
            cli::kInputError);
}

TEST_F(CliTest, AntipodalOutputValidates) {
  const std::string out = (dir_ / "a.txt").string();
  const Result r = invoke({"antipodal", put("p.txt", testing::short_path()), "-o", out});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "# diameter = (0.2000, 0.4000)\n"));
  EXPECT_TRUE(contains(r.out, "# pair x z non-neighbor\n"));
  const IvfGraph a = parse(read_file(out));
  EXPECT_EQ(a.edge("x", "z"), testing::iv("0.5", "0.5"));
  EXPECT_EQ(invoke({"validate", out}).code, cli::kOk);
}

TEST_F(CliTest, ComplementRoundTrip) {
  const std::string once = (dir_ / "c1.txt").string();
  const std::string twice = (dir_ / "c2.txt").string();
  EXPECT_EQ(invoke({"complement", put("t.txt", testing::triangle()), "-o", once}).code, cli::kOk);
  EXPECT_EQ(invoke({"complement", once, "-o", twice}).code, cli::kOk);
  EXPECT_EQ(parse(read_file(twice)), testing::triangle());
}

TEST_F(CliTest, GenerateMatchesLibrary) {
  const Result r = invoke({"gen", "--kind", "even-cycle-alternating", "-n", "4", "--vertex",
                           "0.5,0.5", "--edge", "[0.1,0.2]", "--edge", "0.3,0.4"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(parse(r.out), testing::alternating_c4());
  EXPECT_EQ(invoke({"gen", "--kind", "even-cycle-alternating", "-n", "3", "--vertex", "0.5,0.5",
                    "--edge", "0.1,0.2", "--edge", "0.3,0.4"})
                .code,
            cli::kInputError);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, cli::kInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"report"}).code, cli::kInputError);
  const Result missing = invoke({"report", (dir_ / "nope.txt").string()});
  EXPECT_EQ(missing.code, cli::kInputError);
  EXPECT_TRUE(contains(missing.err, "error:"));
  IvfGraph split = testing::triangle();
  split.set_vertex("d", testing::iv("0.1", "0.2"));
  EXPECT_EQ(invoke({"report", put("split.txt", split)}).code, cli::kInputError);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::string t = put("t.txt", testing::triangle());
  for (const char* cmd : {"report", "status", "antipodal"}) {
    EXPECT_EQ(invoke({cmd, t}).out, invoke({cmd, t}).out);
  }
}

TEST(ParseIntervalTest, Forms) {
  EXPECT_EQ(cli::parse_interval("0.3,0.6"), testing::iv("0.3", "0.6"));
  EXPECT_EQ(cli::parse_interval("[0.3,0.6]"), testing::iv("0.3", "0.6"));
  EXPECT_FALSE(cli::parse_interval("0.3").has_value());
  EXPECT_FALSE(cli::parse_interval("[0.3,0.6").has_value());
}

}  // namespace
}  // namespace ivfg
