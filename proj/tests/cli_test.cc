// Copyright 2026 The pathilp Authors
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

#include "pathilp/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "pathilp/reduction.h"

namespace pathilp {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pathilp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }

  Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

constexpr const char* kOr = "p cnf 2 1\n1 2 0\n";
constexpr const char* kContradiction = "p cnf 1 2\n1 0\n-1 0\n";

TEST_F(CliTest, ReduceThenValidate) {
  std::string cnf = file("f.cnf", kOr);
  Outcome reduced = run_cli({"reduce", cnf, "-o", path("f.pilp")});
  ASSERT_EQ(reduced.code, kExitOk) << reduced.err;
  EXPECT_EQ(reduced.out, "rows=12 cols=21 max_abs_coeff=8 trivial=false\n");
  Outcome valid = run_cli({"validate", path("f.pilp")});
  EXPECT_EQ(valid.code, kExitOk);
  EXPECT_EQ(valid.out, "is_path_like=true max_abs_coeff=8 num_rows=12 num_cols=21\n");
}

TEST_F(CliTest, ReduceToStdoutMatchesInMemoryInstance) {
  Outcome reduced = run_cli({"reduce", "-"}, "p cnf 3 2\n1 -2 3 0\n-1 2 0\n");
  ASSERT_EQ(reduced.code, kExitOk);
  Reduction expected = reduce(normalize(parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 0\n")));
  EXPECT_EQ(deserialize(reduced.out), expected.instance);
}

TEST_F(CliTest, ValidateRejectsGap) {
  std::string pilp = file("gap.pilp",
                          "PATHILP v1\nvars 1\nvar 0 c 0 1\nrows 3\n"
                          "row 0 0 1 0 1\nrow 1 0 0\nrow 2 0 1 0 1\n");
  Outcome valid = run_cli({"validate", pilp});
  EXPECT_EQ(valid.code, kExitNegative);
  EXPECT_EQ(valid.out,
            "is_path_like=false max_abs_coeff=1 num_rows=3 num_cols=1 offending_column=0\n");
  EXPECT_EQ(run_cli({"solve", pilp}).code, kExitInput);
}

TEST_F(CliTest, RoundtripOr) {
  Outcome result = run_cli({"roundtrip", file("f.cnf", kOr)});
  EXPECT_EQ(result.code, kExitOk);
  EXPECT_EQ(result.out, "equal=true sat_count=3 ip_set_size=3 trivial=false\n");
}

TEST_F(CliTest, RoundtripTrivialAndUnsat) {
  Outcome trivial = run_cli({"roundtrip", "-"}, "p cnf 1 1\n-1 0\n");
  EXPECT_EQ(trivial.code, kExitOk);
  EXPECT_EQ(trivial.out, "equal=true sat_count=1 ip_set_size=0 trivial=true\n");
  Outcome unsat = run_cli({"roundtrip", "-"}, kContradiction);
  EXPECT_EQ(unsat.code, kExitOk);
  EXPECT_EQ(unsat.out, "equal=true sat_count=0 ip_set_size=0 trivial=false\n");
}

TEST_F(CliTest, RoundtripRefusesNoFinalRestore) {
  Outcome result = run_cli({"roundtrip", "--no-final-restore", file("f.cnf", kOr)});
  EXPECT_EQ(result.code, kExitUsage);
  EXPECT_TRUE(result.out.empty());
  EXPECT_FALSE(result.err.empty());
}

TEST_F(CliTest, SolveInfeasibleReduction) {
  ASSERT_EQ(run_cli({"reduce", file("u.cnf", kContradiction), "-o", path("u.pilp")}).code, kExitOk);
  Outcome solved = run_cli({"solve", path("u.pilp")});
  EXPECT_EQ(solved.code, kExitNegative);
  EXPECT_EQ(solved.out, "status=infeasible\n");
}

TEST_F(CliTest, SolveResourceExceeded) {
  ASSERT_EQ(run_cli({"reduce", file("f.cnf", kOr), "-o", path("f.pilp")}).code, kExitOk);
  Outcome solved = run_cli({"solve", "--max-states", "1", path("f.pilp")});
  EXPECT_EQ(solved.code, kExitResource);
  EXPECT_EQ(solved.out, "status=resource_exceeded\n");
}

TEST_F(CliTest, SolveWithObjective) {
  std::string pilp = file("p.pilp",
                          "PATHILP v1\nvars 2\nvar 0 x0 1 3\nvar 1 x1 0 2\nrows 1\n"
                          "row 0 0 2 0 1 1 -1\n");
  std::string obj = file("obj.txt", "1\n0\n");
  Outcome solved = run_cli({"solve", pilp, "--objective", obj});
  EXPECT_EQ(solved.code, kExitOk);
  EXPECT_EQ(solved.out, "status=feasible objective_value=1 witness=1,1\n");
  EXPECT_EQ(run_cli({"solve", pilp, "--objective", file("bad.txt", "1\n")}).code, kExitInput);
}

TEST_F(CliTest, Extract) {
  ASSERT_EQ(run_cli({"reduce", file("f.cnf", kOr), "-o", path("f.pilp")}).code, kExitOk);
  Outcome solved = run_cli({"extract", path("f.pilp")});
  EXPECT_EQ(solved.code, kExitOk);
  EXPECT_EQ(solved.out, "status=feasible trivial=false final_x=1 mask=1 assignment=1,-2\n");
  Outcome given = run_cli({"extract", path("f.pilp"), "--value", "2"});
  EXPECT_EQ(given.out, "status=feasible trivial=false final_x=2 mask=2 assignment=-1,2\n");
  EXPECT_EQ(run_cli({"extract", path("f.pilp"), "--value", "4"}).code, kExitInput);
}

TEST_F(CliTest, ExtractDisabledWithoutFinalRestore) {
  ASSERT_EQ(
      run_cli({"reduce", file("f.cnf", kOr), "--no-final-restore", "-o", path("f.pilp")}).code,
      kExitOk);
  EXPECT_EQ(run_cli({"solve", path("f.pilp")}).code, kExitOk);
  EXPECT_EQ(run_cli({"extract", path("f.pilp")}).code, kExitUsage);
}

TEST_F(CliTest, Oracle) {
  Outcome result = run_cli({"oracle", file("f.cnf", kOr)});
  EXPECT_EQ(result.code, kExitOk);
  EXPECT_EQ(result.out, "satisfiable=true sat_count=3 all_zero=false masks=1,2,3\n");
  EXPECT_EQ(run_cli({"oracle", "-"}, kContradiction).code, kExitNegative);
}

TEST_F(CliTest, Simulate) {
  Outcome result = run_cli({"simulate", file("f.cnf", kOr)});
  EXPECT_EQ(result.code, kExitOk);
  EXPECT_EQ(result.out, "codes[0]=1,2,3\nscaled[1]=25,50,75\nchecked[1]=6,12,18\ncodes[1]=1,2,3\n");
}

TEST_F(CliTest, GenSubsetSum) {
  Outcome listed = run_cli({"gen-subsetsum", "--items", "1,2", "--target", "3"});
  ASSERT_EQ(listed.code, kExitOk);
  IpInstance inst = deserialize(listed.out);
  EXPECT_EQ(inst.num_cols(), 3);
  EXPECT_EQ(inst.rows[0].rhs, 3);

  Outcome a = run_cli({"gen-subsetsum", "--seed", "4", "--count", "6"});
  Outcome b = run_cli({"gen-subsetsum", "--seed", "4", "--count", "6"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run_cli({"gen-subsetsum"}).code, kExitUsage);
}

TEST_F(CliTest, ErrorCodes) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"solve", "--max-states", "0", "x"}).code, kExitUsage);
  Outcome parse = run_cli({"reduce", "-"}, "p cnf 2 1\n1 2 3 0\n");
  EXPECT_EQ(parse.code, kExitInput);
  EXPECT_TRUE(parse.out.empty());
  EXPECT_FALSE(parse.err.empty());
  EXPECT_EQ(run_cli({"validate", "-"}, "PATHILP v9\n").code, kExitInput);
  EXPECT_EQ(run_cli({"solve", path("missing.pilp")}).code, kExitInput);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  std::string cnf = file("g.cnf", "p cnf 3 3\n1 -2 3 0\n-1 2 0\n2 3 0\n");
  ASSERT_EQ(run_cli({"reduce", cnf, "-o", path("g.pilp")}).code, kExitOk);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", path("g.pilp")}, {"roundtrip", cnf}}) {
    Outcome first = run_cli(args);
    Outcome second = run_cli(args);
    EXPECT_EQ(first.code, second.code);
    EXPECT_EQ(first.out, second.out);
  }
}

}  // namespace
}  // namespace pathilp
