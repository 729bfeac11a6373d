#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "minkval/cli.hpp"
#include "minkval/io.hpp"
#include "minkval/operators.hpp"

using namespace minkval;

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "minkval_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("minkval_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kCube =
    R"({"n": 3, "vertices": [["-1","-1","-1"],["-1","-1","1"],["-1","1","-1"],["-1","1","1"],
                             ["1","-1","-1"],["1","-1","1"],["1","1","-1"],["1","1","1"]]})";
const char* kTriangle = R"({"n": 2, "vertices": [["0","0"],["1","0"],["0","1"]]})";

}  // namespace

TEST_F(CliTest, CubeAsymmetricLinfProjectionIsCrossPolytope) {
  const auto in = file("cube.json", kCube);
  const auto out = path("res.json");
  const CliRun r = cli({"compute", "--input", in, "--operator", "asym_linf_projection", "--params",
                     R"({"p": "inf", "sign": "+"})", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = read_json_file(out);
  EXPECT_EQ(j["kind"], "polytope");
  const Polytope body = polytope_from_json(j);
  const Polytope cross = convex_hull({Vector{1, 0, 0}, Vector{-1, 0, 0}, Vector{0, 1, 0}, Vector{0, -1, 0},
                                      Vector{0, 0, 1}, Vector{0, 0, -1}});
  EXPECT_EQ(body, cross);
}

TEST_F(CliTest, MomentBodyOfTriangle) {
  const auto in = file("t2.json", kTriangle);
  const auto out = path("res.json");
  const CliRun r = cli({"compute", "--input", in, "--operator", "moment_body", "--at", "1,0", "--at", "0,-1", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = read_json_file(out);
  EXPECT_EQ(j["kind"], "field");
  ASSERT_EQ(j["samples"].size(), 2u);
  // int over conv{o, e1, e2} of y1 dy = 1/6; y2 is never negative there.
  EXPECT_EQ(j["samples"][0]["h"], "1/6");
  EXPECT_EQ(j["samples"][1]["h"], "0");
}

TEST_F(CliTest, SpecFileAndFloatMode) {
  const auto in = file("t2.json", kTriangle);
  const auto spec = file("spec.json", R"({"family": "moment_body", "p": 2})");
  const auto out = path("res.json");
  const CliRun r = cli({"compute", "--input", in, "--operator", spec, "--mode", "float", "--at", "1,0", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = read_json_file(out);
  EXPECT_EQ(j["mode"], "float");
  // h^2 = int y1^2 = 1/12.
  EXPECT_NEAR(std::stod(j["samples"][0]["h_pow"].get<std::string>()), 1.0 / 12, 1e-12);
}

TEST_F(CliTest, ResultFileParsesBack) {
  const auto in = file("cube.json", kCube);
  const auto out = path("res.json");
  ASSERT_EQ(cli({"compute", "--input", in, "--operator", "identity", "--out", out}).code, 0);
  const auto out2 = path("res2.json");
  ASSERT_EQ(cli({"compute", "--input", out, "--operator", "identity", "--out", out2}).code, 0);
  EXPECT_EQ(polytope_from_json(read_json_file(out)), polytope_from_json(read_json_file(in)));
  EXPECT_EQ(read_json_file(out)["vertices"], read_json_file(out2)["vertices"]);
}

TEST_F(CliTest, OriginOutsideIsAnError) {
  const auto in = file("off.json", R"({"n": 2, "vertices": [["1","1"],["2","1"],["1","2"]]})");
  const CliRun r = cli({"compute", "--input", in, "--operator", "projection_body"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("OriginNotContained"), std::string::npos) << r.err;
}

TEST_F(CliTest, FamilyDimensionMismatch) {
  const auto in = file("t2.json", kTriangle);
  const CliRun r = cli({"compute", "--input", in, "--operator", "difference_body"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("FamilyDimensionMismatch"), std::string::npos) << r.err;
}

TEST_F(CliTest, MalformedInputsExitTwo) {
  const auto bad = file("bad.json", "{not json");
  EXPECT_EQ(cli({"verify", "--input", bad}).code, 2);
  const auto unknown = file("cfg.json", R"({"probes": 10, "surprise": true})");
  EXPECT_EQ(cli({"verify", "--input", unknown}).code, 2);
  EXPECT_EQ(cli({"verify", "--input", path("missing.json")}).code, 2);
  EXPECT_EQ(cli({"compute", "--input", bad, "--operator", "identity"}).code, 2);
  EXPECT_EQ(cli({"suite", "--name", "nonsense"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST_F(CliTest, VerifySmallConfig) {
  const auto cfg = file("cfg.json", R"({"families": [{"family": "projection_body"}], "dims": [3],
      "lambdas": ["1/2"], "scales": ["1"], "probes": 10, "aux_probes": 5, "chain_depth": 2,
      "suites": ["valuation", "vanishing"]})");
  const auto out = path("bundle.json");
  const CliRun r = cli({"verify", "--input", cfg, "--out", out});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = read_json_file(out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_NE(r.out.find("valuation:"), std::string::npos);
}

TEST_F(CliTest, Counterexample) {
  const auto out = path("ce.json");
  const CliRun r = cli({"counterexample", "--probes", "50", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("h(2,6,5,5) = 9"), std::string::npos) << r.out;
  EXPECT_EQ(read_json_file(out)["values"]["margin"], "1");
}

TEST_F(CliTest, SliceRows) {
  const auto in = file("cube.json", kCube);
  const auto out = path("slice.csv");
  const CliRun r = cli({"slice", "--input", in, "--operator", "identity", "--basis", "1,0,0;0,1,0", "--resolution", "8",
                     "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(f, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], "theta,h");
  EXPECT_EQ(lines[1], "0,1");
  // theta = pi/4: h_cube = |cos| + |sin| = sqrt 2.
  const double h = std::stod(lines[2].substr(lines[2].find(',') + 1));
  EXPECT_NEAR(h, std::sqrt(2.0), 1e-12);
}

TEST_F(CliTest, SliceDegenerateBasis) {
  const auto in = file("cube.json", kCube);
  const CliRun r = cli({"slice", "--input", in, "--operator", "identity", "--basis", "1,0,0;2,0,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("DegenerateBasis"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"slice", "--input", in, "--operator", "identity", "--basis", "1,0;0,1"}).code, 1);
}

TEST_F(CliTest, UnknownFamilyIsMalformed) {
  const auto in = file("t2.json", kTriangle);
  const CliRun r = cli({"compute", "--input", in, "--operator", "no_such_family"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown operator family"), std::string::npos) << r.err;
}
