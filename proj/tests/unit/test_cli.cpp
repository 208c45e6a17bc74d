// Copyright 2026 The tnps Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "json.hpp"
#include "tnps/tensor_io.hpp"

namespace tnps::cli {
namespace {

namespace fs = std::filesystem;
const fs::path kData = TNPS_TEST_DATA_DIR;

struct Outcome {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome tnps(std::vector<std::string> args) {
  args.insert(args.begin(), "tnps");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("tnps_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string at(const std::string& name) const { return (dir / name).string(); }
  fs::path dir;
};

TEST_F(Cli, CountExamples) {
  auto r = tnps({"count", "--template", "cycle", "--n", "4", "--rank-max", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["exact"], 48);
  EXPECT_EQ(r.json()["aut_size"], 8);
  r = tnps({"count", "--template", "path", "--n", "5", "--rank-max", "1"});
  EXPECT_EQ(r.json()["exact"], 60);
}

TEST_F(Cli, CountMalformedGraphExitsThree) {
  const auto r = tnps({"count", "--template", (kData / "multigraph.graph").string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST_F(Cli, BadFlagsExitThree) {
  EXPECT_EQ(tnps({"count", "--no-such-flag"}).code, 3);
  EXPECT_EQ(tnps({"count", "--rank-max", "two"}).code, 3);
  EXPECT_EQ(tnps({}).code, 3);
}

TEST_F(Cli, SynthIsSeeded) {
  auto a = tnps({"synth", "--format", "tr", "--n", "4", "--dim", "3", "--ranks", "1,2,3,4",
                 "--seed", "7", "--out", at("a")});
  auto b = tnps({"synth", "--format", "tr", "--n", "4", "--dim", "3", "--ranks", "1,2,3,4",
                 "--seed", "7", "--out", at("b")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.json()["shape"], Json({3, 3, 3, 3}));
  EXPECT_EQ(slurp(dir / "a" / "tensor.tnsb"), slurp(dir / "b" / "tensor.tnsb"));
  EXPECT_EQ(slurp(dir / "a" / "truth.json"), slurp(dir / "b" / "truth.json"));
}

TEST_F(Cli, SynthMeraIsOrderEight) {
  const auto r = tnps({"synth", "--format", "mera", "--ranks", "1,2", "--dim", "2", "--out", at("m")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["shape"].size(), 8u);
  EXPECT_EQ(tnps({"synth", "--format", "nonsense", "--out", at("x")}).code, 3);
}

TEST_F(Cli, FitTruthAndMasks) {
  ASSERT_EQ(tnps({"synth", "--ranks", "1,2", "--seed", "3", "--out", at("s")}).code, 0);
  const std::string x = at("s/tensor.tnsb"), s = at("s/truth.json");
  auto plain = tnps({"fit", "--input", x, "--structure", s, "--seed", "1", "--out", at("f1")});
  ASSERT_EQ(plain.code, 0) << plain.err;
  EXPECT_LE(plain.json()["rse"].get<double>(), 1e-4);

  const DenseTensor t = load_tensor(x);
  DenseTensor ones(t.shape()), zeros(t.shape());
  for (double& v : ones.values()) v = 1;
  save_tensor(dir / "ones.tnsb", ones);
  save_tensor(dir / "zeros.tnsb", zeros);
  auto masked = tnps({"fit", "--input", x, "--structure", s, "--seed", "1", "--mask",
                      at("ones.tnsb"), "--out", at("f2")});
  EXPECT_EQ(masked.out, plain.out);
  auto empty = tnps({"fit", "--input", x, "--structure", s, "--mask", at("zeros.tnsb")});
  EXPECT_EQ(empty.code, 3);
  EXPECT_NE(empty.err.find("no observed entries"), std::string::npos);
  EXPECT_EQ(tnps({"fit", "--input", at("missing.tnsb"), "--structure", s}).code, 2);
}

TEST_F(Cli, SearchWritesArtifactsAndEff) {
  ASSERT_EQ(tnps({"synth", "--ranks", "1,2", "--seed", "4", "--out", at("s")}).code, 0);
  const auto r = tnps({"search", "--input", at("s/tensor.tnsb"), "--template", "cycle",
                       "--rank-max", "3", "--iters", "2", "--samples", "4", "--c1", "0.9",
                       "--c2", "0.9", "--lambda", "200", "--seed", "1", "--max-steps", "500",
                       "--restarts", "1", "--truth", at("s/truth.json"), "--out", at("run1")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "run1" / "result.json"));
  EXPECT_TRUE(fs::exists(dir / "run1" / "trace.csv"));
  EXPECT_TRUE(r.json().contains("eff"));
  EXPECT_EQ(slurp(dir / "run1" / "result.json"), r.out);
}

TEST_F(Cli, SearchGaSelectsBaseline) {
  ASSERT_EQ(tnps({"synth", "--ranks", "1,2", "--seed", "4", "--out", at("s")}).code, 0);
  const auto r = tnps({"search", "--input", at("s/tensor.tnsb"), "--algo", "ga", "--rank-max", "2",
                       "--population", "6", "--generations", "2", "--max-steps", "300",
                       "--restarts", "1", "--out", at("ga")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json cfg = Json::parse(slurp(dir / "ga" / "config.json"));
  EXPECT_EQ(cfg["algo"], "ga");
  EXPECT_EQ(cfg["ga"]["population"], 6);
  EXPECT_EQ(cfg["ga"]["elimination_rate"], 0.36);
}

TEST_F(Cli, SearchMissingInputExitsTwo) {
  EXPECT_EQ(tnps({"search", "--input", at("nope.tnsb"), "--out", at("r")}).code, 2);
  EXPECT_EQ(tnps({"search", "--input", (kData / "small.tnsb").string(), "--template", "path",
                  "--c1", "0.5"}).code,
            3);
}

TEST_F(Cli, ConfigPrecedenceAndRoundTrip) {
  ASSERT_EQ(tnps({"synth", "--ranks", "1,2", "--seed", "5", "--out", at("s")}).code, 0);
  {
    std::ofstream os(dir / "cfg.json");
    os << R"({"input": ")" << at("s/tensor.tnsb") << R"(", "iters": 9, "samples": 3,)"
       << R"( "rank_max": 2, "fit": {"max_steps": 200, "restarts": 1}})";
  }
  const auto first = tnps({"search", "--config", at("cfg.json"), "--iters", "2", "--out", at("r1")});
  ASSERT_EQ(first.code, 0) << first.err;
  const Json dumped = Json::parse(slurp(dir / "r1" / "config.json"));
  EXPECT_EQ(dumped["iters"], 2);
  EXPECT_EQ(dumped["samples"], 3);
  // Re-running the dump reproduces the result byte for byte.
  const auto again = tnps({"search", "--config", at("r1/config.json"), "--out", at("r2")});
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(slurp(dir / "r2" / "result.json"), slurp(dir / "r1" / "result.json"));
  EXPECT_EQ(slurp(dir / "r2" / "trace.csv"), slurp(dir / "r1" / "trace.csv"));
}

TEST_F(Cli, ConfigRejectsUnknownKeys) {
  std::ofstream(dir / "bad.json") << R"({"iterz": 3})";
  EXPECT_EQ(tnps({"search", "--config", at("bad.json")}).code, 3);
  std::ofstream(dir / "typed.json") << R"({"iters": "three"})";
  EXPECT_EQ(tnps({"search", "--config", at("typed.json")}).code, 3);
}

TEST_F(Cli, EnvSeedFallback) {
  ::setenv("TNPS_SEED", "17", 1);
  EXPECT_EQ(default_synth_config()["seed"], 17);
  ::setenv("TNPS_SEED", "x", 1);
  EXPECT_THROW(default_seed(), std::exception);
  ::unsetenv("TNPS_SEED");
}

TEST_F(Cli, BenchDryRunAndRowReplay) {
  const auto dry = tnps({"bench", "--dry-run", "--trials", "2", "--seeds", "2", "--algos",
                         "tnls,ga", "--out", at("b")});
  ASSERT_EQ(dry.code, 0) << dry.err;
  EXPECT_EQ(std::count(dry.out.begin(), dry.out.end(), '\n'), 9);
  EXPECT_FALSE(fs::exists(dir / "b"));

  const auto bench = tnps({"bench", "--trials", "1", "--seeds", "1", "--ranks", "1,2",
                           "--rank-max", "3", "--iters", "2", "--samples", "3",
                           "--max-steps", "300", "--restarts", "1", "--rse-threshold", "10",
                           "--out", at("b")});
  ASSERT_EQ(bench.code, 0) << bench.err;
  EXPECT_EQ(bench.out.substr(0, bench.out.find('\n')),
            "trial,order,algo,seed,eff,evaluations,rse,seconds");
  const fs::path row = dir / "b" / "runs" / "o4_t0_tnls_s0";
  for (const char* jobs : {"1", "2"}) {
    const auto replay = tnps({"search", "--config", (row / "config.json").string(), "--jobs",
                              jobs, "--out", at(std::string("replay") + jobs)});
    ASSERT_EQ(replay.code, 0) << replay.err;
    EXPECT_EQ(replay.out, slurp(row / "result.json"));
  }
}

TEST_F(Cli, BenchFailsOnRseThreshold) {
  const auto r = tnps({"bench", "--trials", "1", "--seeds", "1", "--ranks", "2", "--rank-max", "1",
                       "--iters", "1", "--samples", "1", "--max-steps", "50", "--restarts", "1",
                       "--out", at("b")});
  EXPECT_EQ(r.code, 4);
}

}  // namespace
}  // namespace tnps::cli
