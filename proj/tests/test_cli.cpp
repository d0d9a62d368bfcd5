#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "relspin/sweep_io.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RELSPIN_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("relspin_cli_" + std::to_string(::getpid()) + "_" + name);
}

const char* kRapiditySweep = "sweep --axis rapidity --p 10 --m 1 --theta 0.54pi --phi 0 --lo 0 --hi 12 --steps 200";

}  // namespace

TEST(Cli, VerifyPassesWithSeed42) {
  const auto r = run("verify --seed 42 --samples 100");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("PASS spin.equivalence"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyRestFrameOnly) { EXPECT_EQ(run("verify --samples 1 --rest-frame-only").status, 0); }

TEST(Cli, VerifyCorruptedBasisExitsOne) {
  const auto r = run("verify --samples 3 --corrupt-gamma-basis");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL clifford.anticommutator"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("verify --samples 0").status, 2);
  EXPECT_EQ(run("sweep --lo 0 --hi 1").status, 2);
  EXPECT_EQ(run("sweep --lo 1 --hi 0 --steps 5").status, 2);
  EXPECT_EQ(run("sweep --lo 0 --hi 1 --steps 1").status, 2);
  EXPECT_EQ(run("sweep --lo 0 --hi 1 --steps 5 --m 0").status, 2);
  EXPECT_EQ(run("sweep --lo 0 --hi 1 --steps 5 --theta abc").status, 2);
  EXPECT_EQ(run("sweep --axis polar --lo 0 --hi 4 --steps 5").status, 2);
  EXPECT_EQ(run("sweep --lo 0 --hi 1 --steps 5 --out /nonexistent-dir/x.csv").status, 2);
  EXPECT_EQ(run("inspect nonsense").status, 2);
  EXPECT_EQ(run("inspect spin_r --m -1").status, 2);
  EXPECT_EQ(run("inspect spin_r --p -3").status, 2);
}

TEST(Cli, SweepRapidityCsv) {
  const auto r = run(kRapiditySweep);
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,entropy_psi1,entropy_psi2,ln2");
  std::getline(in, line);
  EXPECT_EQ(line, "0,0,0.6931471805599453,0.6931471805599453");
  int rows = 1;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.find(' '), std::string::npos);
  }
  EXPECT_EQ(rows, 200);
  EXPECT_EQ(r.out.back(), '\n');
}

TEST(Cli, SweepMatchesLibrary) {
  relspin::SweepSpec spec;
  spec.momentum = {10.0, 0.0, 0.0};
  spec.axis = relspin::SweepAxis::polar;
  spec.xi = 10.0;
  spec.lo = 0.0;
  spec.hi = std::numbers::pi;
  spec.steps = 200;
  std::ostringstream expected;
  relspin::write_sweep_csv(expected, relspin::sweep(spec));
  const auto path = temp_file("polar.csv");
  const auto r = run("sweep --axis polar --xi 10 --p 10 --m 1 --lo 0 --hi pi --steps 200 --out " + path.string());
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path), expected.str());
  std::filesystem::remove(path);
}

TEST(Cli, SweepIsByteIdentical) {
  const auto a = temp_file("a.csv"), b = temp_file("b.csv");
  ASSERT_EQ(run(std::string(kRapiditySweep) + " --out " + a.string()).status, 0);
  ASSERT_EQ(run(std::string(kRapiditySweep) + " --out " + b.string()).status, 0);
  const std::string x = slurp(a);
  EXPECT_FALSE(x.empty());
  EXPECT_EQ(x, slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, InspectSpinRAtRestIsSigma) {
  const auto r = run("inspect spin_r --p 0 --json");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["kind"], "spin_r");
  const auto& z = doc["components"]["z"];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double expected = i == j ? (i % 2 == 0 ? 1.0 : -1.0) : 0.0;
      EXPECT_EQ(z[i][j][0].get<double>(), expected);
      EXPECT_EQ(z[i][j][1].get<double>(), 0.0);
    }
  }
  const auto text = run("inspect spin_r --p 0");
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("z:"), std::string::npos);
}

TEST(Cli, InspectAbParamsAtZeroRapidity) {
  const auto r = run("inspect ab_params --xi 0 --p 10 --m 1 --theta 0.54pi --json");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["a1"].get<double>(), 1.0);
  EXPECT_EQ(doc["b1"].get<double>(), 0.0);
  EXPECT_EQ(doc["a2"].get<double>(), 1.0);
  EXPECT_EQ(doc["b2"].get<double>(), 0.0);
}

TEST(Cli, InspectWignerBlockIsUnitary) {
  const auto r = run("inspect wigner_block --xi 10 --p 10 --m 1 --theta 0.54pi --json");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  const double a0 = doc["A"][0], a1 = doc["A"][1], b0 = doc["B"][0], b1 = doc["B"][1];
  EXPECT_NEAR(a0 * a0 + a1 * a1 + b0 * b0 + b1 * b1, 1.0, 1e-12);
}

TEST(Cli, InspectOtherKinds) {
  for (const char* kind : {"spin_fw", "hamiltonian", "transport"}) {
    const auto r = run(std::string("inspect ") + kind + " --p 2 --theta 0.3 --phi 1 --xi 0.5 --json");
    ASSERT_EQ(r.status, 0) << kind;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << kind;
  }
  EXPECT_EQ(run("inspect transport --rep covariant --p 2 --xi 1").status, 0);
}
