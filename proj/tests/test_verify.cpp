#include <gtest/gtest.h>

#include <algorithm>

#include "relspin/verify.hpp"

using namespace relspin;

namespace {

const CheckResult* find(const VerificationReport& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const auto& c) { return c.name == name; });
  return it == r.checks.end() ? nullptr : &*it;
}

}  // namespace

TEST(RunVerify, DefaultSeedPasses) {
  const auto r = run_verify({42, 100, false, false});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.seed, 42u);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ' ' << c.max_residual;
  EXPECT_GE(r.checks.size(), 15u);
}

TEST(RunVerify, Deterministic) {
  const auto a = run_verify({7, 20, false, false});
  const auto b = run_verify({7, 20, false, false});
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].max_residual, b.checks[i].max_residual);
  }
}

TEST(RunVerify, RestFrameSubset) {
  const auto r = run_verify({1, 1, true, false});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(find(r, "spin.covariant_noncommutation"), nullptr);
}

TEST(RunVerify, CorruptedBasisFailsNamedCheck) {
  const auto r = run_verify({42, 5, false, true});
  EXPECT_FALSE(r.passed());
  const auto* c = find(r, "clifford.anticommutator");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  for (const auto& other : r.checks) {
    if (other.name != "clifford.anticommutator") {
      EXPECT_TRUE(other.passed) << other.name;
    }
  }
}

TEST(RunVerify, LowerBoundCheckSemantics) {
  const auto r = run_verify({42, 10, false, false});
  const auto* c = find(r, "spin.covariant_noncommutation");
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(c->lower_bound);
  EXPECT_GT(c->max_residual, c->tolerance);
}
