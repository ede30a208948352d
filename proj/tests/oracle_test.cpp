#include <gtest/gtest.h>

#include "afmx/oracle.hpp"
#include "fixtures.hpp"

using namespace afmx;
using namespace afmx::testing;

TEST(OracleDefends, Cases) {
  EXPECT_TRUE(oracle::defends(defended5(), ArgSet{1, 5}, 5));
  EXPECT_TRUE(oracle::defends(chain5(), ArgSet{}, 1));
  EXPECT_FALSE(oracle::defends(mutual5(), ArgSet{2, 3}, 1));
}

TEST(OracleFamily, ChainFamilies) {
  EXPECT_EQ(oracle::family(chain5(), Semantics::ConflictFree).sets,
            sets({{}, {1}, {2}, {3}, {4}, {5}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5}, {1, 3, 5}}));
  EXPECT_EQ(oracle::family(chain5(), Semantics::Stable).sets, sets({{1, 3, 5}}));
}

TEST(OracleFamily, EmptyFramework) {
  const Framework f(0, std::vector<Attack>{});
  for (Semantics s : {Semantics::Admissible, Semantics::Complete, Semantics::Preferred, Semantics::Grounded,
                      Semantics::Ideal, Semantics::SemiStable, Semantics::Eager})
    EXPECT_EQ(oracle::family(f, s).sets, sets({{}}));
}

TEST(OracleFamily, RefusesAboveBound) {
  const auto f = generate({13, 0.2, 1});
  EXPECT_THROW(oracle::family(f, Semantics::Admissible), PreconditionViolation);
  EXPECT_NO_THROW(oracle::family(f, Semantics::ConflictFree, 13));
}

TEST(OracleGroundedFixpoint, Cases) {
  EXPECT_EQ(oracle::grounded_fixpoint(mutual5()), ArgSet{});
  EXPECT_EQ(oracle::grounded_fixpoint(Framework(3, std::vector<Attack>{})), (ArgSet{1, 2, 3}));
  EXPECT_EQ(oracle::grounded_fixpoint(Framework(2, {{1, 2}})), (ArgSet{1}));
  EXPECT_EQ(oracle::grounded_fixpoint(chain5()), (ArgSet{1, 3, 5}));
}

TEST(Oracle, TwoGroundedOraclesAgree) {
  for (const auto& f : corpus(8, {0.1, 0.3, 0.5}, 10, 300)) {
    const auto gr = oracle::family(f, Semantics::Grounded);
    ASSERT_EQ(gr.size(), 1u);
    EXPECT_EQ(gr.sets.front(), oracle::grounded_fixpoint(f));
  }
}

TEST(Oracle, PermutationEquivariant) {
  std::mt19937_64 rng(5);
  for (const auto& f : corpus(6, {0.2, 0.4}, 4, 400)) {
    const auto pi = random_permutation(f.size(), rng);
    const auto g = relabel(f, pi);
    for (Semantics s : kAllSemantics) {
      std::vector<ArgSet> mapped;
      for (const auto& e : oracle::family(f, s).sets) mapped.push_back(relabel(e, pi));
      std::sort(mapped.begin(), mapped.end());
      EXPECT_EQ(oracle::family(g, s).sets, mapped);
    }
  }
}
