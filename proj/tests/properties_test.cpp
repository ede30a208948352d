#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "afmx/cfenum.hpp"
#include "afmx/oracle.hpp"
#include "afmx/semantics.hpp"
#include "fixtures.hpp"

using namespace afmx;
using namespace afmx::testing;

namespace {

bool subset_of(const ExtensionFamily& small, const ExtensionFamily& big) {
  return std::all_of(small.sets.begin(), small.sets.end(), [&](const ArgSet& s) { return big.contains(s); });
}

Permutation set_first(const ArgSet& s, int n) {
  std::vector<Arg> image(s.begin(), s.end());
  for (Arg a : s.complement(n)) image.push_back(a);
  return Permutation(std::move(image));
}

} // namespace

TEST(DualInterchange, MatchesSwappedLabelsExhaustively) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& f : {generate({n, 0.3, 11u + n}), generate({n, 0.6, 23u + n})}) {
      std::vector<Arg> image(n);
      std::iota(image.begin(), image.end(), 1);
      do {
        const Permutation p(image);
        const AttackMatrix m = build_matrix(f, p);
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            const AttackMatrix d = dual_interchange(m, k, l);
            ASSERT_EQ(d, build_matrix(f, p.swapped(k, l))) << "n=" << n << " k=" << k << " l=" << l;
            ASSERT_EQ(dual_interchange(d, k, l), m);
            ASSERT_EQ(to_framework(d), f);
          }
      } while (std::next_permutation(image.begin(), image.end()));
    }
  }
}

TEST(SubBlocks, AssembleIntoReorderedMatrix) {
  for (const auto& f : corpus(7, {0.2, 0.5}, 3, 1000)) {
    const int n = f.size();
    const AttackMatrix nat = natural_matrix(f);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Arg> members;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) members.push_back(i + 1);
      const ArgSet s(members);
      const SubBlocks b = extract_subblocks(nat, s);
      ASSERT_EQ(b.assemble(), build_matrix(f, set_first(s, n)).cells());
    }
  }
}

TEST(NormForm, StructureOnEveryConflictFreeSet) {
  for (const auto& f : corpus(7, {0.1, 0.3, 0.5}, 3, 2000)) {
    for (const ArgSet& s : enumerate_conflict_free(f).all()) {
      const NormForm nf = to_norm_form(f, s);
      ASSERT_TRUE(nf.well_formed());
      ASSERT_EQ(nf.k, static_cast<int>(s.size()));
      ASSERT_EQ(ArgSet(std::vector<Arg>(nf.matrix.labels().image().begin(), nf.matrix.labels().image().begin() + nf.k)), s);
      ASSERT_EQ(nf.matrix, build_matrix(f, nf.matrix.labels()));
      ASSERT_EQ(norm_form_permutation(f, s), nf.matrix.labels());

      // Replaying the recorded interchanges from M(F) gives the same matrix.
      AttackMatrix replay = natural_matrix(f);
      for (auto [a, b] : nf.interchanges) replay = dual_interchange(replay, a, b);
      ASSERT_EQ(replay, nf.matrix);

      ASSERT_EQ(is_stable(nf), nf.q == 0);
      const bool adm = is_admissible(f, s);
      ASSERT_EQ(is_admissible(nf), adm);
      if (adm) { ASSERT_EQ(is_complete(nf), is_complete(f, s)); }
    }
  }
}

TEST(Criteria, AgreeWithOracle) {
  for (const auto& f : corpus(8, {0.1, 0.3, 0.5}, 5, 3000)) {
    for (Semantics tag : {Semantics::ConflictFree, Semantics::Stable, Semantics::Admissible, Semantics::Complete}) {
      const auto expected = oracle::family(f, tag);
      ASSERT_EQ(compute_family(f, tag, Criterion::SubBlock), expected) << to_code(tag);
      ASSERT_EQ(compute_family(f, tag, Criterion::NormForm), expected) << to_code(tag);
    }
    for (Semantics tag : {Semantics::Preferred, Semantics::Grounded, Semantics::Ideal, Semantics::SemiStable, Semantics::Eager})
      ASSERT_EQ(compute_derived(f, tag), oracle::family(f, tag)) << to_code(tag);
  }
}

TEST(Families, InclusionsAndCardinalities) {
  for (const auto& f : corpus(8, {0.1, 0.25, 0.4, 0.6}, 4, 4000)) {
    std::map<Semantics, ExtensionFamily> fam;
    for (Semantics s : kAllSemantics) fam[s] = extensions(f, s);
    EXPECT_TRUE(subset_of(fam[Semantics::Stable], fam[Semantics::SemiStable]));
    EXPECT_TRUE(subset_of(fam[Semantics::SemiStable], fam[Semantics::Preferred]));
    EXPECT_TRUE(subset_of(fam[Semantics::Preferred], fam[Semantics::Complete]));
    EXPECT_TRUE(subset_of(fam[Semantics::Complete], fam[Semantics::Admissible]));
    EXPECT_TRUE(subset_of(fam[Semantics::Admissible], fam[Semantics::ConflictFree]));
    for (Semantics s : {Semantics::Grounded, Semantics::Ideal, Semantics::Eager}) {
      ASSERT_EQ(fam[s].size(), 1u) << to_code(s);
      EXPECT_TRUE(fam[Semantics::Complete].contains(fam[s].sets.front()));
    }
    const ArgSet& gr = fam[Semantics::Grounded].sets.front();
    const ArgSet& id = fam[Semantics::Ideal].sets.front();
    const ArgSet& eg = fam[Semantics::Eager].sets.front();
    EXPECT_TRUE(id.includes(gr));
    EXPECT_TRUE(eg.includes(id));
    EXPECT_FALSE(fam[Semantics::Preferred].empty());
    EXPECT_FALSE(fam[Semantics::SemiStable].empty());
    if (!fam[Semantics::Stable].empty()) { EXPECT_EQ(fam[Semantics::SemiStable].sets, fam[Semantics::Stable].sets); }
  }
}

TEST(Families, PermutationInvariant) {
  std::mt19937_64 rng(17);
  for (const auto& f : corpus(7, {0.2, 0.4}, 3, 5000)) {
    const Permutation pi = random_permutation(f.size(), rng);
    const Framework g = relabel(f, pi);
    for (Semantics s : kAllSemantics) {
      std::vector<ArgSet> mapped;
      for (const auto& e : extensions(f, s).sets) mapped.push_back(relabel(e, pi));
      std::sort(mapped.begin(), mapped.end());
      ASSERT_EQ(extensions(g, s).sets, mapped) << to_code(s);
    }
  }
}
