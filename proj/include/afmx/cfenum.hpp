#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "afmx/matrix.hpp"

namespace afmx {

/// True iff the cf-sub-block of S in M(F) is zero.
inline bool is_conflict_free(const AttackMatrix& natural, const ArgSet& s) {
  if (!natural.is_natural()) throw PreconditionViolation("conflict-freeness is read from the natural-permutation matrix");
  s.check_range(natural.order());
  std::vector<int> idx;
  idx.reserve(s.size());
  for (Arg a : s) idx.push_back(a - 1);
  return natural.cells().pick(idx, idx).is_zero();
}

inline bool is_conflict_free(const Framework& f, const ArgSet& s) { return is_conflict_free(natural_matrix(f), s); }

/// Basic set C(i) per argument: the j != i with a_{i,j} = a_{j,i} = a_{j,j} = 0.
/// Undefined (nullopt) for self-attacking i.
///
/// All three entries must be zero; with that, S subset-of C(i) implies
/// S + {i} is conflict-free.
struct BasicSets {
  std::vector<std::optional<ArgSet>> sets; // index i-1

  const std::optional<ArgSet>& of(Arg i) const { return sets.at(i - 1); }
  int size() const { return static_cast<int>(sets.size()); }
};

inline BasicSets basic_sets(const AttackMatrix& natural) {
  if (!natural.is_natural()) throw PreconditionViolation("basic sets are read from the natural-permutation matrix");
  const int n = natural.order();
  const BoolMatrix& m = natural.cells();
  BasicSets out;
  out.sets.resize(n);
  for (int i = 0; i < n; ++i) {
    if (m.get(i, i)) continue;
    std::vector<Arg> members;
    for (int j = 0; j < n; ++j)
      if (j != i && !m.get(i, j) && !m.get(j, i) && !m.get(j, j)) members.push_back(j + 1);
    out.sets[i] = ArgSet(std::move(members));
  }
  return out;
}

inline BasicSets basic_sets(const Framework& f) { return basic_sets(natural_matrix(f)); }

/// Conflict-free sets grouped by cardinality: levels[r] holds every
/// conflict-free set of size r, lexicographically ordered. levels has n+1
/// entries; levels[0] = { {} }.
struct CfFamily {
  std::vector<std::vector<ArgSet>> levels;

  std::size_t count() const {
    std::size_t total = 0;
    for (const auto& l : levels) total += l.size();
    return total;
  }

  std::vector<ArgSet> all() const {
    std::vector<ArgSet> out;
    out.reserve(count());
    for (const auto& l : levels) out.insert(out.end(), l.begin(), l.end());
    return out;
  }
};

/// Streams every conflict-free set of F to `visit(const ArgSet&)`, level by
/// level, lexicographic within a level. Level r+1 extends each S of level r by
/// every i > max(S) with S a subset of C(i), so each set is produced once.
/// Enumeration stops at the first empty level.
template <class Visit>
void for_each_conflict_free(const Framework& f, Visit&& visit) {
  using Mask = boost::dynamic_bitset<std::uint64_t>;
  const int n = f.size();
  const AttackMatrix m = natural_matrix(f);
  const BasicSets basic = basic_sets(m);

  std::vector<Mask> compatible(n, Mask(n));
  for (int i = 0; i < n; ++i)
    if (const auto& c = basic.sets[i])
      for (Arg j : *c) compatible[i].set(j - 1);

  struct Entry {
    Mask mask;
    std::vector<Arg> members;
  };
  std::vector<Entry> level{Entry{Mask(n), {}}};
  visit(ArgSet{});

  for (int r = 1; r <= n && !level.empty(); ++r) {
    std::vector<Entry> next;
    for (const auto& e : level) {
      const int lo = e.members.empty() ? 0 : e.members.back();
      for (int i = lo; i < n; ++i) {
        if (!basic.sets[i]) continue;
        if (!e.mask.is_subset_of(compatible[i])) continue;
        Entry grown{e.mask, e.members};
        grown.mask.set(i);
        grown.members.push_back(i + 1);
        visit(ArgSet(grown.members));
        next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
}

inline CfFamily enumerate_conflict_free(const Framework& f) {
  CfFamily out;
  out.levels.resize(f.size() + 1);
  for_each_conflict_free(f, [&out](const ArgSet& s) { out.levels[s.size()].push_back(s); });
  return out;
}

} // namespace afmx
