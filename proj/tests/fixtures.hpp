#pragma once

#include <random>
#include <vector>

#include "afmx/framework.hpp"
#include "afmx/io.hpp"
#include "afmx/semantics.hpp"

namespace afmx::testing {

/// 1 -> 2 -> 3 -> 1.
inline Framework triangle() { return Framework(3, {{1, 2}, {2, 3}, {3, 1}}); }

/// Five arguments with a single stable extension {1,3,5}.
inline Framework chain5() { return Framework(5, {{1, 2}, {2, 3}, {2, 5}, {4, 3}, {5, 4}}); }

/// chain5 with 3 and 4 turned against 1.
inline Framework defended5() { return Framework(5, {{1, 2}, {2, 3}, {2, 5}, {4, 1}, {4, 3}, {5, 4}}); }

/// 2 attacks almost everything, 3 and 2 attack each other.
inline Framework dense5() { return Framework(5, {{1, 4}, {2, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {4, 1}}); }

/// Two mutual attacks (1-3, 4-5) plus 1 -> 2 and 5 -> 1; every argument is attacked.
inline Framework mutual5() { return Framework(5, {{1, 2}, {1, 3}, {3, 1}, {4, 5}, {5, 1}, {5, 4}}); }

inline std::vector<ArgSet> sets(std::initializer_list<std::initializer_list<Arg>> list) {
  std::vector<ArgSet> out;
  for (auto s : list) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

/// Seeded corpus used by the property suites: `per_cell` frameworks for each
/// n in 1..max_n and each p in ps.
inline std::vector<Framework> corpus(int max_n, std::vector<double> ps, int per_cell, std::uint64_t seed) {
  std::vector<Framework> out;
  std::uint64_t s = seed;
  for (int n = 1; n <= max_n; ++n)
    for (double p : ps)
      for (int i = 0; i < per_cell; ++i) out.push_back(generate({n, p, s++}));
  return out;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  Permutation id = Permutation::identity(n);
  std::vector<Arg> image = id.image();
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

} // namespace afmx::testing
