#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "afmx/framework.hpp"
#include "afmx/semantics.hpp"

/// Brute-force reference semantics: every subset of A is checked against the
/// textbook definitions. Exponential, and meant to stay that way. Shares no
/// code with the matrix path beyond the Framework/ArgSet value types.
namespace afmx::oracle {

inline constexpr int kDefaultBound = 12;

namespace detail {

using Mask = std::uint32_t;

struct Graph {
  int n = 0;
  std::vector<std::vector<bool>> att; // att[a][b], 1-based

  explicit Graph(const Framework& f) : n(f.size()), att(f.size() + 1, std::vector<bool>(f.size() + 1, false)) {
    for (const auto& a : f.attacks()) att[a.attacker][a.target] = true;
  }

  bool in(Mask s, int a) const { return (s >> (a - 1)) & 1u; }

  bool conflict_free(Mask s) const {
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (in(s, a) && in(s, b) && att[a][b]) return false;
    return true;
  }

  /// b is defeated by S: some c in S attacks b.
  bool defeated(Mask s, int b) const {
    for (int c = 1; c <= n; ++c)
      if (in(s, c) && att[c][b]) return true;
    return false;
  }

  /// Every attacker of a is defeated by S.
  bool defends(Mask s, int a) const {
    for (int b = 1; b <= n; ++b)
      if (att[b][a] && !defeated(s, b)) return false;
    return true;
  }

  bool stable(Mask s) const {
    if (!conflict_free(s)) return false;
    for (int a = 1; a <= n; ++a)
      if (!in(s, a) && !defeated(s, a)) return false;
    return true;
  }

  bool admissible(Mask s) const {
    if (!conflict_free(s)) return false;
    for (int a = 1; a <= n; ++a)
      if (in(s, a) && !defends(s, a)) return false;
    return true;
  }

  bool complete(Mask s) const {
    if (!admissible(s)) return false;
    for (int a = 1; a <= n; ++a)
      if (defends(s, a) && !in(s, a)) return false;
    return true;
  }

  Mask range(Mask s) const {
    Mask r = s;
    for (int b = 1; b <= n; ++b)
      if (defeated(s, b)) r |= Mask{1} << (b - 1);
    return r;
  }
};

inline bool proper_subset(Mask s, Mask t) { return (s & ~t) == 0 && s != t; }
inline bool subset(Mask s, Mask t) { return (s & ~t) == 0; }

template <class Pred>
std::vector<Mask> filter_all(int n, Pred pred) {
  std::vector<Mask> out;
  const Mask end = Mask{1} << n;
  for (Mask s = 0; s < end; ++s)
    if (pred(s)) out.push_back(s);
  return out;
}

inline Mask intersect_all(const std::vector<Mask>& family, int n) {
  Mask acc = (Mask{1} << n) - 1;
  for (Mask t : family) acc &= t;
  return acc;
}

/// S in ad, S within bound, and no admissible U within bound strictly contains S.
inline std::vector<Mask> maximal_admissible_inside(const std::vector<Mask>& ad, Mask bound) {
  std::vector<Mask> out;
  for (Mask s : ad) {
    if (!subset(s, bound)) continue;
    bool beaten = false;
    for (Mask u : ad)
      if (subset(u, bound) && proper_subset(s, u)) beaten = true;
    if (!beaten) out.push_back(s);
  }
  return out;
}

inline ArgSet to_set(Mask s, int n) {
  std::vector<Arg> out;
  for (int a = 1; a <= n; ++a)
    if ((s >> (a - 1)) & 1u) out.push_back(a);
  return ArgSet(std::move(out));
}

inline Mask to_mask(const ArgSet& s) {
  Mask m = 0;
  for (Arg a : s) m |= Mask{1} << (a - 1);
  return m;
}

} // namespace detail

/// Every attacker of a has an attacker in s.
inline bool defends(const Framework& f, const ArgSet& s, Arg a) {
  for (const auto& ba : f.attacks()) {
    if (ba.target != a) continue;
    bool countered = false;
    for (const auto& cb : f.attacks())
      if (cb.target == ba.attacker && s.contains(cb.attacker)) countered = true;
    if (!countered) return false;
  }
  return true;
}

/// sigma(F) by filtering all 2^n subsets. Refuses frameworks above `bound`
/// arguments (bound itself is capped at 24).
inline ExtensionFamily family(const Framework& f, Semantics tag, int bound = kDefaultBound) {
  using namespace detail;
  const int n = f.size();
  if (bound > 24) bound = 24;
  if (n > bound)
    throw PreconditionViolation("oracle refuses " + std::to_string(n) + " arguments (bound " + std::to_string(bound) + ")");
  const Graph g(f);

  auto ad = [&] { return filter_all(n, [&](Mask s) { return g.admissible(s); }); };
  auto preferred = [&](const std::vector<Mask>& adm) {
    std::vector<Mask> out;
    for (Mask s : adm) {
      bool beaten = false;
      for (Mask t : adm) beaten = beaten || proper_subset(s, t);
      if (!beaten) out.push_back(s);
    }
    return out;
  };
  auto semi_stable = [&](const std::vector<Mask>& adm) {
    std::vector<Mask> out;
    for (Mask s : adm) {
      bool beaten = false;
      for (Mask t : adm) beaten = beaten || proper_subset(g.range(s), g.range(t));
      if (!beaten) out.push_back(s);
    }
    return out;
  };

  std::vector<Mask> picked;
  switch (tag) {
  case Semantics::ConflictFree: picked = filter_all(n, [&](Mask s) { return g.conflict_free(s); }); break;
  case Semantics::Stable: picked = filter_all(n, [&](Mask s) { return g.stable(s); }); break;
  case Semantics::Admissible: picked = ad(); break;
  case Semantics::Complete: picked = filter_all(n, [&](Mask s) { return g.complete(s); }); break;
  case Semantics::Preferred: picked = preferred(ad()); break;
  case Semantics::Grounded: {
    const auto co = filter_all(n, [&](Mask s) { return g.complete(s); });
    for (Mask s : co) {
      bool beaten = false;
      for (Mask t : co) beaten = beaten || proper_subset(t, s);
      if (!beaten) picked.push_back(s);
    }
    break;
  }
  case Semantics::Ideal: {
    const auto adm = ad();
    picked = maximal_admissible_inside(adm, intersect_all(preferred(adm), n));
    break;
  }
  case Semantics::SemiStable: picked = semi_stable(ad()); break;
  case Semantics::Eager: {
    const auto adm = ad();
    picked = maximal_admissible_inside(adm, intersect_all(semi_stable(adm), n));
    break;
  }
  }

  std::vector<ArgSet> sets;
  sets.reserve(picked.size());
  for (Mask s : picked) sets.push_back(to_set(s, n));
  return make_family(tag, std::move(sets));
}

/// Least fixed point of S -> {a : S defends a}, iterated from the empty set.
inline ArgSet grounded_fixpoint(const Framework& f) {
  ArgSet s;
  while (true) {
    std::vector<Arg> next;
    for (Arg a = 1; a <= f.size(); ++a)
      if (defends(f, s, a)) next.push_back(a);
    ArgSet grown(std::move(next));
    if (grown == s) return s;
    s = std::move(grown);
  }
}

} // namespace afmx::oracle
