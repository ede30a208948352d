#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "afmx/cfenum.hpp"
#include "afmx/matrix.hpp"

namespace afmx {

enum class Semantics { ConflictFree, Stable, Admissible, Complete, Preferred, Grounded, Ideal, SemiStable, Eager };

inline constexpr std::array<Semantics, 9> kAllSemantics = {
    Semantics::ConflictFree, Semantics::Stable,   Semantics::Admissible, Semantics::Complete, Semantics::Preferred,
    Semantics::Grounded,     Semantics::Ideal,    Semantics::SemiStable, Semantics::Eager};

inline std::string_view to_code(Semantics s) {
  switch (s) {
  case Semantics::ConflictFree: return "cf";
  case Semantics::Stable: return "st";
  case Semantics::Admissible: return "ad";
  case Semantics::Complete: return "co";
  case Semantics::Preferred: return "pr";
  case Semantics::Grounded: return "gr";
  case Semantics::Ideal: return "id";
  case Semantics::SemiStable: return "sst";
  case Semantics::Eager: return "eg";
  }
  return "?";
}

inline Semantics parse_semantics(std::string_view code) {
  for (Semantics s : kAllSemantics)
    if (to_code(s) == code) return s;
  throw UsageError("unknown semantics '" + std::string(code) + "' (expected cf, st, ad, co, pr, gr, id, sst or eg)");
}

/// Semantics whose family always holds exactly one extension.
inline bool is_single_status(Semantics s) {
  return s == Semantics::Grounded || s == Semantics::Ideal || s == Semantics::Eager;
}

/// Extensions of one framework under one semantics, ordered by cardinality
/// then lexicographically.
struct ExtensionFamily {
  Semantics tag = Semantics::ConflictFree;
  std::vector<ArgSet> sets;

  bool contains(const ArgSet& s) const { return std::binary_search(sets.begin(), sets.end(), s); }
  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }

  friend bool operator==(const ExtensionFamily&, const ExtensionFamily&) = default;
};

inline ExtensionFamily make_family(Semantics tag, std::vector<ArgSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return {tag, std::move(sets)};
}

/// R+(S) = S together with every argument some member of S attacks.
inline ArgSet range(const Framework& f, const ArgSet& s) {
  std::vector<Arg> out(s.begin(), s.end());
  for (const auto& a : f.attacks())
    if (s.contains(a.attacker)) out.push_back(a.target);
  return ArgSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Sub-block criteria, evaluated on the blocks of S in M(F).

inline void require_conflict_free(const SubBlocks& b) {
  if (!b.cf.is_zero()) throw PreconditionViolation("set " + to_string(b.members) + " is not conflict-free");
}

/// Every column of M^s is non-zero.
inline bool is_stable(const SubBlocks& b) {
  require_conflict_free(b);
  return b.s.column_support().count() == static_cast<std::size_t>(b.s.cols());
}

/// Each non-zero row t of M^a has a non-zero column t in M^s: every outside
/// attacker of S is counter-attacked by S.
inline bool is_admissible(const SubBlocks& b) {
  require_conflict_free(b);
  const BoolMatrix::Row defeated = b.s.column_support();
  for (int t = 0; t < b.a.rows(); ++t)
    if (b.a.row(t).any() && !defeated.test(t)) return false;
  return true;
}

/// For every zero column t of M^s, column t of M^c must be non-zero and carry
/// a 1 in some row v whose M^s column is also zero (an attacker of j_t that S
/// leaves alone). Then no outside argument is defended by S.
inline bool is_complete(const SubBlocks& b) {
  if (!is_admissible(b)) throw PreconditionViolation("set " + to_string(b.members) + " is not admissible");
  const BoolMatrix::Row defeated = b.s.column_support();
  const int h = b.c.cols();
  for (int t = 0; t < h; ++t) {
    if (defeated.test(t)) continue;
    if (!b.c.column_nonzero(t)) return false;
    bool undefended = false;
    for (int v = 0; v < h && !undefended; ++v) undefended = b.c.get(v, t) && !defeated.test(v);
    if (!undefended) return false;
  }
  return true;
}

inline bool is_stable(const Framework& f, const ArgSet& s) { return is_stable(extract_subblocks(natural_matrix(f), s)); }
inline bool is_admissible(const Framework& f, const ArgSet& s) { return is_admissible(extract_subblocks(natural_matrix(f), s)); }
inline bool is_complete(const Framework& f, const ArgSet& s) { return is_complete(extract_subblocks(natural_matrix(f), s)); }

// ---------------------------------------------------------------------------
// Norm-form criteria.

/// Stable iff no zero column of M^s was relocated (q = 0).
inline bool is_stable(const NormForm& nf) {
  const BoolMatrix s = nf.s_block();
  if (nf.q != 0) return false;
  for (int c = 0; c < s.cols(); ++c)
    if (!s.column_nonzero(c)) return false;
  return true;
}

/// Admissible iff A_{q,k} = 0.
inline bool is_admissible(const NormForm& nf) { return nf.a_block().is_zero(); }

/// Complete iff A_{q,k} = 0 and every column of C_{q,q} is non-zero.
inline bool is_complete(const NormForm& nf) {
  if (!is_admissible(nf)) return false;
  const BoolMatrix c = nf.c_block();
  for (int t = 0; t < c.cols(); ++t)
    if (!c.column_nonzero(t)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Families.

enum class Criterion { SubBlock, NormForm };

/// cf, st, ad or co: enumerate conflict-free sets and keep those passing the
/// tag's matrix criterion.
inline ExtensionFamily compute_family(const Framework& f, Semantics tag, Criterion how = Criterion::SubBlock) {
  if (tag != Semantics::ConflictFree && tag != Semantics::Stable && tag != Semantics::Admissible && tag != Semantics::Complete)
    throw UsageError("compute_family handles cf, st, ad and co; got " + std::string(to_code(tag)));
  const AttackMatrix natural = natural_matrix(f);
  std::vector<ArgSet> kept;

  auto accept_blocks = [&](const ArgSet& s) {
    if (tag == Semantics::ConflictFree) return true;
    const SubBlocks b = extract_subblocks(natural, s);
    switch (tag) {
    case Semantics::Stable: return is_stable(b);
    case Semantics::Admissible: return is_admissible(b);
    default: return is_admissible(b) && is_complete(b);
    }
  };
  auto accept_norm = [&](const ArgSet& s) {
    if (tag == Semantics::ConflictFree) return true;
    const NormForm nf = to_norm_form(f, s);
    switch (tag) {
    case Semantics::Stable: return is_stable(nf);
    case Semantics::Admissible: return is_admissible(nf);
    default: return is_complete(nf);
    }
  };

  for_each_conflict_free(f, [&](const ArgSet& s) {
    if (how == Criterion::SubBlock ? accept_blocks(s) : accept_norm(s)) kept.push_back(s);
  });
  return make_family(tag, std::move(kept));
}

namespace detail {

/// Members with no proper superset in `sets` (by the key projection).
template <class Key>
std::vector<ArgSet> maximal_by(const std::vector<ArgSet>& sets, Key key) {
  std::vector<ArgSet> keys;
  keys.reserve(sets.size());
  for (const auto& s : sets) keys.push_back(key(s));
  std::vector<ArgSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) dominated = keys[i].proper_subset_of(keys[j]);
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

inline std::vector<ArgSet> maximal(const std::vector<ArgSet>& sets) {
  return maximal_by(sets, [](const ArgSet& s) { return s; });
}

inline ArgSet intersection_of(const std::vector<ArgSet>& sets, int n) {
  ArgSet acc(ArgSet(std::vector<Arg>{}).complement(n));
  for (const auto& s : sets) acc = acc.intersect(s);
  return acc;
}

/// The unique maximal admissible subset of `bound`; scans admissible sets
/// contained in `bound`.
inline ArgSet maximal_admissible_within(const ExtensionFamily& admissible, const ArgSet& bound, std::string_view what) {
  std::vector<ArgSet> inside;
  for (const auto& s : admissible.sets)
    if (bound.includes(s)) inside.push_back(s);
  auto top = maximal(inside);
  if (top.size() != 1)
    throw InvariantFailure(std::string(what) + ": expected one maximal admissible subset, found " + std::to_string(top.size()));
  return top.front();
}

} // namespace detail

/// pr, gr, id, sst or eg, derived from the ad and co families by set comparison.
inline ExtensionFamily compute_derived(const Framework& f, Semantics tag, Criterion how = Criterion::SubBlock) {
  switch (tag) {
  case Semantics::Preferred: {
    const auto ad = compute_family(f, Semantics::Admissible, how);
    return make_family(tag, detail::maximal(ad.sets));
  }
  case Semantics::Grounded: {
    const auto co = compute_family(f, Semantics::Complete, how);
    std::vector<ArgSet> minimal;
    for (const auto& s : co.sets) {
      bool has_smaller = false;
      for (const auto& t : co.sets) has_smaller = has_smaller || t.proper_subset_of(s);
      if (!has_smaller) minimal.push_back(s);
    }
    if (minimal.size() != 1)
      throw InvariantFailure("grounded: expected one minimal complete extension, found " + std::to_string(minimal.size()));
    return make_family(tag, std::move(minimal));
  }
  case Semantics::SemiStable: {
    const auto ad = compute_family(f, Semantics::Admissible, how);
    return make_family(tag, detail::maximal_by(ad.sets, [&f](const ArgSet& s) { return range(f, s); }));
  }
  case Semantics::Ideal: {
    const auto ad = compute_family(f, Semantics::Admissible, how);
    const auto pr = detail::maximal(ad.sets);
    return make_family(tag, {detail::maximal_admissible_within(ad, detail::intersection_of(pr, f.size()), "ideal")});
  }
  case Semantics::Eager: {
    const auto ad = compute_family(f, Semantics::Admissible, how);
    const auto sst = detail::maximal_by(ad.sets, [&f](const ArgSet& s) { return range(f, s); });
    return make_family(tag, {detail::maximal_admissible_within(ad, detail::intersection_of(sst, f.size()), "eager")});
  }
  default:
    throw UsageError("compute_derived handles pr, gr, id, sst and eg; got " + std::string(to_code(tag)));
  }
}

/// Any semantics.
inline ExtensionFamily extensions(const Framework& f, Semantics tag, Criterion how = Criterion::SubBlock) {
  switch (tag) {
  case Semantics::ConflictFree:
  case Semantics::Stable:
  case Semantics::Admissible:
  case Semantics::Complete: return compute_family(f, tag, how);
  default: return compute_derived(f, tag, how);
  }
}

// ---------------------------------------------------------------------------
// Queries.

/// Global and local reasoning questions about a semantics.
enum class Question {
  Exists,          // does an extension exist
  SomeExtension,   // give one extension
  AllExtensions,   // give all extensions
  ContainedInSome, // credulous acceptance of A
  ContainedInAll,  // skeptical acceptance of A
  AttackedBySome,
  AttackedByAll,
  SomeContaining,  // one extension containing A
  AllContaining,
  SomeAttacking,   // one extension attacking A
  AllAttacking,
};

inline constexpr std::array<std::pair<std::string_view, Question>, 11> kQuestionCodes = {{
    {"EX", Question::Exists},
    {"SE", Question::SomeExtension},
    {"EE", Question::AllExtensions},
    {"DC", Question::ContainedInSome},
    {"DS", Question::ContainedInAll},
    {"AC", Question::AttackedBySome},
    {"AS", Question::AttackedByAll},
    {"SC", Question::SomeContaining},
    {"EC", Question::AllContaining},
    {"SA", Question::SomeAttacking},
    {"EA", Question::AllAttacking},
}};

inline Question parse_question(std::string_view code) {
  for (auto [c, q] : kQuestionCodes)
    if (c == code) return q;
  throw UsageError("unknown task '" + std::string(code) + "'");
}

inline std::string_view to_code(Question q) {
  for (auto [c, v] : kQuestionCodes)
    if (v == q) return c;
  return "?";
}

/// Whether the question is about a given argument set A.
inline bool needs_argument(Question q) {
  return q != Question::Exists && q != Question::SomeExtension && q != Question::AllExtensions;
}

/// Some member of e attacks some member of a.
inline bool attacks_set(const Framework& f, const ArgSet& e, const ArgSet& a) {
  for (const auto& att : f.attacks())
    if (e.contains(att.attacker) && a.contains(att.target)) return true;
  return false;
}

struct QueryResult {
  /// Verdict: existence for "some"/enumeration questions, universality for
  /// "all" questions (vacuously true over an empty family).
  bool holds = false;
  /// Extensions matching the question's predicate; at most one for the
  /// "give one" questions.
  std::vector<ArgSet> extensions;
};

inline QueryResult query(const Framework& f, const ExtensionFamily& family, Question q, const ArgSet& a = {}) {
  a.check_range(f.size());
  auto matching = [&](auto pred) {
    std::vector<ArgSet> out;
    for (const auto& e : family.sets)
      if (pred(e)) out.push_back(e);
    return out;
  };
  auto contains_a = [&a](const ArgSet& e) { return e.includes(a); };
  auto attacks_a = [&](const ArgSet& e) { return attacks_set(f, e, a); };

  QueryResult r;
  switch (q) {
  case Question::Exists: r.holds = !family.empty(); break;
  case Question::SomeExtension:
  case Question::AllExtensions:
    r.extensions = family.sets;
    r.holds = !r.extensions.empty();
    break;
  case Question::ContainedInSome:
  case Question::SomeContaining:
  case Question::AllContaining:
    r.extensions = matching(contains_a);
    r.holds = !r.extensions.empty();
    break;
  case Question::ContainedInAll:
    r.extensions = matching(contains_a);
    r.holds = r.extensions.size() == family.size();
    break;
  case Question::AttackedBySome:
  case Question::SomeAttacking:
  case Question::AllAttacking:
    r.extensions = matching(attacks_a);
    r.holds = !r.extensions.empty();
    break;
  case Question::AttackedByAll:
    r.extensions = matching(attacks_a);
    r.holds = r.extensions.size() == family.size();
    break;
  }
  if ((q == Question::SomeExtension || q == Question::SomeContaining || q == Question::SomeAttacking) && r.extensions.size() > 1)
    r.extensions.resize(1);
  return r;
}

inline QueryResult query(const Framework& f, Question q, Semantics tag, const ArgSet& a = {}) {
  return query(f, extensions(f, tag), q, a);
}

} // namespace afmx
