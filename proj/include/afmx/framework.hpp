#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "afmx/error.hpp"

namespace afmx {

/// Argument identifier, 1-based.
using Arg = int;

struct Attack {
  Arg attacker = 0;
  Arg target = 0;

  friend auto operator<=>(const Attack&, const Attack&) = default;
};

inline std::string to_string(const Attack& a) {
  return "(" + std::to_string(a.attacker) + "," + std::to_string(a.target) + ")";
}

/// Finite argumentation framework over arguments 1..n. Attacks are kept
/// sorted and unique.
class Framework {
public:
  Framework() = default;

  Framework(int n, std::vector<Attack> attacks) : n_(n), attacks_(std::move(attacks)) {
    if (n_ < 0) throw IndexError("argument count must be non-negative");
    for (const auto& a : attacks_) {
      if (a.attacker < 1 || a.attacker > n_ || a.target < 1 || a.target > n_)
        throw IndexError("attack " + to_string(a) + " outside 1.." + std::to_string(n_));
    }
    std::sort(attacks_.begin(), attacks_.end());
    attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
  }

  Framework(int n, std::initializer_list<std::pair<Arg, Arg>> pairs)
      : Framework(n, to_attacks(pairs)) {}

  int size() const { return n_; }
  const std::vector<Attack>& attacks() const { return attacks_; }

  bool attacks(Arg a, Arg b) const {
    return std::binary_search(attacks_.begin(), attacks_.end(), Attack{a, b});
  }

  friend bool operator==(const Framework&, const Framework&) = default;

private:
  static std::vector<Attack> to_attacks(std::initializer_list<std::pair<Arg, Arg>> pairs) {
    std::vector<Attack> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
  }

  int n_ = 0;
  std::vector<Attack> attacks_;
};

/// Canonical set of arguments: strictly increasing members.
class ArgSet {
public:
  ArgSet() = default;

  /// Sorts and deduplicates.
  explicit ArgSet(std::vector<Arg> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  ArgSet(std::initializer_list<Arg> members) : ArgSet(std::vector<Arg>(members)) {}

  const std::vector<Arg>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Arg a) const { return std::binary_search(members_.begin(), members_.end(), a); }

  bool includes(const ArgSet& other) const {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
  }

  /// True iff this is a proper subset of `other`.
  bool proper_subset_of(const ArgSet& other) const {
    return size() < other.size() && other.includes(*this);
  }

  /// Throws IndexError unless every member lies in 1..n.
  void check_range(int n) const {
    if (!members_.empty() && (members_.front() < 1 || members_.back() > n))
      throw IndexError("argument set member outside 1.." + std::to_string(n));
  }

  /// Ascending members of 1..n not in this set.
  std::vector<Arg> complement(int n) const {
    std::vector<Arg> out;
    out.reserve(n - members_.size());
    for (Arg a = 1; a <= n; ++a)
      if (!contains(a)) out.push_back(a);
    return out;
  }

  ArgSet intersect(const ArgSet& other) const {
    std::vector<Arg> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return ArgSet(std::move(out));
  }

  friend bool operator==(const ArgSet&, const ArgSet&) = default;

  /// Cardinality first, then lexicographic.
  friend std::strong_ordering operator<=>(const ArgSet& a, const ArgSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.members_ <=> b.members_;
  }

private:
  std::vector<Arg> members_;
};

inline std::string to_string(const ArgSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const ArgSet& s) { return os << to_string(s); }

/// Bijection on 1..n stored as the label sequence (i_1, ..., i_n).
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<Arg> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<bool> seen(n + 1, false);
    for (Arg v : image_) {
      if (v < 1 || v > n) throw MalformedPermutation("permutation entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (seen[v]) throw MalformedPermutation("permutation entry " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<Arg> image) : Permutation(std::vector<Arg>(image)) {}

  static Permutation identity(int n) {
    std::vector<Arg> image(n);
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
  }

  int size() const { return static_cast<int>(image_.size()); }
  const std::vector<Arg>& image() const { return image_; }

  /// Label at 1-based position.
  Arg at(int position) const {
    if (position < 1 || position > size()) throw IndexError("position " + std::to_string(position) + " outside 1.." + std::to_string(size()));
    return image_[position - 1];
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (image_[i] != i + 1) return false;
    return true;
  }

  /// Copy with 1-based positions k and l exchanged.
  Permutation swapped(int k, int l) const {
    at(k);
    at(l);
    Permutation out = *this;
    std::swap(out.image_[k - 1], out.image_[l - 1]);
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Arg> image_;
};

/// Relabels every argument a as pi(a) = pi.at(a).
inline Framework relabel(const Framework& f, const Permutation& pi) {
  if (pi.size() != f.size()) throw MalformedPermutation("relabeling permutation has wrong length");
  std::vector<Attack> out;
  out.reserve(f.attacks().size());
  for (const auto& a : f.attacks()) out.push_back({pi.at(a.attacker), pi.at(a.target)});
  return Framework(f.size(), std::move(out));
}

inline ArgSet relabel(const ArgSet& s, const Permutation& pi) {
  std::vector<Arg> out;
  out.reserve(s.size());
  for (Arg a : s) out.push_back(pi.at(a));
  return ArgSet(std::move(out));
}

} // namespace afmx
