#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afmx/bool_matrix.hpp"
#include "afmx/framework.hpp"

namespace afmx {

namespace detail {
struct NormFormBuilder;
}

/// Attack matrix of a framework under a labelling permutation: cell (s,t) is
/// set iff labels[s] attacks labels[t]. Positions are 1-based throughout the
/// public interface; cells() exposes the underlying 0-based BoolMatrix.
class AttackMatrix {
public:
  AttackMatrix() = default;
  AttackMatrix(Permutation labels, BoolMatrix cells) : labels_(std::move(labels)), cells_(std::move(cells)) {
    if (cells_.rows() != labels_.size() || cells_.cols() != labels_.size())
      throw IndexError("attack matrix shape does not match its labels");
  }

  int order() const { return labels_.size(); }
  const Permutation& labels() const { return labels_; }
  const BoolMatrix& cells() const { return cells_; }

  bool cell(int s, int t) const {
    check_position(s);
    check_position(t);
    return cells_.get(s - 1, t - 1);
  }

  bool is_natural() const { return labels_.is_identity(); }

  void check_position(int p) const {
    if (p < 1 || p > order()) throw IndexError("matrix position " + std::to_string(p) + " outside 1.." + std::to_string(order()));
  }

  friend bool operator==(const AttackMatrix&, const AttackMatrix&) = default;

private:
  friend AttackMatrix dual_interchange(const AttackMatrix&, int, int);
  friend struct detail::NormFormBuilder;

  void interchange(int k, int l) {
    if (k == l) return;
    cells_.swap_rows(k - 1, l - 1);
    cells_.swap_cols(k - 1, l - 1);
    labels_ = labels_.swapped(k, l);
  }

  Permutation labels_;
  BoolMatrix cells_;
};

inline AttackMatrix build_matrix(const Framework& f, const Permutation& p) {
  const int n = f.size();
  if (p.size() != n)
    throw MalformedPermutation("permutation has length " + std::to_string(p.size()) + ", framework has " + std::to_string(n) + " arguments");
  std::vector<int> position(n + 1);
  for (int s = 0; s < n; ++s) position[p.image()[s]] = s;
  BoolMatrix cells(n, n);
  for (const auto& a : f.attacks()) cells.set(position[a.attacker], position[a.target]);
  return AttackMatrix(p, std::move(cells));
}

/// M(F): the matrix under the natural permutation (1, ..., n).
inline AttackMatrix natural_matrix(const Framework& f) { return build_matrix(f, Permutation::identity(f.size())); }

inline Framework to_framework(const AttackMatrix& m) {
  std::vector<Attack> attacks;
  const auto& labels = m.labels().image();
  for (int s = 0; s < m.order(); ++s)
    for (int t = 0; t < m.order(); ++t)
      if (m.cells().get(s, t)) attacks.push_back({labels[s], labels[t]});
  return Framework(m.order(), std::move(attacks));
}

/// k <-> l: swap rows k and l, then columns k and l. The result is the matrix
/// of the same framework under the labels with positions k and l exchanged.
inline AttackMatrix dual_interchange(const AttackMatrix& m, int k, int l) {
  m.check_position(k);
  m.check_position(l);
  AttackMatrix out = m;
  out.interchange(k, l);
  return out;
}

/// The four blocks of a candidate set S read off the natural matrix.
/// Row index set first, column index set second:
///   cf = S x S, s = S x (A\S), a = (A\S) x S, c = (A\S) x (A\S).
struct SubBlocks {
  ArgSet members;
  std::vector<Arg> complement;
  BoolMatrix cf;
  BoolMatrix s;
  BoolMatrix a;
  BoolMatrix c;

  /// [[cf, s], [a, c]]
  BoolMatrix assemble() const { return BoolMatrix::assemble(cf, s, a, c); }
};

inline SubBlocks extract_subblocks(const AttackMatrix& natural, const ArgSet& set) {
  if (!natural.is_natural()) throw PreconditionViolation("sub-blocks are read from the natural-permutation matrix");
  set.check_range(natural.order());
  SubBlocks out;
  out.members = set;
  out.complement = set.complement(natural.order());
  std::vector<int> in_idx, out_idx;
  in_idx.reserve(set.size());
  out_idx.reserve(out.complement.size());
  for (Arg a : set) in_idx.push_back(a - 1);
  for (Arg a : out.complement) out_idx.push_back(a - 1);
  const BoolMatrix& m = natural.cells();
  out.cf = m.pick(in_idx, in_idx);
  out.s = m.pick(in_idx, out_idx);
  out.a = m.pick(out_idx, in_idx);
  out.c = m.pick(out_idx, out_idx);
  return out;
}

/// First attack with both ends inside `s`, if any.
inline std::optional<Attack> internal_attack(const Framework& f, const ArgSet& s) {
  for (const auto& a : f.attacks())
    if (s.contains(a.attacker) && s.contains(a.target)) return a;
  return std::nullopt;
}

/// Block-partitioned matrix for a conflict-free S:
///
///   [ O_{k,k}  O_{k,q}  S_{k,l} ]
///   [ A_{q,k}  C_{q,q}  E_{q,l} ]
///   [ F_{l,k}  G_{l,q}  H_{l,l} ]
///
/// The first k labels are S, the next q are the outside arguments no member
/// of S attacks, and every column of S_{k,l} is non-zero.
struct NormForm {
  AttackMatrix matrix;
  int k = 0;
  int q = 0;
  int l = 0;
  /// Dual interchanges applied to M(F), in order, as 1-based position pairs.
  std::vector<std::pair<int, int>> interchanges;

  BoolMatrix top_left() const { return matrix.cells().slice(0, k, 0, k + q); }
  BoolMatrix s_block() const { return matrix.cells().slice(0, k, k + q, l); }
  BoolMatrix a_block() const { return matrix.cells().slice(k, q, 0, k); }
  BoolMatrix c_block() const { return matrix.cells().slice(k, q, k, q); }
  BoolMatrix e_block() const { return matrix.cells().slice(k, q, k + q, l); }
  BoolMatrix f_block() const { return matrix.cells().slice(k + q, l, 0, k); }
  BoolMatrix g_block() const { return matrix.cells().slice(k + q, l, k, q); }
  BoolMatrix h_block() const { return matrix.cells().slice(k + q, l, k + q, l); }

  /// O_{k,k} and O_{k,q} are zero and every column of S_{k,l} is non-zero.
  bool well_formed() const {
    if (k + q + l != matrix.order()) return false;
    if (!top_left().is_zero()) return false;
    const BoolMatrix s = s_block();
    for (int c = 0; c < s.cols(); ++c)
      if (!s.column_nonzero(c)) return false;
    return true;
  }
};

namespace detail {

/// Moves every label satisfying `belongs` into positions [begin, end].
/// Misplaced positions inside the region, ascending, are paired with the
/// belonging labels after the region, ascending by position.
template <class Belongs, class Swap>
void gather_region(const std::vector<Arg>& labels, int begin, int end, Belongs belongs, Swap swap) {
  std::vector<int> misplaced, incoming;
  for (int p = begin; p <= end; ++p)
    if (!belongs(labels[p - 1])) misplaced.push_back(p);
  for (int p = end + 1; p <= static_cast<int>(labels.size()); ++p)
    if (belongs(labels[p - 1])) incoming.push_back(p);
  if (misplaced.size() != incoming.size()) throw InvariantFailure("norm-form region count mismatch");
  for (std::size_t i = 0; i < misplaced.size(); ++i) swap(misplaced[i], incoming[i]);
}

inline void require_conflict_free(const Framework& f, const ArgSet& s) {
  s.check_range(f.size());
  if (auto bad = internal_attack(f, s))
    throw PreconditionViolation("candidate set " + to_string(s) + " is not conflict-free: attack " + to_string(*bad));
}

struct NormFormBuilder {
  static NormForm run(const Framework& f, const ArgSet& s) {
    detail::require_conflict_free(f, s);
    NormForm nf;
    nf.matrix = natural_matrix(f);
    nf.k = static_cast<int>(s.size());
    const int n = f.size();
    auto swap = [&nf](int a, int b) {
      nf.matrix.interchange(a, b);
      nf.interchanges.emplace_back(a, b);
    };

    detail::gather_region(nf.matrix.labels().image(), 1, nf.k, [&s](Arg a) { return s.contains(a); }, swap);

    // Zero columns of M^s, read from the matrix as it now stands.
    std::vector<bool> zero_column(n + 1, false);
    for (int p = nf.k + 1; p <= n; ++p) {
      bool zero = true;
      for (int r = 1; r <= nf.k && zero; ++r) zero = !nf.matrix.cell(r, p);
      if (zero) {
        zero_column[nf.matrix.labels().at(p)] = true;
        ++nf.q;
      }
    }
    detail::gather_region(nf.matrix.labels().image(), nf.k + 1, nf.k + nf.q,
                          [&zero_column](Arg a) { return zero_column[a]; }, swap);
    nf.l = n - nf.k - nf.q;
    return nf;
  }
};

} // namespace detail

/// Norm form of M(F) for a conflict-free S, reached by dual interchanges from
/// the natural matrix. Throws PreconditionViolation naming an internal attack
/// when S is not conflict-free.
inline NormForm to_norm_form(const Framework& f, const ArgSet& s) { return detail::NormFormBuilder::run(f, s); }

/// Label sequence of the norm form computed from the attack relation alone,
/// without touching a matrix. build_matrix(f, norm_form_permutation(f, s))
/// equals to_norm_form(f, s).matrix.
inline Permutation norm_form_permutation(const Framework& f, const ArgSet& s) {
  detail::require_conflict_free(f, s);
  const int n = f.size();
  const int k = static_cast<int>(s.size());
  std::vector<Arg> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  auto swap = [&labels](int a, int b) { std::swap(labels[a - 1], labels[b - 1]); };

  detail::gather_region(labels, 1, k, [&s](Arg a) { return s.contains(a); }, swap);

  std::vector<bool> attacked_by_s(n + 1, false);
  for (const auto& a : f.attacks())
    if (s.contains(a.attacker)) attacked_by_s[a.target] = true;
  int q = 0;
  for (Arg a = 1; a <= n; ++a)
    if (!s.contains(a) && !attacked_by_s[a]) ++q;
  detail::gather_region(labels, k + 1, k + q, [&](Arg a) { return !s.contains(a) && !attacked_by_s[a]; }, swap);
  return Permutation(std::move(labels));
}

} // namespace afmx
