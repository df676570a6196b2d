#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "baire/errors.hpp"
#include "baire/seq.hpp"

namespace baire {

/// Outcome of running a tree against a stream: the answer and the length of
/// the stream prefix that was read (the depth of the leaf reached).
struct EvalResult {
  Nat value;
  Nat consumed;
  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

/// A well-founded decision tree over streams of naturals.
///
/// A Leaf(n) answers n immediately; a Node consults the next stream value i
/// and descends into children[i] when listed, into the default child
/// otherwise. Infinite branching is represented as finite support plus a
/// default child that stands for every unlisted index. Trees are finite,
/// immutable, cheaply copyable, and capped at config::depth_cap() when
/// constructed.
class BrouwerTree {
 public:
  static BrouwerTree leaf(Nat value);
  static BrouwerTree node(std::map<Nat, BrouwerTree> children, BrouwerTree default_child);

  bool is_leaf() const;
  Nat leaf_value() const;                              // pre: is_leaf()
  const std::map<Nat, BrouwerTree>& children() const;  // pre: !is_leaf()
  const BrouwerTree& default_child() const;            // pre: !is_leaf()

  /// The subtree for first input n: children[n] when listed, else the
  /// default child. Throws LeafHasNoChildren on leaves.
  BrouwerTree child(Nat n) const;

  /// Length of the longest root-to-leaf path, default children included.
  Nat depth() const;

  /// Structural equality (default children compared too).
  friend bool operator==(const BrouwerTree& a, const BrouwerTree& b);

 private:
  struct Repr;
  explicit BrouwerTree(std::shared_ptr<const Repr> repr) : repr_(std::move(repr)) {}
  std::shared_ptr<const Repr> repr_;
};

inline BrouwerTree child(const BrouwerTree& t, Nat n) { return t.child(n); }
inline Nat depth(const BrouwerTree& t) { return t.depth(); }

/// Walks the tree along the stream and returns the leaf value together with
/// the number of stream entries consumed. The first leaf on the path wins.
EvalResult eval(const BrouwerTree& t, const Stream& s);

/// The neighbourhood-function value of the tree at a: n + 1 when the walk
/// along a reaches Leaf(n) at or before consuming all of a, 0 otherwise.
Nat neighborhood_value(const BrouwerTree& t, const FiniteSeq& a);

/// True iff the walk along a reaches a leaf at or before exhausting a;
/// equivalent to neighborhood_value(t, a) > 0.
bool is_secured(const BrouwerTree& t, const FiniteSeq& a);

/// Delays every answer past its own value: the returned tree t' satisfies
/// neighborhood_value(t', a) = v * sg(|a| monus v) with v =
/// neighborhood_value(t, a), so a secured sequence is always strictly longer
/// than the value it is secured with. Leaves at depth d become all-default
/// chains of length max(0, n + 2 - d) ending in the same leaf; evaluation
/// values are preserved.
BrouwerTree trim(const BrouwerTree& t);

/// Fold algebra for bar_recursor. on_node must be uniform in unlisted
/// branches: the fallback result may be used only as a stand-in for every
/// index missing from the support map, so duplicating the default child
/// into the support at an unused index must not change the fold's result.
/// The fallback result is computed at the path extended by the smallest
/// index not in the support.
template <typename R>
struct InductiveAlgebra {
  std::function<R(const FiniteSeq& path, Nat value)> on_leaf;
  std::function<R(const FiniteSeq& path, const std::map<Nat, R>& support, const R& fallback)> on_node;
};

namespace detail {
template <typename R>
R bar_recursor_at(const BrouwerTree& t, const FiniteSeq& path, const InductiveAlgebra<R>& alg) {
  if (t.is_leaf()) return alg.on_leaf(path, t.leaf_value());
  std::map<Nat, R> support;
  for (const auto& [n, c] : t.children()) support.emplace(n, bar_recursor_at(c, path.append(n), alg));
  Nat rep = 0;
  while (t.children().count(rep) != 0) ++rep;
  R fallback = bar_recursor_at(t.default_child(), path.append(rep), alg);
  return alg.on_node(path, support, fallback);
}
}  // namespace detail

/// Structural fold over the tree: the executable content of bar induction
/// for bars of the form {a | tree secured at a}. Returns the value at the
/// empty path.
template <typename R>
R bar_recursor(const BrouwerTree& t, const InductiveAlgebra<R>& alg) {
  return detail::bar_recursor_at(t, FiniteSeq{}, alg);
}

}  // namespace baire
