#pragma once

#include <functional>
#include <string>
#include <vector>

#include "baire/nbhd.hpp"
#include "baire/seq.hpp"
#include "baire/tree.hpp"

namespace baire {

/// A function on binary streams that depends only on the first `arity`
/// bits, tabulated: outputs[i] is the value on the length-arity prefix
/// whose bits spell i most-significant-first.
struct TruthTable {
  Nat arity = 0;
  std::vector<Nat> outputs;  // size 2^arity

  /// Value at a binary prefix; bits beyond arity are ignored.
  Nat at(const FiniteSeq& bits) const;
  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

/// A total decidable predicate on finite binary sequences.
struct DetachablePredicate {
  std::string name;
  std::function<bool(const FiniteSeq&)> decide;
};

/// True when every node of the tree has support exactly {0,1}.
bool is_binary_tree(const BrouwerTree& t);

/// Builds a binary tree evaluating the table: arity 0 gives a leaf, arity
/// k+1 branches on the first bit and recurses on the restricted tables.
/// The result's depth equals the arity.
BrouwerTree tree_from_uniform(const TruthTable& tt);

/// A uniform-continuity modulus for the function the tree evaluates: all
/// binary streams agreeing on the first uniform_modulus(t) values get equal
/// answers. Equals depth(t).
Nat uniform_modulus(const BrouwerTree& t);

/// Least N <= max_depth such that every binary sequence of length N has a
/// prefix satisfying p, by breadth-first search. Throws NotBarWithinDepth
/// with the first unsecured maximal path when no bound exists within
/// max_depth.
Nat fan_bound(const DetachablePredicate& p, Nat max_depth);

/// The indicator of d, viewed as a c-bar presentation.
CBarFn cset_to_delta(const DetachablePredicate& d);

/// The detachable predicate holding where delta agrees with both one-step
/// binary extensions.
DetachablePredicate delta_to_cset(const CBarFn& delta);

/// Pointwise sg: collapses a stream of naturals onto Cantor space.
Stream gamma_embed(const Stream& s);
FiniteSeq gamma_embed_seq(const FiniteSeq& a);

}  // namespace baire
