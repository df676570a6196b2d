#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "baire/nbhd.hpp"
#include "baire/seq.hpp"
#include "baire/tree.hpp"

namespace baire {

/// A total predicate on finite sequences, flavored by how its membership is
/// presented. The pi01 flavor decides a by evaluating a detachable witness
/// family at every n below an explicit horizon.
struct BarPredicate {
  enum class Flavor { Detachable, Monotone, Pi01 };

  std::function<bool(const FiniteSeq&)> decide;
  Flavor flavor = Flavor::Detachable;
  Nat pi01_horizon = 0;

  static BarPredicate detachable(std::function<bool(const FiniteSeq&)> decide) {
    return BarPredicate{std::move(decide), Flavor::Detachable, 0};
  }
  static BarPredicate pi01(std::function<bool(const FiniteSeq&, Nat)> family, Nat horizon) {
    auto decide = [family, horizon](const FiniteSeq& a) {
      for (Nat n = 0; n < horizon; ++n)
        if (!family(a, n)) return false;
      return true;
    };
    return BarPredicate{std::move(decide), Flavor::Pi01, horizon};
  }
};

/// Bounded bar check: Passed when every path of length `depth` over the
/// alphabet {0..branching-1} has a prefix in the predicate, otherwise the
/// first failing path in lexicographic order. Sound for refutation only;
/// the verdict carries its bound.
struct BarVerdict {
  bool passed = true;
  std::optional<FiniteSeq> witness;
  Nat branching = 0;
  Nat depth = 0;
};

BarVerdict is_bar(const BarPredicate& p, Nat branching, Nat depth);

/// P'(a) holds iff some prefix of a satisfies p. The closure is monotone
/// and contains p.
BarPredicate monotone_closure(const BarPredicate& p);

/// First (a, b) with p(a) but not p(a * b) below the bound, if any.
/// Empty for monotone predicates.
std::optional<std::pair<FiniteSeq, FiniteSeq>> find_monotonicity_violation(const BarPredicate& p,
                                                                           Nat branching, Nat depth);

/// Synthesizes a tree realizing the function presented by delta: at each
/// path, emit a leaf as soon as delta is certified constant on all
/// extensions within the (fuel, branching) horizon, else branch over
/// {0..branching-1}. The default child duplicates the highest explored
/// index's subtree and equal siblings are merged into it. Throws
/// FuelExhausted(path) when some path cannot be certified within fuel.
BrouwerTree tree_from_cbar(const CBarFn& delta, Nat branching, Nat fuel);

/// Oracle presentation of a locally continuous relation: secured_value(a)
/// yields the witness x known to relate every stream through a, or nullopt
/// when a does not yet determine one.
struct LocalRelation {
  std::function<std::optional<Nat>(const FiniteSeq&)> secured_value;
};

/// The securing predicate of the relation: holds where a witness is known.
BarPredicate bar_from_relation(const LocalRelation& r);

/// Synthesizes a tree whose evaluation refines the relation: at every
/// consumed prefix the relation is secured and the leaf carries its
/// witness. Same search and merge scheme as tree_from_cbar.
BrouwerTree refine_relation(const LocalRelation& r, Nat branching, Nat fuel);

/// Two finite 0/1 truncations subject to the premise that not both contain
/// a nonzero entry.
struct LlpoInstance {
  FiniteSeq alpha;
  FiniteSeq beta;
};

enum class Disjunct { Left, Right };

/// Outcome of the bounded omniscience demonstrator: the three verified
/// flags, the disjunct chosen, and the truncation horizon everything was
/// checked at.
struct GadgetReport {
  bool bar = false;
  bool subset = false;
  bool inductive = false;
  Disjunct disjunct = Disjunct::Left;
  Nat horizon = 0;
};

/// Runs the bar/superset construction for the instance at its truncation
/// horizon: builds the securing predicate from alpha and beta, checks it
/// bars depth 1 over the horizon's branching, checks containment in the
/// enlarged predicate and inductiveness of that predicate at the root, and
/// returns the disjunct the construction decides. Throws PremiseViolated
/// when both truncations contain a nonzero entry.
GadgetReport llpo_gadget(const LlpoInstance& inst);

}  // namespace baire
