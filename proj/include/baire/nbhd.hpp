#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "baire/errors.hpp"
#include "baire/seq.hpp"
#include "baire/tree.hpp"

namespace baire {

/// A pointwise continuous function on streams packaged with an explicit
/// modulus witness: modulus(s) is a prefix length within which value(s) is
/// determined. Rules must be pure.
struct PointwiseFn {
  std::string name;
  std::function<Nat(const Stream&)> value;
  std::function<Nat(const Stream&)> modulus;
};

/// Default rule for table-backed functions: value = base + slope * |a|.
/// slope == 0 is the constant rule.
struct TableDefaultRule {
  Nat base = 0;
  Nat slope = 0;
  Nat value(const FiniteSeq& a) const { return checked_add(base, checked_mul(slope, a.size())); }
  friend bool operator==(const TableDefaultRule&, const TableDefaultRule&) = default;
};

/// Finite map from sequences to naturals with a default rule for unlisted
/// keys. Lookup is exact-match: an entry shadows the default only at its
/// own key.
struct NbhdTable {
  std::map<FiniteSeq, Nat> entries;
  TableDefaultRule fallback;

  Nat value(const FiniteSeq& a) const {
    auto it = entries.find(a);
    return it != entries.end() ? it->second : fallback.value(a);
  }
  friend bool operator==(const NbhdTable&, const NbhdTable&) = default;
};

/// A function from finite sequences to naturals with neighbourhood-function
/// semantics: it should secure every stream and, once positive, stay
/// constant on extensions. Membership is semantic; check_k0 tests it at a
/// bound. Four backings: tree walks, exact tables, modulus-derived
/// functions, and saturations of an inner function.
class NeighborhoodFn {
 public:
  enum class Backing { Tree, Table, Modulus, Saturated };

  static NeighborhoodFn from_tree(BrouwerTree t);
  static NeighborhoodFn from_table(NbhdTable table);
  static NeighborhoodFn from_modulus(PointwiseFn f);
  static NeighborhoodFn saturated(NeighborhoodFn inner);

  Nat apply(const FiniteSeq& a) const;

  Backing backing() const;
  const BrouwerTree* tree() const;        // non-null iff Backing::Tree
  const NbhdTable* table() const;         // non-null iff Backing::Table
  const PointwiseFn* pointwise() const;   // non-null iff Backing::Modulus
  const NeighborhoodFn* inner() const;    // non-null iff Backing::Saturated

 private:
  struct Repr;
  explicit NeighborhoodFn(std::shared_ptr<const Repr> repr) : repr_(std::move(repr)) {}
  std::shared_ptr<const Repr> repr_;
};

/// Compiles a tree into its neighbourhood function.
inline NeighborhoodFn to_neighborhood(const BrouwerTree& t) { return NeighborhoodFn::from_tree(t); }

inline Nat apply(const NeighborhoodFn& g, const FiniteSeq& a) { return g.apply(a); }

/// Outcome of the bounded neighbourhood-function check. A barring violation
/// is a maximal-depth path with no secured prefix; a constancy violation is
/// a secured sequence whose extension changes the value. `at` holds the
/// unsecured path (barring) or the secured base (constancy); `extension`
/// is meaningful for constancy only. The first violation in preorder over
/// the alphabet tree is reported.
struct CheckReport {
  enum class Kind { None, Barring, Constancy };
  bool passed = true;
  Kind kind = Kind::None;
  FiniteSeq at;
  FiniteSeq extension;
  Nat depth = 0;
  Nat alphabet = 0;
};

/// Exhaustively tests both neighbourhood-function laws over all sequences of
/// length <= depth on the alphabet {0..alphabet-1}.
CheckReport check_k0(const NeighborhoodFn& g, Nat depth, Nat alphabet);

/// Least n <= fuel with g(take(s, n)) > 0; throws FuelExhausted when no
/// prefix within fuel is secured.
Nat modulus_from_k0(const NeighborhoodFn& g, const Stream& s, Nat fuel);

/// The function induced by g: scans prefixes until secured and returns the
/// secured value minus one, along with the prefix length used.
EvalResult induced_eval(const NeighborhoodFn& g, const Stream& s, Nat fuel);

/// Builds a neighbourhood function from a pointwise function with a modulus
/// witness: positive (value + 1) exactly on sequences some prefix of which
/// is at least as long as the modulus demands at that prefix.
NeighborhoodFn k0_from_modulus(PointwiseFn f);

/// Replaces every value of g by the length of the shortest secured prefix
/// plus one; the induced function of the result is the canonical modulus
/// of g.
NeighborhoodFn saturate(const NeighborhoodFn& g);

/// A total function from finite sequences to naturals meant to stabilize
/// along every stream (the presentation of a c-bar). Optionally carries a
/// sound stability certificate: certified_stable(a) == true guarantees the
/// function is constant on every extension of a. Serializable backings
/// (tables, catalog functions) provide one; raw functions fall back to the
/// bounded exhaustive check inside eval_k1 and tree synthesis.
class CBarFn {
 public:
  using DeltaFn = std::function<Nat(const FiniteSeq&)>;
  using StableFn = std::function<bool(const FiniteSeq&)>;

  static CBarFn from_function(DeltaFn delta);
  static CBarFn from_function(DeltaFn delta, StableFn certificate);
  static CBarFn from_table(NbhdTable table);

  Nat operator()(const FiniteSeq& a) const;
  /// Sound but incomplete: false means "not certified", not "unstable".
  bool certified_stable(const FiniteSeq& a) const;
  const NbhdTable* table() const;  // non-null iff table-backed

 private:
  struct Repr;
  explicit CBarFn(std::shared_ptr<const Repr> repr) : repr_(std::move(repr)) {}
  std::shared_ptr<const Repr> repr_;
};

/// delta(a) = f(a * 0^ω), with a stability certificate derived from f's
/// modulus witness.
CBarFn delta_from_function(const PointwiseFn& f);

/// Evaluates the function presented by delta at s. Scans m < fuel for the
/// positions where delta changes along s (the change set always includes 1,
/// matching the asymmetric union in its defining equation), then certifies
/// that delta is constant on all extensions of the stabilized prefix,
/// via delta's certificate when available, else exhaustively over the
/// alphabet up to the fuel horizon. Throws FuelExhausted when stabilization
/// cannot be certified within fuel.
Nat eval_k1(const CBarFn& delta, const Stream& s, Nat fuel, Nat alphabet);

namespace detail {
bool extensions_constant(const CBarFn& delta, FiniteSeq base, Nat budget, Nat alphabet, Nat want);
}

/// Rebuilds a dominating neighbourhood function g (tree-backed, or
/// table-backed with a uniform default beyond the tree's support) as a tree
/// shaped like t: wherever g is already positive a leaf is emitted, and the
/// result's neighbourhood function agrees with g on all sequences up to
/// depth(t) + 1. Throws DominationViolated when t is secured somewhere g is
/// not, NonUniformDefault when g distinguishes unlisted branches.
BrouwerTree upgrade_dominated(const BrouwerTree& t, const NeighborhoodFn& g);

}  // namespace baire
