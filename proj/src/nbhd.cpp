#include "baire/nbhd.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace baire {

struct NeighborhoodFn::Repr {
  std::variant<BrouwerTree, NbhdTable, PointwiseFn, NeighborhoodFn> backing;
};

NeighborhoodFn NeighborhoodFn::from_tree(BrouwerTree t) {
  return NeighborhoodFn(std::make_shared<Repr>(Repr{std::move(t)}));
}

NeighborhoodFn NeighborhoodFn::from_table(NbhdTable table) {
  return NeighborhoodFn(std::make_shared<Repr>(Repr{std::move(table)}));
}

NeighborhoodFn NeighborhoodFn::from_modulus(PointwiseFn f) {
  if (!f.value || !f.modulus) throw std::invalid_argument("from_modulus: function must carry a modulus witness");
  return NeighborhoodFn(std::make_shared<Repr>(Repr{std::move(f)}));
}

NeighborhoodFn NeighborhoodFn::saturated(NeighborhoodFn inner) {
  return NeighborhoodFn(std::make_shared<Repr>(Repr{std::move(inner)}));
}

NeighborhoodFn::Backing NeighborhoodFn::backing() const {
  switch (repr_->backing.index()) {
    case 0: return Backing::Tree;
    case 1: return Backing::Table;
    case 2: return Backing::Modulus;
    default: return Backing::Saturated;
  }
}

const BrouwerTree* NeighborhoodFn::tree() const { return std::get_if<BrouwerTree>(&repr_->backing); }
const NbhdTable* NeighborhoodFn::table() const { return std::get_if<NbhdTable>(&repr_->backing); }
const PointwiseFn* NeighborhoodFn::pointwise() const { return std::get_if<PointwiseFn>(&repr_->backing); }
const NeighborhoodFn* NeighborhoodFn::inner() const { return std::get_if<NeighborhoodFn>(&repr_->backing); }

Nat NeighborhoodFn::apply(const FiniteSeq& a) const {
  if (const auto* t = tree()) return neighborhood_value(*t, a);
  if (const auto* tbl = table()) return tbl->value(a);
  if (const auto* f = pointwise()) {
    for (Nat len = 0; len <= a.size(); ++len) {
      Stream probe = extend(a.prefix(len), Stream::zeros());
      if (len >= f->modulus(probe)) return checked_add(f->value(extend(a, Stream::zeros())), 1);
    }
    return 0;
  }
  const NeighborhoodFn& in = *inner();
  for (Nat len = 0; len <= a.size(); ++len) {
    if (in.apply(a.prefix(len)) > 0) return len + 1;
  }
  return 0;
}

namespace {

// Preorder walk over the alphabet tree; reports the first violation found.
bool check_k0_walk(const NeighborhoodFn& g, FiniteSeq& path, Nat depth, Nat alphabet,
                   const std::optional<std::pair<FiniteSeq, Nat>>& secured, CheckReport& out) {
  Nat v = g.apply(path);
  std::optional<std::pair<FiniteSeq, Nat>> here = secured;
  if (here) {
    if (v != here->second) {
      out.passed = false;
      out.kind = CheckReport::Kind::Constancy;
      out.at = here->first;
      out.extension = FiniteSeq(
          std::vector<Nat>(path.items().begin() + static_cast<std::ptrdiff_t>(here->first.size()),
                           path.items().end()));
      return false;
    }
  } else if (v > 0) {
    here = std::make_pair(path, v);
  }
  if (path.size() == depth) {
    if (!here) {
      out.passed = false;
      out.kind = CheckReport::Kind::Barring;
      out.at = path;
      return false;
    }
    return true;
  }
  for (Nat i = 0; i < alphabet; ++i) {
    path = path.append(i);
    bool ok = check_k0_walk(g, path, depth, alphabet, here, out);
    path = path.prefix(path.size() - 1);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

CheckReport check_k0(const NeighborhoodFn& g, Nat depth, Nat alphabet) {
  if (alphabet == 0) throw std::invalid_argument("check_k0: alphabet must be nonempty");
  CheckReport report;
  report.depth = depth;
  report.alphabet = alphabet;
  FiniteSeq path;
  check_k0_walk(g, path, depth, alphabet, std::nullopt, report);
  return report;
}

Nat modulus_from_k0(const NeighborhoodFn& g, const Stream& s, Nat fuel) {
  for (Nat n = 0; n <= fuel; ++n) {
    if (g.apply(take(s, n)) > 0) return n;
  }
  throw FuelExhausted(fuel);
}

EvalResult induced_eval(const NeighborhoodFn& g, const Stream& s, Nat fuel) {
  Nat n = modulus_from_k0(g, s, fuel);
  return EvalResult{g.apply(take(s, n)) - 1, n};
}

NeighborhoodFn k0_from_modulus(PointwiseFn f) { return NeighborhoodFn::from_modulus(std::move(f)); }

NeighborhoodFn saturate(const NeighborhoodFn& g) { return NeighborhoodFn::saturated(g); }

struct CBarFn::Repr {
  DeltaFn delta;
  StableFn stable;  // may be null
  std::optional<NbhdTable> table;
};

CBarFn CBarFn::from_function(DeltaFn delta) {
  return CBarFn(std::make_shared<Repr>(Repr{std::move(delta), nullptr, std::nullopt}));
}

CBarFn CBarFn::from_function(DeltaFn delta, StableFn certificate) {
  return CBarFn(std::make_shared<Repr>(Repr{std::move(delta), std::move(certificate), std::nullopt}));
}

CBarFn CBarFn::from_table(NbhdTable table) {
  auto repr = std::make_shared<Repr>();
  repr->table = std::move(table);
  const NbhdTable* t = &*repr->table;
  repr->delta = [t](const FiniteSeq& a) { return t->value(a); };
  // Constant on all extensions iff the default rule is constant, the value
  // at a already equals it, and no deeper entry overrides it.
  repr->stable = [t](const FiniteSeq& a) {
    if (t->fallback.slope != 0) return false;
    if (t->value(a) != t->fallback.base) return false;
    for (const auto& [k, v] : t->entries) {
      if (k.size() > a.size() && a.is_prefix_of(k) && v != t->fallback.base) return false;
    }
    return true;
  };
  return CBarFn(std::move(repr));
}

Nat CBarFn::operator()(const FiniteSeq& a) const { return repr_->delta(a); }

bool CBarFn::certified_stable(const FiniteSeq& a) const {
  return repr_->stable ? repr_->stable(a) : false;
}

const NbhdTable* CBarFn::table() const { return repr_->table ? &*repr_->table : nullptr; }

CBarFn delta_from_function(const PointwiseFn& f) {
  if (!f.value || !f.modulus) throw std::invalid_argument("delta_from_function: function must carry a modulus witness");
  auto delta = [f](const FiniteSeq& a) { return f.value(extend(a, Stream::zeros())); };
  auto stable = [f](const FiniteSeq& a) { return a.size() >= f.modulus(extend(a, Stream::zeros())); };
  return CBarFn::from_function(delta, stable);
}

namespace {

bool level_constant(const CBarFn& delta, FiniteSeq& base, Nat len, Nat alphabet, Nat want) {
  if (len == 0) return delta(base) == want;
  for (Nat i = 0; i < alphabet; ++i) {
    base = base.append(i);
    bool ok = level_constant(delta, base, len - 1, alphabet, want);
    base = base.prefix(base.size() - 1);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

namespace detail {

// All extensions of `base` by 1..budget symbols take the value `want`.
// Level-by-level so that a mismatch close to the base is found without
// first exhausting a deep subtree.
bool extensions_constant(const CBarFn& delta, FiniteSeq base, Nat budget, Nat alphabet, Nat want) {
  for (Nat len = 1; len <= budget; ++len) {
    if (!level_constant(delta, base, len, alphabet, want)) return false;
  }
  return true;
}

}  // namespace detail

Nat eval_k1(const CBarFn& delta, const Stream& s, Nat fuel, Nat alphabet) {
  if (alphabet == 0) throw std::invalid_argument("eval_k1: alphabet must be nonempty");
  Nat last_change = 1;  // the change set includes 1 by definition
  Nat prev = delta(take(s, 0));
  for (Nat m = 0; m < fuel; ++m) {
    Nat next = delta(take(s, m + 1));
    if (prev != next) last_change = std::max(last_change, m);
    prev = next;
  }
  Nat stabilized = last_change + 1;
  if (stabilized > fuel) throw FuelExhausted(fuel, take(s, fuel));
  Nat result = delta(take(s, stabilized));
  // The value settles at `stabilized` along s, but constancy on all
  // extensions may only become certifiable at a longer prefix (the scan
  // above already guarantees the value does not change in between).
  for (Nat n = 0; n <= fuel; ++n) {
    FiniteSeq base = take(s, n);
    if (delta.certified_stable(base)) return result;
    if (n >= stabilized && n < fuel &&
        detail::extensions_constant(delta, base, fuel - n, alphabet, delta(base)))
      return result;
  }
  throw FuelExhausted(fuel, take(s, stabilized));
}

namespace {

// Structural uniformity of g across branches below `path` that t does not
// list. For a tree backing every unlisted subtree must equal the default
// child; for a table backing every entry under an unlisted branch must
// restate the default rule.
void require_uniform_default(const NeighborhoodFn& g, const FiniteSeq& path,
                             const std::map<Nat, BrouwerTree>& support) {
  if (const auto* u = g.tree()) {
    BrouwerTree cur = *u;
    for (Nat i = 0; i < path.size() && !cur.is_leaf(); ++i) cur = cur.child(path.at(i));
    if (cur.is_leaf()) return;  // constant below path
    for (const auto& [n, sub] : cur.children()) {
      if (support.count(n) == 0 && !(sub == cur.default_child())) throw NonUniformDefault(path, n);
    }
    return;
  }
  const NbhdTable& tbl = *g.table();
  for (const auto& [k, v] : tbl.entries) {
    if (k.size() <= path.size() || !path.is_prefix_of(k)) continue;
    Nat branch = k.at(path.size());
    if (support.count(branch) == 0 && v != tbl.fallback.value(k)) throw NonUniformDefault(path, branch);
  }
}

BrouwerTree upgrade_at(const BrouwerTree& t, const NeighborhoodFn& g, const FiniteSeq& path) {
  Nat v = g.apply(path);
  if (v > 0) return BrouwerTree::leaf(v - 1);
  if (t.is_leaf()) throw DominationViolated(path);
  require_uniform_default(g, path, t.children());
  std::map<Nat, BrouwerTree> children;
  for (const auto& [n, c] : t.children()) children.emplace(n, upgrade_at(c, g, path.append(n)));
  Nat rep = 0;
  while (t.children().count(rep) != 0) ++rep;
  BrouwerTree fallback = upgrade_at(t.default_child(), g, path.append(rep));
  return BrouwerTree::node(std::move(children), std::move(fallback));
}

}  // namespace

BrouwerTree upgrade_dominated(const BrouwerTree& t, const NeighborhoodFn& g) {
  if (g.backing() != NeighborhoodFn::Backing::Tree && g.backing() != NeighborhoodFn::Backing::Table)
    throw std::invalid_argument("upgrade_dominated: backing must be a tree or a table");
  return upgrade_at(t, g, FiniteSeq{});
}

}  // namespace baire
