#include "baire/bars.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace baire {

namespace {

// First length-`depth` path with no prefix in p, preorder.
bool is_bar_walk(const BarPredicate& p, FiniteSeq& path, Nat branching, Nat depth, BarVerdict& out) {
  if (p.decide(path)) return true;
  if (path.size() == depth) {
    out.passed = false;
    out.witness = path;
    return false;
  }
  for (Nat i = 0; i < branching; ++i) {
    path = path.append(i);
    bool ok = is_bar_walk(p, path, branching, depth, out);
    path = path.prefix(path.size() - 1);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

BarVerdict is_bar(const BarPredicate& p, Nat branching, Nat depth) {
  BarVerdict v;
  v.branching = branching;
  v.depth = depth;
  FiniteSeq path;
  is_bar_walk(p, path, branching, depth, v);
  return v;
}

BarPredicate monotone_closure(const BarPredicate& p) {
  auto decide = p.decide;
  BarPredicate out;
  out.flavor = BarPredicate::Flavor::Monotone;
  out.decide = [decide](const FiniteSeq& a) {
    for (Nat len = 0; len <= a.size(); ++len) {
      if (decide(a.prefix(len))) return true;
    }
    return false;
  };
  return out;
}

namespace {

bool monotone_walk(const BarPredicate& p, FiniteSeq& path, Nat branching, Nat depth, bool above,
                   FiniteSeq secured_at, std::optional<std::pair<FiniteSeq, FiniteSeq>>& out) {
  bool here = p.decide(path);
  if (above && !here) {
    out = std::make_pair(secured_at,
                         FiniteSeq(std::vector<Nat>(path.items().begin() + static_cast<std::ptrdiff_t>(secured_at.size()),
                                                    path.items().end())));
    return false;
  }
  if (!above && here) secured_at = path;
  if (path.size() == depth) return true;
  for (Nat i = 0; i < branching; ++i) {
    path = path.append(i);
    bool ok = monotone_walk(p, path, branching, depth, above || here, secured_at, out);
    path = path.prefix(path.size() - 1);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<FiniteSeq, FiniteSeq>> find_monotonicity_violation(const BarPredicate& p,
                                                                           Nat branching, Nat depth) {
  std::optional<std::pair<FiniteSeq, FiniteSeq>> out;
  FiniteSeq path;
  monotone_walk(p, path, branching, depth, false, FiniteSeq{}, out);
  return out;
}

namespace {

bool certified_stable_at(const CBarFn& delta, const FiniteSeq& path, Nat branching, Nat fuel) {
  if (delta.certified_stable(path)) return true;
  Nat budget = monus(fuel, path.size());
  if (budget == 0) return false;
  return detail::extensions_constant(delta, path, budget, branching, delta(path));
}

// Shared recursive search for tree_from_cbar and refine_relation: stop()
// yields the leaf value once the path is settled, and the default child
// duplicates the highest explored index's subtree with equal siblings
// merged into it.
template <typename Stop>
BrouwerTree synthesize_walk(const Stop& stop, FiniteSeq& path, Nat branching, Nat fuel) {
  if (std::optional<Nat> value = stop(path)) return BrouwerTree::leaf(*value);
  if (path.size() >= fuel) throw FuelExhausted(fuel, path);
  std::vector<BrouwerTree> kids;
  kids.reserve(branching);
  for (Nat i = 0; i < branching; ++i) {
    path = path.append(i);
    kids.push_back(synthesize_walk(stop, path, branching, fuel));
    path = path.prefix(path.size() - 1);
  }
  BrouwerTree fallback = kids.back();
  std::map<Nat, BrouwerTree> support;
  for (Nat i = 0; i + 1 < branching; ++i) {
    if (!(kids[i] == fallback)) support.emplace(i, kids[i]);
  }
  return BrouwerTree::node(std::move(support), std::move(fallback));
}

}  // namespace

BrouwerTree tree_from_cbar(const CBarFn& delta, Nat branching, Nat fuel) {
  if (branching == 0) throw std::invalid_argument("tree_from_cbar: branching must be nonzero");
  FiniteSeq path;
  auto stop = [&](FiniteSeq& p) -> std::optional<Nat> {
    if (certified_stable_at(delta, p, branching, fuel)) return delta(p);
    return std::nullopt;
  };
  return synthesize_walk(stop, path, branching, fuel);
}

BarPredicate bar_from_relation(const LocalRelation& r) {
  auto secured = r.secured_value;
  return BarPredicate::detachable([secured](const FiniteSeq& a) { return secured(a).has_value(); });
}

BrouwerTree refine_relation(const LocalRelation& r, Nat branching, Nat fuel) {
  if (branching == 0) throw std::invalid_argument("refine_relation: branching must be nonzero");
  FiniteSeq path;
  auto stop = [&](const FiniteSeq& p) { return r.secured_value(p); };
  return synthesize_walk(stop, path, branching, fuel);
}

GadgetReport llpo_gadget(const LlpoInstance& inst) {
  auto has_nonzero = [](const FiniteSeq& a) {
    return std::any_of(a.begin(), a.end(), [](Nat x) { return x != 0; });
  };
  if (has_nonzero(inst.alpha) && has_nonzero(inst.beta)) throw PremiseViolated();

  Nat horizon = std::max(inst.alpha.size(), inst.beta.size());
  auto at = [](const FiniteSeq& a, Nat n) { return n < a.size() ? a.at(n) : 0; };
  bool alpha_zero = !has_nonzero(inst.alpha);
  bool beta_zero = !has_nonzero(inst.beta);

  const FiniteSeq alpha = inst.alpha;
  const FiniteSeq beta = inst.beta;
  BarPredicate p = BarPredicate::pi01(
      [alpha, beta, at](const FiniteSeq& a, Nat n) {
        if (a.empty()) return at(beta, n) == 0;
        if (a.size() == 1) return at(alpha, a.at(0)) == 0;
        return false;
      },
      horizon);
  auto q = [&](const FiniteSeq& a) { return p.decide(a) || (a.empty() && alpha_zero); };

  GadgetReport report;
  report.horizon = horizon;
  report.bar = is_bar(p, horizon, 1).passed;

  report.subset = p.decide(FiniteSeq{}) ? q(FiniteSeq{}) : true;
  bool all_singletons_in_q = true;
  for (Nat n = 0; n < horizon; ++n) {
    FiniteSeq single{n};
    if (p.decide(single) && !q(single)) report.subset = false;
    if (!q(single)) all_singletons_in_q = false;
  }
  report.inductive = !all_singletons_in_q || q(FiniteSeq{});
  report.disjunct = alpha_zero ? Disjunct::Left : Disjunct::Right;
  // beta_zero is implied by the premise whenever alpha is not all zero
  (void)beta_zero;
  return report;
}

}  // namespace baire
