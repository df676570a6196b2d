#include "baire/tree.hpp"

#include <algorithm>
#include <utility>

#include "baire/config.hpp"

namespace baire {

struct BrouwerTree::Repr {
  std::optional<Nat> leaf;
  std::map<Nat, BrouwerTree> children;
  std::optional<BrouwerTree> fallback;
  Nat depth = 0;
};

BrouwerTree BrouwerTree::leaf(Nat value) {
  auto repr = std::make_shared<Repr>();
  repr->leaf = value;
  return BrouwerTree(std::move(repr));
}

BrouwerTree BrouwerTree::node(std::map<Nat, BrouwerTree> children, BrouwerTree default_child) {
  Nat d = default_child.depth();
  for (const auto& [n, c] : children) d = std::max(d, c.depth());
  d += 1;
  if (d > config::depth_cap()) throw DepthBudgetExceeded(d, config::depth_cap());
  auto repr = std::make_shared<Repr>();
  repr->children = std::move(children);
  repr->fallback = std::move(default_child);
  repr->depth = d;
  return BrouwerTree(std::move(repr));
}

bool BrouwerTree::is_leaf() const { return repr_->leaf.has_value(); }

Nat BrouwerTree::leaf_value() const { return *repr_->leaf; }

const std::map<Nat, BrouwerTree>& BrouwerTree::children() const { return repr_->children; }

const BrouwerTree& BrouwerTree::default_child() const { return *repr_->fallback; }

BrouwerTree BrouwerTree::child(Nat n) const {
  if (is_leaf()) throw LeafHasNoChildren();
  auto it = repr_->children.find(n);
  return it != repr_->children.end() ? it->second : *repr_->fallback;
}

Nat BrouwerTree::depth() const { return repr_->depth; }

bool operator==(const BrouwerTree& a, const BrouwerTree& b) {
  if (a.repr_ == b.repr_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.leaf_value() == b.leaf_value();
  if (!(a.default_child() == b.default_child())) return false;
  const auto& ca = a.children();
  const auto& cb = b.children();
  if (ca.size() != cb.size()) return false;
  return std::equal(ca.begin(), ca.end(), cb.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

EvalResult eval(const BrouwerTree& t, const Stream& s) {
  BrouwerTree cur = t;
  Nat consumed = 0;
  while (!cur.is_leaf()) {
    if (consumed >= config::depth_cap()) throw DepthBudgetExceeded(consumed + 1, config::depth_cap());
    cur = cur.child(s.at(consumed));
    ++consumed;
  }
  return EvalResult{cur.leaf_value(), consumed};
}

Nat neighborhood_value(const BrouwerTree& t, const FiniteSeq& a) {
  BrouwerTree cur = t;
  for (Nat i = 0; i < a.size(); ++i) {
    if (cur.is_leaf()) break;
    cur = cur.child(a.at(i));
  }
  return cur.is_leaf() ? checked_add(cur.leaf_value(), 1) : 0;
}

bool is_secured(const BrouwerTree& t, const FiniteSeq& a) { return neighborhood_value(t, a) > 0; }

namespace {

BrouwerTree trim_at(const BrouwerTree& t, Nat depth) {
  if (t.is_leaf()) {
    Nat n = t.leaf_value();
    BrouwerTree out = t;
    for (Nat len = monus(checked_add(n, 2), depth); len > 0; --len) out = BrouwerTree::node({}, out);
    return out;
  }
  std::map<Nat, BrouwerTree> children;
  for (const auto& [n, c] : t.children()) children.emplace(n, trim_at(c, depth + 1));
  return BrouwerTree::node(std::move(children), trim_at(t.default_child(), depth + 1));
}

}  // namespace

BrouwerTree trim(const BrouwerTree& t) { return trim_at(t, 0); }

}  // namespace baire
