#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "baire/cantor.hpp"
#include "baire/nbhd.hpp"
#include "baire/seq.hpp"
#include "baire/tree.hpp"

namespace testsupport {

using baire::BrouwerTree;
using baire::FiniteSeq;
using baire::Nat;
using baire::Stream;

using Rng = std::mt19937_64;

inline Nat rand_nat(Rng& rng, Nat lo, Nat hi) {
  return std::uniform_int_distribution<Nat>(lo, hi)(rng);
}

struct TreeGenOptions {
  Nat max_depth = 5;
  Nat max_support = 4;
  Nat max_leaf = 20;
  Nat min_leaf = 0;
  Nat index_range = 6;
};

inline BrouwerTree gen_tree(Rng& rng, const TreeGenOptions& opt, Nat depth = 0) {
  bool leaf = depth >= opt.max_depth || rand_nat(rng, 0, 2) == 0;
  if (leaf) return BrouwerTree::leaf(rand_nat(rng, opt.min_leaf, opt.max_leaf));
  Nat support = rand_nat(rng, 0, opt.max_support);
  std::map<Nat, BrouwerTree> children;
  for (Nat i = 0; i < support; ++i) {
    children.emplace(rand_nat(rng, 0, opt.index_range - 1), gen_tree(rng, opt, depth + 1));
  }
  return BrouwerTree::node(std::move(children), gen_tree(rng, opt, depth + 1));
}

inline Stream gen_stream(Rng& rng, Nat value_range, Nat max_prefix = 4, Nat max_period = 3) {
  std::vector<Nat> prefix;
  Nat plen = rand_nat(rng, 0, max_prefix);
  for (Nat i = 0; i < plen; ++i) prefix.push_back(rand_nat(rng, 0, value_range - 1));
  std::vector<Nat> period;
  Nat qlen = rand_nat(rng, 1, max_period);
  for (Nat i = 0; i < qlen; ++i) period.push_back(rand_nat(rng, 0, value_range - 1));
  return Stream::eventually_periodic(FiniteSeq(std::move(prefix)), FiniteSeq(std::move(period)));
}

// Independent route to the induced function: scan prefixes of s until the
// function is positive and peel off the successor.
inline std::optional<baire::EvalResult> oracle_induced(const std::function<Nat(const FiniteSeq&)>& g,
                                                       const Stream& s, Nat fuel) {
  for (Nat n = 0; n <= fuel; ++n) {
    Nat v = g(baire::take(s, n));
    if (v > 0) return baire::EvalResult{v - 1, n};
  }
  return std::nullopt;
}

// All sequences of length <= max_len over {0..alphabet-1}, preorder.
inline void for_each_seq(Nat alphabet, Nat max_len, const std::function<void(const FiniteSeq&)>& fn) {
  FiniteSeq path;
  std::function<void()> walk = [&] {
    fn(path);
    if (path.size() == max_len) return;
    for (Nat i = 0; i < alphabet; ++i) {
      path = path.append(i);
      walk();
      path = path.prefix(path.size() - 1);
    }
  };
  walk();
}

// Every leaf value in the tree, default subtrees included.
inline void collect_leaves(const BrouwerTree& t, std::vector<Nat>& out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf_value());
    return;
  }
  for (const auto& [n, c] : t.children()) collect_leaves(c, out);
  collect_leaves(t.default_child(), out);
}

// Depth-first fan bound with pruning at secured prefixes: max over paths of
// the securing depth. Independent of the breadth-first search in fan_bound.
inline std::optional<Nat> fan_oracle(const baire::DetachablePredicate& p, Nat max_depth) {
  std::function<std::optional<Nat>(FiniteSeq&)> walk = [&](FiniteSeq& path) -> std::optional<Nat> {
    if (p.decide(path)) return path.size();
    if (path.size() == max_depth) return std::nullopt;
    Nat deepest = 0;
    for (Nat b = 0; b < 2; ++b) {
      path = path.append(b);
      std::optional<Nat> r = walk(path);
      path = path.prefix(path.size() - 1);
      if (!r) return std::nullopt;
      deepest = std::max(deepest, *r);
    }
    return deepest;
  };
  FiniteSeq root;
  return walk(root);
}

}  // namespace testsupport
