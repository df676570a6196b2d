#include "baire/cantor.hpp"

#include <deque>
#include <stdexcept>

namespace baire {

Nat TruthTable::at(const FiniteSeq& bits) const {
  if (bits.size() < arity) throw std::invalid_argument("TruthTable::at: prefix shorter than arity");
  Nat index = 0;
  for (Nat k = 0; k < arity; ++k) {
    Nat b = bits.at(k);
    if (b > 1) throw std::invalid_argument("TruthTable::at: non-binary digit");
    index = (index << 1) | b;
  }
  return outputs.at(index);
}

bool is_binary_tree(const BrouwerTree& t) {
  if (t.is_leaf()) return true;
  if (t.children().size() != 2 || t.children().count(0) == 0 || t.children().count(1) == 0) return false;
  return is_binary_tree(t.children().at(0)) && is_binary_tree(t.children().at(1));
}

namespace {

BrouwerTree tree_from_uniform_at(const TruthTable& tt, Nat offset, Nat arity) {
  if (arity == 0) return BrouwerTree::leaf(tt.outputs.at(offset));
  BrouwerTree zero = tree_from_uniform_at(tt, offset, arity - 1);
  BrouwerTree one = tree_from_uniform_at(tt, offset + (Nat{1} << (arity - 1)), arity - 1);
  return BrouwerTree::node({{0, zero}, {1, one}}, one);
}

}  // namespace

BrouwerTree tree_from_uniform(const TruthTable& tt) {
  if (tt.outputs.size() != (Nat{1} << tt.arity)) throw std::invalid_argument("TruthTable: outputs size must be 2^arity");
  return tree_from_uniform_at(tt, 0, tt.arity);
}

Nat uniform_modulus(const BrouwerTree& t) { return t.depth(); }

Nat fan_bound(const DetachablePredicate& p, Nat max_depth) {
  std::deque<FiniteSeq> frontier;
  if (!p.decide(FiniteSeq{})) frontier.push_back(FiniteSeq{});
  Nat n = 0;
  while (!frontier.empty()) {
    if (n == max_depth) throw NotBarWithinDepth(frontier.front());
    std::deque<FiniteSeq> next;
    for (const FiniteSeq& a : frontier) {
      for (Nat b = 0; b < 2; ++b) {
        FiniteSeq q = a.append(b);
        if (!p.decide(q)) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
    ++n;
  }
  return n;
}

CBarFn cset_to_delta(const DetachablePredicate& d) {
  auto decide = d.decide;
  return CBarFn::from_function([decide](const FiniteSeq& a) -> Nat { return decide(a) ? 1 : 0; });
}

DetachablePredicate delta_to_cset(const CBarFn& delta) {
  return DetachablePredicate{"", [delta](const FiniteSeq& a) {
                               Nat v = delta(a);
                               return v == delta(a.append(0)) && v == delta(a.append(1));
                             }};
}

Stream gamma_embed(const Stream& s) {
  if (s.is_eventually_periodic()) {
    return Stream::eventually_periodic(gamma_embed_seq(s.ep_prefix()), gamma_embed_seq(s.ep_period()));
  }
  return Stream::oracle([s](Nat i) { return sg(s.at(i)); });
}

FiniteSeq gamma_embed_seq(const FiniteSeq& a) {
  std::vector<Nat> out;
  out.reserve(a.size());
  for (Nat x : a) out.push_back(sg(x));
  return FiniteSeq(std::move(out));
}

}  // namespace baire
