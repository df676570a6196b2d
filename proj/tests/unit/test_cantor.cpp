#include <doctest.h>

#include "baire/bars.hpp"
#include "baire/cantor.hpp"
#include "baire/catalog.hpp"
#include "support.hpp"

using namespace baire;
using testsupport::Rng;

namespace {

TruthTable parity2() { return TruthTable{2, {0, 1, 1, 0}}; }

TruthTable gen_table(Rng& rng, Nat arity, Nat max_value) {
  TruthTable tt;
  tt.arity = arity;
  for (Nat i = 0; i < (Nat{1} << arity); ++i) tt.outputs.push_back(testsupport::rand_nat(rng, 0, max_value));
  return tt;
}

}  // namespace

TEST_SUITE_BEGIN("cantor");

TEST_CASE("tree_from_uniform base and branch cases") {
  CHECK(tree_from_uniform(TruthTable{0, {3}}) == BrouwerTree::leaf(3));

  BrouwerTree parity = tree_from_uniform(parity2());
  CHECK(eval(parity, extend(FiniteSeq{1, 0}, Stream::zeros())).value == 1);
  CHECK(parity.depth() == 2);
  CHECK(is_binary_tree(parity));
}

TEST_CASE("uniform_modulus is the tree depth") {
  CHECK(uniform_modulus(BrouwerTree::leaf(5)) == 0);
  CHECK(uniform_modulus(tree_from_uniform(parity2())) == 2);
  BrouwerTree one = BrouwerTree::node({{0, BrouwerTree::leaf(1)}, {1, BrouwerTree::leaf(1)}}, BrouwerTree::leaf(1));
  CHECK(uniform_modulus(one) == 1);
}

TEST_CASE("fan_bound pinned examples") {
  CHECK(fan_bound(*catalog::predicate("true"), 10) == 0);
  CHECK(fan_bound(*catalog::predicate("len-ge-3"), 10) == 3);
  DetachablePredicate p = *catalog::predicate("contains1-or-len4");
  Nat bound = fan_bound(p, 10);
  auto oracle = testsupport::fan_oracle(p, 10);
  REQUIRE(oracle.has_value());
  CHECK(bound == *oracle);
  CHECK(bound == 4);

  try {
    fan_bound(*catalog::predicate("starts-with-1"), 5);
    FAIL("expected NotBarWithinDepth");
  } catch (const NotBarWithinDepth& e) {
    CHECK(e.witness() == FiniteSeq{0, 0, 0, 0, 0});
  }
}

TEST_CASE("cset_to_delta is the indicator") {
  CBarFn always = cset_to_delta(*catalog::predicate("true"));
  CHECK(always(FiniteSeq{}) == 1);
  CHECK(always(FiniteSeq{0, 1}) == 1);
  CBarFn len2 = cset_to_delta(*catalog::predicate("len-ge-2"));
  CHECK(len2(FiniteSeq{0}) == 0);
  CHECK(len2(FiniteSeq{0, 1, 1}) == 1);
}

TEST_CASE("delta_to_cset recovers detachability") {
  CBarFn len2 = cset_to_delta(*catalog::predicate("len-ge-2"));
  DetachablePredicate d = delta_to_cset(len2);
  CHECK(d.decide(FiniteSeq{0, 1}));
  CHECK_FALSE(d.decide(FiniteSeq{0}));
  CBarFn constant = CBarFn::from_function([](const FiniteSeq&) { return Nat{5}; });
  DetachablePredicate dcon = delta_to_cset(constant);
  CHECK(dcon.decide(FiniteSeq{}));
  CHECK(dcon.decide(FiniteSeq{1, 0, 1}));
}

TEST_CASE("gamma_embed collapses values through sg") {
  CHECK(gamma_embed_seq(FiniteSeq{3, 0, 2}) == FiniteSeq{1, 0, 1});
  CHECK(gamma_embed_seq(FiniteSeq{}) == FiniteSeq{});
  Stream z = gamma_embed(Stream::zeros());
  for (Nat i = 0; i < 8; ++i) CHECK(z.at(i) == 0);
}

TEST_CASE("uniform tables round trip through trees") {
  Rng rng(401);
  for (int iter = 0; iter < 30; ++iter) {
    Nat arity = testsupport::rand_nat(rng, 0, 6);
    TruthTable tt = gen_table(rng, arity, 9);
    BrouwerTree t = tree_from_uniform(tt);
    CHECK(uniform_modulus(t) <= arity);
    testsupport::for_each_seq(2, arity, [&](const FiniteSeq& a) {
      if (a.size() != arity) return;
      CHECK(eval(t, extend(a, Stream::zeros())).value == tt.at(a));
    });
  }
}

TEST_CASE("fan_bound equals the depth-first oracle on random predicates") {
  Rng rng(402);
  for (int iter = 0; iter < 60; ++iter) {
    // Random detachable predicate over the binary tree with horizon <= 10:
    // decide via a hash-like mix so it is total and deterministic.
    Nat salt = testsupport::rand_nat(rng, 0, ~Nat{0} >> 1);
    Nat density = testsupport::rand_nat(rng, 3, 12);
    DetachablePredicate p{"", [salt, density](const FiniteSeq& a) {
                            if (a.size() >= 10) return true;
                            Nat h = salt;
                            for (Nat x : a) h = h * 1099511628211ULL + x + 17;
                            return h % density == 0;
                          }};
    auto oracle = testsupport::fan_oracle(p, 10);
    REQUIRE(oracle.has_value());
    CHECK(fan_bound(p, 10) == *oracle);
  }
}

TEST_CASE("round-tripped presentations induce the same c-bar at the bound") {
  Rng rng(403);
  for (int iter = 0; iter < 30; ++iter) {
    // A binary delta that stabilizes by depth 6, so securing within depth 8
    // coincides with securing outright.
    Nat salt = testsupport::rand_nat(rng, 0, 1000);
    CBarFn delta = CBarFn::from_function([salt](const FiniteSeq& a) -> Nat {
      Nat h = salt;
      for (Nat i = 0; i < std::min<Nat>(a.size(), 6); ++i) h = h * 31 + a.at(i);
      return h % 4;
    });
    DetachablePredicate d = delta_to_cset(delta);
    DetachablePredicate d2 = delta_to_cset(cset_to_delta(d));
    auto secured = [&](const DetachablePredicate& dp, const FiniteSeq& a) {
      bool all = true;
      testsupport::for_each_seq(2, 8 - a.size(), [&](const FiniteSeq& b) { all = all && dp.decide(a + b); });
      return all;
    };
    testsupport::for_each_seq(2, 5, [&](const FiniteSeq& a) { CHECK(secured(d, a) == secured(d2, a)); });
  }
}

TEST_CASE("a fan bound for a binary bar secures its pullback along the embedding") {
  Rng rng(405);
  for (int iter = 0; iter < 15; ++iter) {
    Nat salt = testsupport::rand_nat(rng, 0, ~Nat{0} >> 1);
    Nat density = testsupport::rand_nat(rng, 2, 9);
    DetachablePredicate c{"", [salt, density](const FiniteSeq& a) {
                            if (a.size() >= 8) return true;
                            Nat h = salt;
                            for (Nat x : a) h = h * 1099511628211ULL + x + 17;
                            return h % density == 0;
                          }};
    Nat bound = fan_bound(c, 8);
    // Collapsing a stream of naturals to bits before asking c yields a bar
    // of Baire space; the same bound secures it.
    BarPredicate pullback =
        BarPredicate::detachable([c](const FiniteSeq& a) { return c.decide(gamma_embed_seq(a)); });
    CHECK(is_bar(pullback, 3, bound).passed);
  }
}

TEST_CASE("embedding commutes with take") {
  Rng rng(404);
  for (int iter = 0; iter < 200; ++iter) {
    Stream s = testsupport::gen_stream(rng, 7);
    Nat n = testsupport::rand_nat(rng, 0, 16);
    CHECK(gamma_embed_seq(take(s, n)) == take(gamma_embed(s), n));
  }
}

TEST_SUITE_END();
