#include <doctest.h>

#include <vector>

#include "baire/catalog.hpp"
#include "baire/nbhd.hpp"
#include "support.hpp"

using namespace baire;
using testsupport::Rng;

namespace {

BrouwerTree t1() { return BrouwerTree::node({{0, BrouwerTree::leaf(7)}}, BrouwerTree::leaf(9)); }

NbhdTable zero_table() { return NbhdTable{}; }

std::vector<PointwiseFn> small_catalog() {
  return {catalog::head(), catalog::sum2(), catalog::constant(0), catalog::constant(7), catalog::index(3)};
}

}  // namespace

TEST_SUITE_BEGIN("nbhd");

TEST_CASE("apply per backing") {
  NeighborhoodFn g = to_neighborhood(t1());
  CHECK(g.apply(FiniteSeq{0}) == 8);
  CHECK(g.apply(FiniteSeq{}) == 0);
  NeighborhoodFn c = to_neighborhood(BrouwerTree::leaf(4));
  CHECK(c.apply(FiniteSeq{}) == 5);
  CHECK(c.apply(FiniteSeq{1, 2, 3}) == 5);
}

TEST_CASE("check_k0 passes a tree-backed function") {
  CheckReport r = check_k0(to_neighborhood(t1()), 4, 3);
  CHECK(r.passed);
  CHECK(r.depth == 4);
  CHECK(r.alphabet == 3);
}

TEST_CASE("check_k0 reports the first constancy violation") {
  NbhdTable t;
  t.entries.emplace(FiniteSeq{0}, 2);
  t.entries.emplace(FiniteSeq{0, 0}, 3);
  CheckReport r = check_k0(NeighborhoodFn::from_table(t), 3, 2);
  CHECK_FALSE(r.passed);
  CHECK(r.kind == CheckReport::Kind::Constancy);
  CHECK(r.at == FiniteSeq{0});
  CHECK(r.extension == FiniteSeq{0});
}

TEST_CASE("check_k0 reports a barring violation with its witness path") {
  CheckReport r = check_k0(NeighborhoodFn::from_table(zero_table()), 3, 2);
  CHECK_FALSE(r.passed);
  CHECK(r.kind == CheckReport::Kind::Barring);
  CHECK(r.at == FiniteSeq{0, 0, 0});
}

TEST_CASE("modulus_from_k0 scans for the first secured prefix") {
  CHECK(modulus_from_k0(to_neighborhood(BrouwerTree::leaf(4)), Stream::constant(9), 10) == 0);
  CHECK(modulus_from_k0(to_neighborhood(t1()), Stream::zeros(), 10) == 1);
  CHECK_THROWS_AS(modulus_from_k0(NeighborhoodFn::from_table(zero_table()), Stream::zeros(), 8), FuelExhausted);
}

TEST_CASE("bound arguments are validated") {
  CHECK_THROWS_AS(check_k0(to_neighborhood(t1()), 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(eval_k1(delta_from_function(catalog::head()), Stream::zeros(), 8, 0), std::invalid_argument);
  CHECK_THROWS_AS(induced_eval(NeighborhoodFn::from_table(zero_table()), Stream::zeros(), 6), FuelExhausted);
}

TEST_CASE("k0_from_modulus on the head function") {
  NeighborhoodFn g = k0_from_modulus(catalog::head());
  CHECK(g.apply(FiniteSeq{}) == 0);
  CHECK(g.apply(FiniteSeq{4}) == 5);
  CHECK(g.apply(FiniteSeq{4, 9}) == 5);
}

TEST_CASE("saturate replaces values by securing prefix lengths") {
  NeighborhoodFn g = to_neighborhood(t1());
  NeighborhoodFn sat = saturate(g);
  CHECK(sat.apply(FiniteSeq{}) == 0);
  CHECK(sat.apply(FiniteSeq{0, 5}) == 2);
  EvalResult r = induced_eval(sat, Stream::zeros(), 16);
  CHECK(r.value == modulus_from_k0(g, Stream::zeros(), 16));
  CHECK(r.value == 1);
}

TEST_CASE("eval_k1 pinned examples") {
  CBarFn d = CBarFn::from_function([](const FiniteSeq& a) { return a.empty() ? Nat{7} : a.at(0); });
  CHECK(eval_k1(d, Stream::eventually_periodic({4}, {4}), 8, 2) == 4);
  CHECK(eval_k1(d, Stream::zeros(), 8, 2) == 0);
  CBarFn len = CBarFn::from_function([](const FiniteSeq& a) { return a.size(); });
  CHECK_THROWS_AS(eval_k1(len, Stream::zeros(), 8, 2), FuelExhausted);
}

TEST_CASE("delta_from_function pads with zeros") {
  CBarFn d = delta_from_function(catalog::head());
  CHECK(d(FiniteSeq{}) == 0);
  CHECK(d(FiniteSeq{6, 2}) == 6);
  CHECK(eval_k1(d, Stream::eventually_periodic({6}, {0}), 8, 2) == 6);
}

TEST_CASE("eval_k1 certifies late stabilization through the witness") {
  // The probed entry is zero, so the change scan alone never reaches the
  // position where constancy becomes certifiable.
  CBarFn d = delta_from_function(catalog::index(3));
  Stream s = Stream::eventually_periodic({5, 5, 5, 0}, {9});
  CHECK(eval_k1(d, s, 32, 4) == 0);
}

TEST_CASE("upgrade_dominated pinned examples") {
  CHECK(upgrade_dominated(BrouwerTree::leaf(4), to_neighborhood(BrouwerTree::leaf(4))) == BrouwerTree::leaf(4));

  // 12 wherever the tree is secured: entry at the root closes over a
  // constant default.
  NbhdTable twelve;
  twelve.entries.emplace(FiniteSeq{}, 0);
  twelve.fallback = TableDefaultRule{12, 0};
  BrouwerTree out = upgrade_dominated(t1(), NeighborhoodFn::from_table(twelve));
  BrouwerTree expected = BrouwerTree::node({{0, BrouwerTree::leaf(11)}}, BrouwerTree::leaf(11));
  CHECK(out == expected);

  NbhdTable broken = twelve;
  broken.entries.emplace(FiniteSeq{0}, 0);
  CHECK_THROWS_AS(upgrade_dominated(t1(), NeighborhoodFn::from_table(broken)), DominationViolated);
}

TEST_CASE("upgrade_dominated rejects a non-uniform default") {
  NbhdTable skew;
  skew.entries.emplace(FiniteSeq{}, 0);
  skew.entries.emplace(FiniteSeq{7}, 55);
  skew.fallback = TableDefaultRule{12, 0};
  CHECK_THROWS_AS(upgrade_dominated(t1(), NeighborhoodFn::from_table(skew)), NonUniformDefault);

  // Tree backing: an unlisted branch of the dominating tree differs from
  // its own default child.
  BrouwerTree g = BrouwerTree::node({{0, BrouwerTree::leaf(7)}, {3, BrouwerTree::leaf(42)}}, BrouwerTree::leaf(9));
  CHECK_THROWS_AS(upgrade_dominated(t1(), to_neighborhood(g)), NonUniformDefault);

  // A redundant listing equal to the default child stays legal.
  BrouwerTree ok = BrouwerTree::node({{0, BrouwerTree::leaf(7)}, {3, BrouwerTree::leaf(9)}}, BrouwerTree::leaf(9));
  BrouwerTree out = upgrade_dominated(t1(), to_neighborhood(ok));
  CHECK(out == BrouwerTree::node({{0, BrouwerTree::leaf(7)}}, BrouwerTree::leaf(9)));
}

TEST_CASE("upgrade_dominated agrees with its input beyond the tree depth") {
  Rng rng(301);
  testsupport::TreeGenOptions opt;
  opt.max_depth = 3;
  opt.index_range = 4;
  for (int iter = 0; iter < 20; ++iter) {
    BrouwerTree t = testsupport::gen_tree(rng, opt);
    // The tree's own neighbourhood function dominates it trivially.
    NeighborhoodFn g = to_neighborhood(t);
    BrouwerTree out = upgrade_dominated(t, g);
    testsupport::for_each_seq(4, t.depth() + 1, [&](const FiniteSeq& a) {
      CHECK(neighborhood_value(out, a) == g.apply(a));
    });
  }
}

TEST_CASE("modulus round trip for the catalog") {
  Rng rng(302);
  for (const PointwiseFn& f : small_catalog()) {
    NeighborhoodFn g = k0_from_modulus(f);
    CheckReport r = check_k0(g, 6, 4);
    CHECK(r.passed);
    for (int k = 0; k < 200; ++k) {
      Stream s = testsupport::gen_stream(rng, 4);
      EvalResult res = induced_eval(g, s, 64);
      CHECK(res.value == f.value(s));
    }
  }
}

TEST_CASE("saturation computes the canonical modulus") {
  Rng rng(303);
  testsupport::TreeGenOptions opt;
  for (int iter = 0; iter < 50; ++iter) {
    BrouwerTree t = testsupport::gen_tree(rng, opt);
    NeighborhoodFn g = to_neighborhood(t);
    NeighborhoodFn sat = saturate(g);
    for (int k = 0; k < 20; ++k) {
      Stream s = testsupport::gen_stream(rng, 6);
      CHECK(induced_eval(sat, s, 64).value == modulus_from_k0(g, s, 64));
    }
  }
}

TEST_CASE("saturation is positive exactly above secured prefixes") {
  Rng rng(304);
  testsupport::TreeGenOptions opt;
  opt.max_depth = 4;
  opt.index_range = 4;
  for (int iter = 0; iter < 10; ++iter) {
    BrouwerTree t = testsupport::gen_tree(rng, opt);
    NeighborhoodFn g = to_neighborhood(t);
    NeighborhoodFn sat = saturate(g);
    testsupport::for_each_seq(4, 6, [&](const FiniteSeq& a) {
      bool some_secured = false;
      for (Nat len = 0; len <= a.size(); ++len) some_secured = some_secured || g.apply(a.prefix(len)) > 0;
      CHECK((sat.apply(a) > 0) == some_secured);
    });
  }
}

TEST_CASE("saturation is idempotent on values") {
  Rng rng(306);
  testsupport::TreeGenOptions opt;
  opt.max_depth = 3;
  opt.index_range = 3;
  for (int iter = 0; iter < 10; ++iter) {
    NeighborhoodFn g = to_neighborhood(testsupport::gen_tree(rng, opt));
    NeighborhoodFn once = saturate(g);
    NeighborhoodFn twice = saturate(once);
    testsupport::for_each_seq(3, 5, [&](const FiniteSeq& a) { CHECK(once.apply(a) == twice.apply(a)); });
  }
}

TEST_CASE("eval_k1 recovers the function whenever fuel covers the modulus") {
  Rng rng(305);
  for (const PointwiseFn& f : small_catalog()) {
    CBarFn d = delta_from_function(f);
    for (int k = 0; k < 50; ++k) {
      Stream s = testsupport::gen_stream(rng, 4);
      Nat fuel = f.modulus(s) + 2 + testsupport::rand_nat(rng, 0, 4);
      CHECK(eval_k1(d, s, fuel, 4) == f.value(s));
    }
  }
}

TEST_SUITE_END();
