#include <doctest.h>
#include <spreadhom/functors.hpp>

#include "util.hpp"

#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace spreadhom;

namespace {

Index rank_of(const Mat& m) { return static_cast<Index>(rref(m).pivots.size()); }

bool pointwise_iso(const ModMorphism& f) {
  for (int x = 0; x < f.source().poset().size(); ++x) {
    if (f.source().dim(x) != f.target().dim(x)) return false;
    if (rank_of(f.at(x)) != f.source().dim(x)) return false;
  }
  return true;
}

bool pointwise_injective(const ModMorphism& f) {
  for (int x = 0; x < f.source().poset().size(); ++x)
    if (rank_of(f.at(x)) != f.source().dim(x)) return false;
  return true;
}

bool pointwise_surjective(const ModMorphism& f) {
  for (int x = 0; x < f.source().poset().size(); ++x)
    if (rank_of(f.at(x)) != f.target().dim(x)) return false;
  return true;
}

bool same_morphism(const ModMorphism& a, const ModMorphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) return false;
  for (int x = 0; x < a.source().poset().size(); ++x)
    if (!is_zero_mat(a.at(x) - b.at(x))) return false;
  return true;
}

// family plus its hom cache; FamilyHom keeps a pointer, so bundle them
struct Fam {
  Family fam;
  FamilyHom fh;
  explicit Fam(Family f) : fam(std::move(f)), fh(fam) {}
  Fam(const Fam&) = delete;
  Fam& operator=(const Fam&) = delete;
};

}  // namespace

TEST_CASE("restriction and extension round trip") {
  auto p = grid_poset({3, 3});
  AlignedSubgrid window = full_window(*p);
  std::vector<AlignedSubgrid> qs = {AlignedSubgrid({{0, 2}, {0, 2}}),
                                    AlignedSubgrid({{1, 2}, {0, 2}}),
                                    AlignedSubgrid({{0, 1, 2}, {1}})};
  for (const auto& q : qs) {
    auto lp = grid_poset(q.sizes());
    for (int k = 0; k < 6; ++k) {
      PersModule n = random_module(lp, 1 + k % 3, k % 2 ? 2 : 1, 40u + static_cast<unsigned>(k));
      PersModule e = extend_module(n, q, window);
      CHECK(restrict_module(e, q) == n);
      CHECK(contract_module(e, q) == n);
      for (int x = 0; x < p->size(); ++x)
        if (!q.in_upper(p->coords(x))) CHECK(e.dim(x) == 0);
    }
    std::mt19937_64 rng(7);
    for (int k = 0; k < 4; ++k) {
      std::vector<int> s = testutil::random_spread(*lp, rng);
      PersModule e = extend_module(spread_module(lp, s), q, window);
      CHECK(is_spread(*p, module_support(e)));
      CHECK(e == spread_module(p, module_support(e)));
    }
  }
  PersModule m = random_module(p, 2, 2, 11);
  CHECK(restrict_module(m, window) == m);
  CHECK(contract_module(m, window) == m);
}

TEST_CASE("projectives travel through extension and contraction") {
  auto p = grid_poset({3, 3});
  AlignedSubgrid q({{1, 2}, {0, 2}});
  AlignedSubgrid window = full_window(*p);
  auto lp = grid_poset(q.sizes());
  for (int y = 0; y < lp->size(); ++y) {
    Pt amb = q.to_ambient(lp->coords(y));
    CHECK(extend_module(projective(lp, y), q, window) == projective(p, p->id(amb)));
  }
  for (int x = 0; x < p->size(); ++x) {
    Pt c = p->coords(x);
    if (!q.in_upper(c)) {
      CHECK_THROWS_AS(contract_module(projective(p, x), q), SupportOutsideQPlus);
      continue;
    }
    CHECK(contract_module(projective(p, x), q) == projective(lp, lp->id(q.to_local(q.floor(c)))));
  }
}

TEST_CASE("transported morphisms compose") {
  auto p = grid_poset({3, 3});
  AlignedSubgrid q({{0, 2}, {0, 2}});
  AlignedSubgrid window = full_window(*p);
  auto lp = grid_poset(q.sizes());
  std::mt19937_64 rng(23);
  for (int k = 0; k < 4; ++k) {
    PersModule a = random_module(lp, 2, 1, 100u + static_cast<unsigned>(k));
    PersModule b = random_module(lp, 1 + k % 2, 1, 200u + static_cast<unsigned>(k));
    PersModule c = random_module(lp, 2, 2, 300u + static_cast<unsigned>(k));
    ModMorphism f = testutil::random_hom(a, b, rng);
    ModMorphism g = testutil::random_hom(b, c, rng);
    CHECK(same_morphism(extend_morphism(compose(g, f), q, window),
                        compose(extend_morphism(g, q, window), extend_morphism(f, q, window))));
    ModMorphism ef = extend_morphism(f, q, window);
    ModMorphism eg = extend_morphism(g, q, window);
    CHECK(same_morphism(contract_morphism(compose(eg, ef), q),
                        compose(contract_morphism(eg, q), contract_morphism(ef, q))));
    CHECK(same_morphism(restrict_morphism(ef, q), f));
    CHECK(same_morphism(contract_morphism(ef, q), f));
  }
}

TEST_CASE("contraction of the two generator band onto four corners") {
  auto p = grid_poset({3, 3});
  AlignedSubgrid q({{0, 2}, {0, 2}});
  auto lp = grid_poset(q.sizes());
  std::vector<int> supp = set_minus(up_set(*p, {p->id({0, 1}), p->id({1, 0})}),
                                    up_set(*p, {p->id({2, 1})}));
  PersModule m = spread_module(p, supp);
  REQUIRE(static_cast<int>(supp.size()) == 6);

  PersModule c = contract_module(m, q);
  CHECK(c.dim(lp->id(q.to_local(Pt{0, 0}))) == 1);
  CHECK(c.dim(lp->id(q.to_local(Pt{2, 0}))) == 0);
  CHECK(c.dim(lp->id(q.to_local(Pt{0, 2}))) == 1);
  CHECK(c.dim(lp->id(q.to_local(Pt{2, 2}))) == 0);
  PersModule seg = spread_module(lp, {lp->id({0, 0}), lp->id({0, 1})});
  CHECK(dim_vector(c) == dim_vector(seg));
  CHECK(rank_invariant(c) == rank_invariant(seg));

  PersModule r = restrict_module(m, q);
  PersModule s1 = simple(lp, lp->id({0, 1}));
  PersModule s2 = simple(lp, lp->id({1, 0}));
  PersModule ss = direct_sum(lp, {&s1, &s2}).module;
  CHECK(dim_vector(r) == dim_vector(ss));
  CHECK(rank_invariant(r) == rank_invariant(ss));

  ModMorphism u = unit(m, q);
  CHECK(!pointwise_injective(u));
  CHECK(u.at(p->id({2, 0})).rows() == 0);
  ModMorphism cu = counit(m, q);
  CHECK(!pointwise_surjective(cu));
  CHECK(cu.at(p->id({1, 1})).cols() == 0);
  CHECK(m.dim(p->id({1, 1})) == 1);
}

TEST_CASE("unit and counit invert on modules presented inside the subgrid") {
  auto p = grid_poset({3, 3});
  AlignedSubgrid window = full_window(*p);
  for (const auto& q : {AlignedSubgrid({{0, 2}, {0, 2}}), AlignedSubgrid({{1, 2}, {0, 1, 2}})}) {
    auto lp = grid_poset(q.sizes());
    for (int k = 0; k < 5; ++k) {
      PersModule n = random_module(lp, 2, 1 + k % 2, 500u + static_cast<unsigned>(k));
      PersModule e = extend_module(n, q, window);
      CHECK(pointwise_iso(counit(e, q)));
      CHECK(pointwise_iso(unit(e, q)));
    }
  }
}

TEST_CASE("exact sequences transported across the subgrid") {
  auto p = grid_poset({3, 3});
  AlignedSubgrid q({{0, 2}, {0, 2}});
  AlignedSubgrid window = full_window(*p);
  auto lp = grid_poset(q.sizes());
  std::mt19937_64 rng(91);
  for (int k = 0; k < 5; ++k) {
    ShortExactSeq ses = testutil::random_ses(lp, rng);
    ShortExactSeq up = make_ses(extend_morphism(ses.inj, q, window),
                                extend_morphism(ses.surj, q, window));
    for (int x = 0; x < p->size(); ++x)
      CHECK(up.inj.source().dim(x) + up.surj.target().dim(x) == up.inj.target().dim(x));
    ShortExactSeq down = make_ses(contract_morphism(up.inj, q), contract_morphism(up.surj, q));
    CHECK(down.inj.source() == ses.inj.source());
    CHECK(down.surj.target() == ses.surj.target());
  }
  for (int k = 0; k < 5; ++k) {
    PersModule a = extend_module(random_module(lp, 2, 1, 700u + static_cast<unsigned>(k)), q, window);
    PersModule b = extend_module(random_module(lp, 2, 2, 800u + static_cast<unsigned>(k)), q, window);
    ModMorphism f = testutil::random_hom(a, b, rng);
    SubQuot ker = kernel(f);
    ImageParts im = image(f);
    ShortExactSeq ses = make_ses(ker.map, im.proj);
    ShortExactSeq down = make_ses(contract_morphism(ses.inj, q), contract_morphism(ses.surj, q));
    for (int y = 0; y < lp->size(); ++y)
      CHECK(down.inj.source().dim(y) + down.surj.target().dim(y) == down.inj.target().dim(y));
  }
}

TEST_CASE("minimal presentations and their grids") {
  auto p2 = grid_poset({2, 2});
  PersModule w = spread_module(p2, up_set(*p2, {p2->id({0, 1}), p2->id({1, 0})}));
  PresentedModule pw = minimal_presentation(w);
  REQUIRE(pw.gens.size() == 2);
  REQUIRE(pw.rels.size() == 1);
  CHECK(pw.gens == std::vector<Pt>{{0, 1}, {1, 0}});
  CHECK(pw.rels == std::vector<Pt>{{1, 1}});
  CHECK(pw.mat[0][0] != Fp(0));
  CHECK(pw.mat[1][0] != Fp(0));
  auto lw = lgrid(pw);
  REQUIRE(lw.has_value());
  CHECK(lw->point_count() == 4);
  CHECK(lw->axes() == std::vector<std::vector<int>>{{0, 1}, {0, 1}});

  PresentedModule pp = minimal_presentation(projective(p2, p2->id({1, 0})));
  CHECK(pp.gens == std::vector<Pt>{{1, 0}});
  CHECK(pp.rels.empty());
  auto lg = lgrid(pp);
  REQUIRE(lg.has_value());
  CHECK(lg->point_count() == 1);

  CHECK(!lgrid(minimal_presentation(PersModule::zero(p2))).has_value());

  auto p3 = grid_poset({3, 3});
  for (int k = 0; k < 6; ++k) {
    PersModule m = random_module(p3, 2 + k % 2, 1 + k % 3, 900u + static_cast<unsigned>(k));
    PersModule back = realize_module(minimal_presentation(m), full_window(*p3));
    CHECK(dim_vector(back) == dim_vector(m));
    CHECK(rank_invariant(back) == rank_invariant(m));
  }
}

TEST_CASE("presentations extend along the subgrid") {
  auto p = grid_poset({3, 3});
  AlignedSubgrid q({{0, 2}, {0, 2}});
  AlignedSubgrid window = full_window(*p);
  auto lp = grid_poset(q.sizes());
  for (int k = 0; k < 5; ++k) {
    PersModule n = random_module(lp, 2, 1 + k % 2, 40u + static_cast<unsigned>(k));
    PresentedModule pm = minimal_presentation(n);
    PersModule a = realize_module(extend_presented(pm, q), window);
    PersModule b = extend_module(realize_module(pm, full_window(*lp)), q, window);
    CHECK(a == b);
  }
}

TEST_CASE("window independence of realized modules and contractions") {
  auto p3 = grid_poset({3, 3});
  AlignedSubgrid q({{0, 2}, {0, 2}});
  AlignedSubgrid w3 = AlignedSubgrid::full({3, 3});
  AlignedSubgrid w5 = AlignedSubgrid::full({5, 5});
  AlignedSubgrid ws({{0, 1, 2, 4}, {0, 1, 2, 3}});
  for (int k = 0; k < 5; ++k) {
    PresentedModule pm = minimal_presentation(random_module(p3, 2, 2, 60u + static_cast<unsigned>(k)));
    PersModule small = realize_module(pm, w3);
    PersModule big = realize_module(pm, w5);
    CHECK(restrict_module(big, AlignedSubgrid({{0, 1, 2}, {0, 1, 2}})) == small);
    PersModule c3 = contract_module(small, q);
    CHECK(contract_module(big, localize(q, w5)) == c3);
    CHECK(contract_module(realize_module(pm, ws), localize(q, ws)) == c3);
  }
}

TEST_CASE("hook resolutions extend to hook resolutions") {
  auto p = grid_poset({3, 3});
  AlignedSubgrid q({{0, 2}, {0, 2}});
  AlignedSubgrid window = full_window(*p);
  auto lp = grid_poset(q.sizes());
  Fam local(family_with_projectives(lp, FamilyKind::hooks));
  Fam bound(family_with_projectives(p, FamilyKind::hooks));
  for (int k = 0; k < 4; ++k) {
    PersModule n = random_module(lp, 2, 1 + k % 2, 70u + static_cast<unsigned>(k));
    Resolution rn = minimal_resolution(n, local.fh);
    Resolution rm = minimal_resolution(extend_module(n, q, window), bound.fh);
    REQUIRE(rn.complete);
    REQUIRE(rm.complete);
    CHECK(rn.length() == rm.length());
    REQUIRE(rn.steps.size() == rm.steps.size());
    for (std::size_t s = 0; s < rn.steps.size(); ++s) {
      std::multiset<std::vector<int>> lifted, direct;
      for (std::size_t i : rn.steps[s].parts)
        lifted.insert(module_support(extend_module(local.fam.members[i], q, window)));
      for (std::size_t i : rm.steps[s].parts) direct.insert(bound.fam.supports[i]);
      CHECK(lifted == direct);
    }
  }
}

TEST_CASE("extended families over coverings") {
  auto p2 = grid_poset({2, 2});
  AlignedSubgrid qfull = AlignedSubgrid::full({2, 2});
  AlignedSubgrid qbad({{1}, {0, 1}});
  std::vector<AlignedSubgrid> cov = {qfull, qbad};

  CHECK(check_extended_class(p2, cov, FamilyKind::hooks).pass());
  CHECK(check_extended_class(p2, cov, FamilyKind::single_source_spreads).pass());
  CHECK(check_extended_class(p2, cov, FamilyKind::segments).pass());

  ClassCheckReport bad = check_extended_class(p2, cov, FamilyKind::fp_upsets);
  REQUIRE(!bad.pass());
  CHECK(bad.violation->condition == 5);
  CHECK(bad.violation->grid == 1);
  CHECK(bad.violation->member_support ==
        up_set(*p2, {p2->id({0, 1}), p2->id({1, 0})}));
  CHECK(bad.violation->class_point == Pt{1, 0});

  auto p3 = grid_poset({3, 3});
  std::vector<AlignedSubgrid> minful = {AlignedSubgrid({{0, 1}, {0, 1}}),
                                        AlignedSubgrid({{0, 2}, {0, 2}}),
                                        AlignedSubgrid::full({3, 3})};
  CHECK(check_extended_class(p3, minful, FamilyKind::fp_upsets).pass());

  AlignedSubgrid qleft({{0}, {0, 1}});
  ClassCheckReport split = check_extended_class(p2, {qleft, qbad}, FamilyKind::hooks);
  REQUIRE(!split.pass());
  CHECK(split.violation->condition == 3);

  std::vector<AlignedSubgrid> pairs;
  for (int a = 0; a < p3->size(); ++a)
    for (int b = 0; b < p3->size(); ++b)
      if (p3->leq(a, b)) pairs.push_back(AlignedSubgrid::closure({p3->coords(a), p3->coords(b)}));
  PersModule w3 = spread_module(p3, up_set(*p3, {p3->id({0, 1}), p3->id({1, 0})}));
  PersModule pr = projective(p3, p3->id({2, 2}));
  PersModule big = direct_sum(p3, {&w3, &pr}).module;
  ClassCheckReport fits = check_extended_class(p3, pairs, FamilyKind::hooks, {w3});
  CHECK(fits.pass());
  ClassCheckReport nofit = check_extended_class(p3, pairs, FamilyKind::hooks, {w3, big});
  REQUIRE(!nofit.pass());
  CHECK(nofit.violation->condition == 6);

  CHECK_THROWS_AS(check_extended_class(p2, {qbad}, FamilyKind::hooks), std::invalid_argument);
  CHECK_THROWS(AlignedSubgrid::from_points({{0, 0}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}));
}

TEST_CASE("extension of the local cover breaks relative exactness for upsets") {
  auto p2 = grid_poset({2, 2});
  AlignedSubgrid qbad({{1}, {0, 1}});
  AlignedSubgrid window = full_window(*p2);
  auto lp = grid_poset(qbad.sizes());
  Fam lproj(enumerate_family(lp, FamilyKind::projectives));
  PersModule n = simple(lp, lp->id({0, 0}));
  Cover c = cover(n, lproj.fh);
  ShortExactSeq local = make_ses(kernel(c.map).map, c.map);
  ShortExactSeq up = make_ses(extend_morphism(local.inj, qbad, window),
                              extend_morphism(local.surj, qbad, window));
  CHECK(module_support(up.surj.target()) == std::vector<int>{p2->id({1, 0})});

  Fam proj(enumerate_family(p2, FamilyKind::projectives));
  CHECK(is_fx_exact(up, proj.fam));
  Fam ups(enumerate_family(p2, FamilyKind::fp_upsets));
  CHECK(!is_fx_exact(up, ups.fam));
  auto viol = fx_exact_violation(up, ups.fam);
  REQUIRE(viol.has_value());
  CHECK(ups.fam.supports[*viol] == up_set(*p2, {p2->id({0, 1}), p2->id({1, 0})}));
}

TEST_CASE("upset precover probe") {
  auto p4 = grid_poset({4, 4});
  PrecoverProbe probe = upset_precover_probe(p4, 0, 2, 1);
  CHECK(probe.candidates.size() == 3);
  CHECK(probe.chain.size() == 3);
  CHECK(probe.chain_steps == 2);
  CHECK(probe.chain_verified);
  CHECK(probe.clipped);
  CHECK(!probe.genuine_precover);
  CHECK(probe.candidates[probe.chain.front()] == up_set(*p4, {p4->id({0, 1})}));
  CHECK(probe.candidates[probe.chain.back()] ==
        up_set(*p4, {p4->id({0, 1}), p4->id({2, 0})}));
  for (std::size_t k = 0; k + 1 < probe.chain.size(); ++k) {
    const auto& a = probe.candidates[probe.chain[k]];
    const auto& b = probe.candidates[probe.chain[k + 1]];
    CHECK(a.size() < b.size());
    CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }

  CHECK_THROWS_AS(upset_precover_probe(p4, 2, 2, 1), std::invalid_argument);

  PrecoverProbe bottom = upset_precover_probe(p4, 0, 2, 0);
  CHECK(bottom.candidates.size() == 1);
  CHECK(bottom.chain_steps == 0);
  CHECK(bottom.chain_verified);
  CHECK(!bottom.clipped);
  CHECK(bottom.genuine_precover);

  auto p5 = grid_poset({5, 5});
  PrecoverProbe tall = upset_precover_probe(p5, 0, 2, 2);
  CHECK(tall.candidates.size() == 10);
  CHECK(tall.chain_steps >= 4);
  CHECK(tall.chain_verified);
  CHECK(tall.clipped);
}
