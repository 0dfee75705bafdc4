#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "burnside/error.hpp"
#include "burnside/groupoid.hpp"

using namespace burnside;

namespace {

int rank_of(const std::string& cycles, int n) {
  return static_cast<int>(perm::lex_rank(perm::parse_cycles(cycles, n)[0]));
}

std::multiset<int> aut_orders(const GroupoidPtr& G) {
  auto sk = skeleton(G);
  std::multiset<int> out;
  for (const auto& a : sk.autGroups) out.insert(a->order());
  return out;
}

// test-only comparison functor between the iso-comma and the strict pullback
// along the mapping-path isofibration of g
GroupoidFunctor comma_vs_path_pullback(const GroupoidFunctor& f,
                                       const GroupoidFunctor& g) {
  auto ic = iso_comma(f, g);
  auto path = iso_comma(g, identity_functor(g.target));  // (c, d, δ: g c -> d)
  GroupoidFunctor p;  // projection (c,d,δ) -> d
  p.source = path.total;
  p.target = g.target;
  p.objMap.resize(path.total->objects());
  for (int t = 0; t < path.total->objects(); ++t)
    p.objMap[t] = g.target->dst(path.objDelta[t]);
  p.morMap = path.toRight.morMap;
  REQUIRE(is_isofibration(p));
  auto sp = strict_pullback(f, p);

  const auto& D = *g.target;
  GroupoidFunctor cmp;
  cmp.source = ic.total;
  cmp.target = sp.total;
  cmp.objMap.assign(ic.total->objects(), -1);
  cmp.morMap.assign(ic.total->morphisms(), -1);
  for (int t = 0; t < ic.total->objects(); ++t) {
    // (a, c, δ: f a -> g c)  ↦  (a, (c, f a, δ^-1))
    for (int s = 0; s < sp.total->objects(); ++s) {
      const int pt = sp.toRight.objMap[s];
      if (sp.toLeft.objMap[s] == ic.objA[t] && path.objC[pt] == -1) continue;
      if (sp.toLeft.objMap[s] != ic.objA[t]) continue;
      if (path.objA[pt] == ic.objC[t] && path.objDelta[pt] == D.inv(ic.objDelta[t]))
        cmp.objMap[t] = s;
    }
    REQUIRE(cmp.objMap[t] >= 0);
  }
  for (int m = 0; m < ic.total->morphisms(); ++m) {
    const int al = ic.toLeft.morMap[m], ga = ic.toRight.morMap[m];
    for (int w = 0; w < sp.total->morphisms(); ++w) {
      if (sp.total->src(w) != cmp.objMap[ic.total->src(m)]) continue;
      if (sp.toLeft.morMap[w] != al) continue;
      const int pm = sp.toRight.morMap[w];
      if (path.toLeft.morMap[pm] == ga && path.toRight.morMap[pm] == f.morMap[al]) {
        cmp.morMap[m] = w;
        break;
      }
    }
    REQUIRE(cmp.morMap[m] >= 0);
  }
  validate_functor(cmp);
  return cmp;
}

}  // namespace

TEST_CASE("primitive groupoids validate") {
  classifying(symmetric_group(3))->validate();
  indiscrete(4)->validate();
  empty_groupoid()->validate();
  coproduct({classifying(cyclic_group(2)), classifying(cyclic_group(3))})
      .total->validate();
  validate_functor(eg_quotient(symmetric_group(3)));
  validate_functor(classifying_functor(trivial_hom(cyclic_group(2), symmetric_group(3))));
}

TEST_CASE("predicates") {
  SUBCASE("identity functor") {
    auto F = identity_functor(classifying(symmetric_group(3)));
    CHECK(is_faithful(F));
    CHECK(is_isofibration(F));
    CHECK(is_equivalence(F));
  }
  SUBCASE("B of a subgroup inclusion") {
    auto S3 = symmetric_group(3);
    auto t = rank_of("(1 2)", 3);
    auto M = materialize(closure_subgroup(S3, {t}));
    auto F = classifying_functor(inclusion_hom(M));
    CHECK(is_faithful(F));
    // only surjective homomorphisms give isofibrations between one-object
    // groupoids: (1 2 3) has no preimage
    CHECK_FALSE(is_isofibration(F));
    CHECK_FALSE(is_equivalence(F));
  }
  SUBCASE("EC2 -> BC2") {
    auto q = eg_quotient(cyclic_group(2));
    CHECK(is_faithful(q));
    CHECK(is_isofibration(q));
    CHECK_FALSE(is_equivalence(q));  // not full
    CHECK(is_full(identity_functor(q.target)));
  }
  SUBCASE("B of a surjection is an isofibration") {
    auto C4 = cyclic_group(4);
    auto C2 = cyclic_group(2);
    auto F = classifying_functor(make_hom(C4, C2, {0, 1, 0, 1}));
    CHECK(is_isofibration(F));
    CHECK_FALSE(is_faithful(F));
  }
}

TEST_CASE("coproducts") {
  SUBCASE("empty") {
    auto cp = coproduct({});
    CHECK(cp.total->objects() == 0);
    CHECK(cp.total->morphisms() == 0);
  }
  SUBCASE("single summand") {
    auto BG = classifying(symmetric_group(3));
    auto cp = coproduct({BG});
    CHECK(cp.total->same_tables(*BG));
    CHECK(is_equivalence(cp.injections[0]));
  }
  SUBCASE("BC2 + BC3") {
    auto cp = coproduct({classifying(cyclic_group(2)), classifying(cyclic_group(3))});
    CHECK(cp.total->objects() == 2);
    CHECK(aut_orders(cp.total) == std::multiset<int>{2, 3});
    for (const auto& inj : cp.injections) {
      validate_functor(inj);
      CHECK(is_faithful(inj));
    }
    // injections are jointly essentially surjective
    for (int y = 0; y < cp.total->objects(); ++y) {
      bool hit = false;
      for (const auto& inj : cp.injections)
        for (int o : inj.objMap)
          if (o == y) hit = true;
      CHECK(hit);
    }
  }
}

TEST_CASE("strict pullbacks") {
  SUBCASE("pullback along the identity is the source") {
    auto S3 = symmetric_group(3);
    auto f = eg_quotient(S3);
    auto pb = strict_pullback(f, identity_functor(classifying(S3)));
    pb.total->validate();
    CHECK(pb.total->objects() == f.source->objects());
    CHECK(pb.total->morphisms() == f.source->morphisms());
    CHECK(is_equivalence(pb.toLeft));
  }
  SUBCASE("two points over BG") {
    auto G = symmetric_group(3);
    auto f = classifying_functor(trivial_hom(trivial_group(), G));
    auto pb = strict_pullback(f, f);
    CHECK(pb.total->objects() == 1);
    CHECK(pb.total->morphisms() == 1);
  }
  SUBCASE("EG ×_BG EG for the quotient isofibration") {
    auto G = symmetric_group(3);
    auto q = eg_quotient(G);
    auto pb = strict_pullback(q, q);
    CHECK(pb.gWasIsofibration);
    pb.total->validate();
    CHECK(pb.total->objects() == 36);
    auto sk = skeleton(pb.total);
    CHECK(sk.repObj.size() == 6);
    for (const auto& a : sk.autGroups) CHECK(a->order() == 1);
  }
}

TEST_CASE("iso-comma groupoids") {
  SUBCASE("two points over BG give a discrete groupoid of size |G|") {
    auto G = symmetric_group(3);
    auto f = classifying_functor(trivial_hom(trivial_group(), G));
    auto ic = iso_comma(f, f);
    ic.total->validate();
    validate_natural_iso(ic.filler);
    CHECK(ic.total->objects() == 6);
    CHECK(ic.total->morphisms() == 6);  // identities only
  }
  SUBCASE("iso_comma(id, id) is equivalent to BG itself") {
    auto G = symmetric_group(3);
    auto idf = identity_functor(classifying(G));
    auto ic = iso_comma(idf, idf);
    ic.total->validate();
    CHECK(aut_orders(ic.total) == std::multiset<int>{6});
  }
  SUBCASE("inertia groupoid via the diagonal: conjugacy classes and centralizers") {
    auto G = symmetric_group(3);
    auto diag = classifying_functor(diagonal_hom(G));
    auto ic = iso_comma(diag, diag);
    ic.total->validate();
    validate_natural_iso(ic.filler);
    // centralizer oracle straight from the group
    std::set<int> seenClasses;
    std::multiset<int> oracle;
    for (int g = 0; g < G->order(); ++g) {
      int cls = g;
      for (int h = 0; h < G->order(); ++h) cls = std::min(cls, G->conjugate(h, g));
      if (!seenClasses.insert(cls).second) continue;
      int c = 0;
      for (int h = 0; h < G->order(); ++h)
        if (G->mul(h, g) == G->mul(g, h)) ++c;
      oracle.insert(c);
    }
    CHECK(oracle == std::multiset<int>{2, 3, 6});
    CHECK(aut_orders(ic.total) == oracle);
  }
  SUBCASE("BK over BG against BH: components count double cosets") {
    for (auto G : {symmetric_group(3), dihedral_group(4), quaternion_group(),
                   alternating_group(4)}) {
      auto lat = subgroups(G);
      for (const auto& K : lat.all)
        for (const auto& H : lat.all) {
          auto fK = classifying_functor(inclusion_hom(materialize(K)));
          auto fH = classifying_functor(inclusion_hom(materialize(H)));
          auto ic = iso_comma(fK, fH);
          auto sk = skeleton(ic.total);
          CHECK(sk.repObj.size() == double_cosets(G, K, H).size());
          // matching automorphism orders |K ∩ gHg^-1|
          std::multiset<int> orders, oracle;
          for (const auto& a : sk.autGroups) orders.insert(a->order());
          for (const auto& dc : double_cosets(G, K, H))
            oracle.insert(dc.intersection.order());
          CHECK(orders == oracle);
        }
    }
  }
  SUBCASE("subgroup-pair sweep in S4 up to conjugacy") {
    auto G = symmetric_group(4);
    auto lat = subgroups(G);
    for (const auto& K : lat.classReps)
      for (const auto& H : lat.classReps) {
        auto ic = iso_comma(classifying_functor(inclusion_hom(materialize(K))),
                            classifying_functor(inclusion_hom(materialize(H))));
        CHECK(skeleton(ic.total).repObj.size() == double_cosets(G, K, H).size());
      }
  }
  SUBCASE("pullback stability of faithfulness") {
    auto G = symmetric_group(3);
    auto lat = subgroups(G);
    for (const auto& K : lat.classReps)
      for (const auto& H : lat.classReps) {
        auto fK = classifying_functor(inclusion_hom(materialize(K)));
        auto fH = classifying_functor(inclusion_hom(materialize(H)));
        auto ic = iso_comma(fK, fH);
        CHECK(is_faithful(fH));
        CHECK(is_faithful(ic.toLeft));  // pullback of the faithful leg
      }
    // also along a non-faithful g the projection need not be faithful
    auto C4 = cyclic_group(4);
    auto pr = classifying_functor(make_hom(C4, cyclic_group(2), {0, 1, 0, 1}));
    auto ic = iso_comma(pr, pr);
    CHECK_FALSE(is_faithful(ic.toLeft));
  }
  SUBCASE("iso-comma agrees with the path-object strict pullback") {
    auto S3 = symmetric_group(3);
    auto t = rank_of("(1 2)", 3);
    auto M = materialize(closure_subgroup(S3, {t}));
    auto incl = classifying_functor(inclusion_hom(M));
    auto triv = classifying_functor(trivial_hom(trivial_group(), S3));
    for (const auto& [f, g] : {std::pair{incl, incl}, std::pair{triv, incl},
                               std::pair{incl, triv}}) {
      auto cmp = comma_vs_path_pullback(f, g);
      CHECK(is_equivalence(cmp));
    }
  }
}

TEST_CASE("skeleton") {
  SUBCASE("discrete groupoid") {
    auto disc = coproduct({classifying(trivial_group()), classifying(trivial_group()),
                           classifying(trivial_group())});
    auto sk = skeleton(disc.total);
    CHECK(sk.repObj.size() == 3);
    for (const auto& a : sk.autGroups) CHECK(a->order() == 1);
  }
  SUBCASE("EG has one component and trivial automorphisms") {
    auto sk = skeleton(indiscrete(6));
    CHECK(sk.repObj.size() == 1);
    CHECK(sk.autGroups[0]->order() == 1);
  }
  SUBCASE("classifying groupoid recovers the group table") {
    auto G = quaternion_group();
    auto sk = skeleton(classifying(G));
    REQUIRE(sk.autGroups.size() == 1);
    CHECK(sk.autGroups[0]->same_table(*G));
  }
  SUBCASE("equivalence data is valid") {
    auto G = symmetric_group(3);
    auto q = eg_quotient(G);
    auto pb = strict_pullback(q, q);
    auto sk = skeleton(pb.total);
    validate_functor(sk.incl);
    validate_functor(sk.retr);
    validate_natural_iso(sk.inclRetrToId);
    CHECK(is_equivalence(sk.incl));
    CHECK(is_equivalence(sk.retr));
    // retraction after inclusion is the identity on the nose
    auto ri = compose_functors(sk.retr, sk.incl);
    CHECK(ri.objMap == identity_functor(sk.skel).objMap);
    CHECK(ri.morMap == identity_functor(sk.skel).morMap);
  }
}
