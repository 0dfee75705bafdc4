#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "burnside/error.hpp"
#include "burnside/rng.hpp"
#include "burnside/spans.hpp"

using namespace burnside;

namespace {

int rank_of(const std::string& cycles, int n) {
  return static_cast<int>(perm::lex_rank(perm::parse_cycles(cycles, n)[0]));
}

SubHomPair canon(const GroupPtr& cod, const GroupPtr& amb, std::vector<int> L,
                 std::vector<int> phi) {
  return canonical_pair(*cod, *amb, SubHomPair{std::move(L), std::move(phi)});
}

std::vector<std::pair<SubHomPair, int>> flat(const BisetClass& c) {
  std::vector<std::pair<SubHomPair, int>> out;
  for (const auto& [tc, m] : c.classes) out.emplace_back(tc.pair, m);
  return out;
}

// random span between classifying groupoids, given by 1-2 random classes
Span random_span(Rng& rng, const GroupoidPtr& src, const GroupPtr& G,
                 const GroupoidPtr& tgt, const GroupPtr& H) {
  auto latH = subgroups(H);
  BisetClass data;
  data.left = {G};
  data.right = {H};
  std::map<TransitiveClass, int> mult;
  const int pieces = 1 + rng.below(2);
  for (int p = 0; p < pieces; ++p) {
    const auto& L = latH.all[rng.below(static_cast<int>(latH.all.size()))];
    auto M = materialize(L);
    auto homs = all_homs(M.grp, G);
    const auto& f = homs[rng.below(static_cast<int>(homs.size()))];
    SubHomPair raw;
    raw.L = L.elements;
    raw.phi.resize(raw.L.size());
    for (size_t i = 0; i < raw.L.size(); ++i) raw.phi[i] = f.map[M.toLocal[raw.L[i]]];
    TransitiveClass tc;
    tc.pair = canonical_pair(*G, *H, raw);
    ++mult[tc];
  }
  for (const auto& [tc, m] : mult) data.classes.emplace_back(tc, m);
  return span_of_classes(data, src, tgt);
}

}  // namespace

TEST_CASE("identity spans") {
  SUBCASE("one-object endpoints") {
    for (auto G : {trivial_group(), cyclic_group(2), symmetric_group(3)}) {
      auto s = identity_span(classifying(G));
      validate_span(s);
      auto c = span_to_class(s);
      REQUIRE(c.classes.size() == 1);
      CHECK(c.classes[0].second == 1);
      std::vector<int> all(G->order());
      for (int i = 0; i < G->order(); ++i) all[i] = i;
      CHECK(c.classes[0].first.pair == canon(G, G, all, all));
      // round trip through span_of_classes
      auto s2 = span_of_classes(c, s.source, s.target);
      CHECK(span_to_class(s2) == c);
    }
  }
  SUBCASE("coproduct endpoint") {
    auto cp = coproduct({classifying(cyclic_group(2)), classifying(cyclic_group(3))});
    auto s = identity_span(cp.total);
    auto c = span_to_class(s);
    REQUIRE(c.classes.size() == 2);
    CHECK(c.classes[0].first.leftComp == 0);
    CHECK(c.classes[0].first.rightComp == 0);
    CHECK(c.classes[1].first.leftComp == 1);
    CHECK(c.classes[1].first.rightComp == 1);
    CHECK(span_to_class(span_of_classes(c, cp.total, cp.total)) == c);
  }
}

TEST_CASE("restriction and transfer generators") {
  auto G = symmetric_group(3);
  SUBCASE("restriction along the identity is the identity span") {
    auto r = restriction_span(identity_hom(G));
    CHECK(span_to_class(r) == span_to_class(identity_span(classifying(G))));
  }
  SUBCASE("restriction along 1 -> G") {
    auto r = restriction_span(trivial_hom(trivial_group(), G));
    // BG -> B1 with class (1 <= 1, trivial into G)
    CHECK(r.source->morphisms() == 6);
    CHECK(r.target->morphisms() == 1);
    auto c = span_to_class(r);
    REQUIRE(c.classes.size() == 1);
    CHECK(c.classes[0].first.pair == canon(G, trivial_group(), {0}, {0}));
  }
  SUBCASE("transfer along a transposition subgroup") {
    const int t = rank_of("(1 2)", 3);
    auto M = materialize(closure_subgroup(G, {t}));
    auto s = transfer_span(inclusion_hom(M));
    CHECK(s.source->morphisms() == 2);
    CHECK(s.target->morphisms() == 6);
    auto c = span_to_class(s);
    REQUIRE(c.classes.size() == 1);
    // L = image subgroup of S3, φ the inverse isomorphism onto C2
    CHECK(c.classes[0].first.pair == canon(M.grp, G, {0, t}, {0, 1}));
  }
  SUBCASE("transfer requires injectivity") {
    CHECK_THROWS_AS(transfer_span(trivial_hom(cyclic_group(2), trivial_group())),
                    NotInjective);
  }
}

TEST_CASE("composition") {
  auto G = symmetric_group(3);
  const int t = rank_of("(1 2)", 3);
  auto M = materialize(closure_subgroup(G, {t}));
  auto tr = transfer_span(inclusion_hom(M));      // BH -> BG
  auto res = restriction_span(inclusion_hom(M));  // BG -> BH
  SUBCASE("unit laws") {
    auto c = span_to_class(tr);
    CHECK(span_to_class(compose_spans(identity_span(tr.target), tr)) == c);
    CHECK(span_to_class(compose_spans(tr, identity_span(tr.source))) == c);
  }
  SUBCASE("transfer after restriction: one class through BH") {
    auto s = compose_spans(tr, res);  // BG -> BG
    auto sk = skeleton(s.apex);
    REQUIRE(sk.autGroups.size() == 1);
    CHECK(sk.autGroups[0]->order() == 2);  // apex equivalent to BH
    auto c = span_to_class(s);
    REQUIRE(c.classes.size() == 1);
    CHECK(c.classes[0].first.pair == canon(G, G, {0, t}, {0, t}));
  }
  SUBCASE("restriction after transfer expands by double cosets") {
    auto s = compose_spans(res, tr);  // BH -> BH
    auto c = span_to_class(s);
    REQUIRE(c.classes.size() == 2);
    CHECK(c.classes[0].first.pair == canon(M.grp, M.grp, {0}, {0}));
    CHECK(c.classes[1].first.pair == canon(M.grp, M.grp, {0, 1}, {0, 1}));
  }
  SUBCASE("double coset law against the oracle") {
    for (auto Gb : {symmetric_group(3), dihedral_group(4)}) {
      auto lat = subgroups(Gb);
      for (const auto& K : lat.classReps)
        for (const auto& H : lat.classReps) {
          auto MK = materialize(K);
          auto MH = materialize(H);
          auto s = compose_spans(restriction_span(inclusion_hom(MK)),
                                 transfer_span(inclusion_hom(MH)));
          // oracle: one class (K ∩ gHg^-1 <= K, x -> g^-1 x g) per double coset
          std::map<SubHomPair, int> expect;
          for (const auto& dc : double_cosets(Gb, K, H)) {
            SubHomPair p;
            for (int x : dc.intersection.elements) {
              p.L.push_back(MK.toLocal[x]);
              p.phi.push_back(
                  MH.toLocal[Gb->mul(Gb->mul(Gb->inv(dc.rep), x), dc.rep)]);
            }
            ++expect[canonical_pair(*MH.grp, *MK.grp, p)];
          }
          std::map<SubHomPair, int> got;
          for (const auto& [tc, m] : span_to_class(s).classes) got[tc.pair] += m;
          CHECK(got == expect);
        }
    }
  }
  SUBCASE("endpoint mismatch is rejected") {
    CHECK_THROWS_AS(compose_spans(tr, tr), EndpointMismatch);
  }
}

TEST_CASE("span_to_class on special apexes") {
  SUBCASE("coproduct apex is additive") {
    auto C2 = cyclic_group(2);
    auto BC2 = classifying(C2);
    auto cp = coproduct({BC2, BC2});
    Span s;
    s.source = s.target = BC2;
    s.apex = cp.total;
    s.faithfulLeg = cotuple(cp, {identity_functor(BC2), identity_functor(BC2)});
    s.freeLeg = s.faithfulLeg;
    validate_span(s);
    auto c = span_to_class(s);
    REQUIRE(c.classes.size() == 1);
    CHECK(c.classes[0].second == 2);
    CHECK(c.classes[0].first.pair == canon(C2, C2, {0, 1}, {0, 1}));
  }
  SUBCASE("EG as apex of a span B1 -> BG") {
    auto G = symmetric_group(3);
    auto q = eg_quotient(G);
    Span s;
    s.apex = q.source;
    s.target = q.target;
    s.source = classifying(trivial_group());
    s.faithfulLeg = q;
    GroupoidFunctor toPoint;
    toPoint.source = q.source;
    toPoint.target = s.source;
    toPoint.objMap.assign(q.source->objects(), 0);
    toPoint.morMap.assign(q.source->morphisms(), 0);
    s.freeLeg = toPoint;
    validate_span(s);
    auto c = span_to_class(s);
    REQUIRE(c.classes.size() == 1);
    CHECK(c.classes[0].second == 1);
    CHECK(c.classes[0].first.pair == canon(trivial_group(), G, {0}, {0}));
    // same class as the transfer along the trivial subgroup
    auto Mt = materialize(trivial_subgroup(G));
    CHECK(flat(c) == flat(span_to_class(transfer_span(inclusion_hom(Mt)))));
  }
}

TEST_CASE("hom bases") {
  auto B1 = classifying(trivial_group());
  SUBCASE("point endpoints") {
    CHECK(hom_basis(B1, B1).rank() == 1);
    CHECK(group_complete(hom_basis(B1, B1)).rank() == 1);
  }
  SUBCASE("into the point: one free class") {
    for (auto G : {cyclic_group(3), symmetric_group(3)})
      CHECK(hom_basis(classifying(G), B1).rank() == 1);
  }
  SUBCASE("out of the point: subgroup classes") {
    auto hb = hom_basis(B1, classifying(symmetric_group(3)));
    CHECK(hb.rank() == 4);
    CHECK(group_complete(std::move(hb)).rank() == 4);
  }
  SUBCASE("BC2 to BC2: three classes") {
    auto C2 = cyclic_group(2);
    auto hb = hom_basis(classifying(C2), classifying(C2));
    REQUIRE(hb.rank() == 3);
    CHECK(hb.classes[0].pair == canon(C2, C2, {0}, {0}));
    CHECK(hb.classes[1].pair == canon(C2, C2, {0, 1}, {0, 0}));
    CHECK(hb.classes[2].pair == canon(C2, C2, {0, 1}, {0, 1}));
  }
  SUBCASE("size bound counts |G||H|/|L|") {
    auto C2 = cyclic_group(2);
    auto hb = hom_basis(classifying(C2), classifying(C2), 2);
    CHECK(hb.rank() == 2);  // the free class (size 4) is cut off
    auto hb1 = hom_basis(classifying(C2), classifying(C2), 1);
    CHECK(hb1.rank() == 0);  // even the diagonal has size 2
  }
  SUBCASE("coproduct target") {
    auto cp = coproduct({classifying(trivial_group()), classifying(cyclic_group(2))});
    auto hb = hom_basis(B1, cp.total);
    CHECK(hb.rank() == 3);  // 1 class into B1, 2 subgroup classes into BC2
  }
}

TEST_CASE("associativity, units and the tensor route on random triples") {
  Rng rng(20240813);
  std::vector<GroupPtr> pool{trivial_group(), cyclic_group(2), cyclic_group(3),
                             cyclic_group(4), klein_four(), symmetric_group(3),
                             dihedral_group(4), quaternion_group()};
  std::vector<GroupoidPtr> bs;
  for (const auto& g : pool) bs.push_back(classifying(g));
  for (int it = 0; it < 20; ++it) {
    const int a = rng.below(8), b = rng.below(8), c = rng.below(8), d = rng.below(8);
    auto al = random_span(rng, bs[a], pool[a], bs[b], pool[b]);
    auto be = random_span(rng, bs[b], pool[b], bs[c], pool[c]);
    auto ga = random_span(rng, bs[c], pool[c], bs[d], pool[d]);
    auto left = span_to_class(compose_spans(ga, compose_spans(be, al)));
    auto right = span_to_class(compose_spans(compose_spans(ga, be), al));
    CHECK(left == right);
    // two-route agreement: iso-comma composition vs biset tensor
    auto viaTensor = decompose(tensor(span_to_biset(al), span_to_biset(be)));
    CHECK(span_to_class(compose_spans(be, al)) == viaTensor);
  }
}
