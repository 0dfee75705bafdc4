#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "burnside/biset.hpp"
#include "burnside/error.hpp"
#include "burnside/rng.hpp"

using namespace burnside;

namespace {

SubHomPair canon(const GroupPtr& cod, const GroupPtr& amb, std::vector<int> L,
                 std::vector<int> phi) {
  return canonical_pair(*cod, *amb, SubHomPair{std::move(L), std::move(phi)});
}

TransitiveClass cls(const GroupPtr& cod, const GroupPtr& amb, std::vector<int> L,
                    std::vector<int> phi) {
  TransitiveClass tc;
  tc.pair = canon(cod, amb, std::move(L), std::move(phi));
  return tc;
}

// one-cell biset over (BG, BH) from explicit class data
Biset one_cell(const GroupPtr& G, const GroupPtr& H,
               std::vector<std::pair<SubHomPair, int>> pieces) {
  BisetClass data;
  data.left = {G};
  data.right = {H};
  for (auto& [p, m] : pieces) {
    TransitiveClass tc;
    tc.pair = canonical_pair(*G, *H, p);
    data.classes.emplace_back(tc, m);
  }
  std::sort(data.classes.begin(), data.classes.end());
  return biset_of_classes(data);
}

Biset random_biset(Rng& rng, const GroupPtr& G, const GroupPtr& H) {
  auto latH = subgroups(H);
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
  BisetClass data;
  data.left = {G};
  data.right = {H};
  for (const auto& [tc, m] : mult) data.classes.emplace_back(tc, m);
  return biset_of_classes(data);
}

std::multiset<int> aut_orders(const GroupoidPtr& G) {
  auto sk = skeleton(G);
  std::multiset<int> out;
  for (const auto& a : sk.autGroups) out.insert(a->order());
  return out;
}

}  // namespace

TEST_CASE("transitive cells realize their class data") {
  auto G = symmetric_group(3);
  auto H = cyclic_group(2);
  // free orbit over (G, H)
  auto X = one_cell(G, H, {{SubHomPair{{0}, {0}}, 1}});
  CHECK(X.cells[0][0].size == 12);
  auto d = decompose(X);
  REQUIRE(d.classes.size() == 1);
  CHECK(d.classes[0].second == 1);
  CHECK(d.classes[0].first.pair == canon(G, H, {0}, {0}));
}

TEST_CASE("decompose") {
  auto C2 = cyclic_group(2);
  SUBCASE("empty biset") {
    Biset X;
    X.left = {C2};
    X.right = {C2};
    X.cells.assign(1, std::vector<BisetCell>(1));
    X.cells[0][0].actL.assign(2, {});
    X.cells[0][0].actR.assign(2, {});
    CHECK(decompose(X).classes.empty());
  }
  SUBCASE("regular orbit gives the free class") {
    auto X = one_cell(C2, C2, {{SubHomPair{{0}, {0}}, 1}});
    CHECK(X.cells[0][0].size == 4);
    auto d = decompose(X);
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].first.pair == canon(C2, C2, {0}, {0}));
  }
  SUBCASE("diagonal plus free orbit") {
    auto X = one_cell(C2, C2, {{SubHomPair{{0, 1}, {0, 1}}, 1},
                               {SubHomPair{{0}, {0}}, 1}});
    auto d = decompose(X);
    REQUIRE(d.classes.size() == 2);
    CHECK(d.classes[0].first.pair == canon(C2, C2, {0}, {0}));
    CHECK(d.classes[1].first.pair == canon(C2, C2, {0, 1}, {0, 1}));
    CHECK(d.classes[0].second == 1);
    CHECK(d.classes[1].second == 1);
  }
  SUBCASE("orbit sizes satisfy |G||H|/|L|") {
    auto G = symmetric_group(3);
    for (const auto& L : subgroups(G).classReps) {
      auto M = materialize(L);
      SubHomPair p;
      p.L = L.elements;
      p.phi.resize(p.L.size());
      for (size_t i = 0; i < p.L.size(); ++i) p.phi[i] = p.L[i];  // inclusion
      auto X = one_cell(G, G, {{p, 1}});
      CHECK(X.cells[0][0].size == 36 / L.order());
      CHECK(decompose(X).classes.size() == 1);
    }
  }
  SUBCASE("freeness violations are rejected") {
    Biset X;
    X.left = {C2};
    X.right = {trivial_group()};
    X.cells.assign(1, std::vector<BisetCell>(1));
    auto& c = X.cells[0][0];
    c.size = 2;
    c.actL = {{0, 1}, {1, 0}};
    c.actR = {{0, 1}};
    validate_biset(X);  // the regular C2-set is fine
    c.actL = {{0, 1}, {0, 1}};  // trivial action: fixed points
    CHECK_THROWS_AS(validate_biset(X), FreenessViolated);
  }
}

TEST_CASE("biset_iso") {
  auto C2 = cyclic_group(2);
  auto X = one_cell(C2, C2, {{SubHomPair{{0}, {0}}, 1}});
  CHECK(biset_iso(X, X));
  // one regular orbit vs two diagonal orbits: same size, different classes
  auto Y = one_cell(C2, C2, {{SubHomPair{{0, 1}, {0, 1}}, 2}});
  CHECK(X.cells[0][0].size == Y.cells[0][0].size);
  CHECK_FALSE(biset_iso(X, Y));
  // two conjugate pairs give isomorphic bisets
  auto G = symmetric_group(3);
  const int t12 = static_cast<int>(perm::lex_rank(perm::parse_cycles("(1 2)", 3)[0]));
  const int t13 = static_cast<int>(perm::lex_rank(perm::parse_cycles("(1 3)", 3)[0]));
  auto A = one_cell(G, G, {{SubHomPair{{0, t12}, {0, t12}}, 1}});
  auto B = one_cell(G, G, {{SubHomPair{{0, t13}, {0, t13}}, 1}});
  CHECK(biset_iso(A, B));
}

TEST_CASE("grothendieck totals") {
  SUBCASE("free orbit is equivalent to a point") {
    auto G = cyclic_group(3);
    auto H = cyclic_group(2);
    auto X = one_cell(G, H, {{SubHomPair{{0}, {0}}, 1}});
    auto tot = grothendieck(X);
    tot.total->validate();
    validate_functor(tot.projL);
    validate_functor(tot.projR);
    CHECK(aut_orders(tot.total) == std::multiset<int>{1});
  }
  SUBCASE("one fixed point of BH") {
    auto H = symmetric_group(3);
    Biset X;
    X.left = {trivial_group()};
    X.right = {H};
    X.cells.assign(1, std::vector<BisetCell>(1));
    auto& c = X.cells[0][0];
    c.size = 1;
    c.actL = {{0}};
    c.actR.assign(6, {0});
    auto tot = grothendieck(X);
    CHECK(tot.total->objects() == 1);
    CHECK(tot.total->morphisms() == 6);
    CHECK(is_faithful(tot.projR));
    CHECK(aut_orders(tot.total) == std::multiset<int>{6});
  }
  SUBCASE("diagonal orbit of C2 is BC2") {
    auto C2 = cyclic_group(2);
    auto X = one_cell(C2, C2, {{SubHomPair{{0, 1}, {0, 1}}, 1}});
    CHECK(X.cells[0][0].size == 2);
    auto tot = grothendieck(X);
    CHECK(aut_orders(tot.total) == std::multiset<int>{2});
  }
}

TEST_CASE("straighten") {
  SUBCASE("identity over a trivial left side") {
    auto H = symmetric_group(3);
    auto BH = classifying(H);
    auto projG = classifying_functor(trivial_hom(H, trivial_group()));
    auto projH = identity_functor(BH);
    auto X = straighten(projG, projH);
    REQUIRE(X.cells.size() == 1);
    CHECK(X.cells[0][0].size == 1);
  }
  SUBCASE("EG over BG gives the regular left G-set") {
    auto G = symmetric_group(3);
    auto q = eg_quotient(G);
    GroupoidFunctor toPoint;
    toPoint.source = q.source;
    toPoint.target = classifying(trivial_group());
    toPoint.objMap.assign(q.source->objects(), 0);
    toPoint.morMap.assign(q.source->morphisms(), 0);
    auto X = straighten(q, toPoint);
    CHECK(X.cells[0][0].size == 6);
    auto d = decompose(X);
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].first.pair == canon(G, trivial_group(), {0}, {0}));
  }
  SUBCASE("BH over BG gives the coset cell G/H") {
    auto G = symmetric_group(3);
    const int t = static_cast<int>(perm::lex_rank(perm::parse_cycles("(1 2)", 3)[0]));
    auto M = materialize(closure_subgroup(G, {t}));
    auto incl = classifying_functor(inclusion_hom(M));
    GroupoidFunctor toPoint;
    toPoint.source = incl.source;
    toPoint.target = classifying(trivial_group());
    toPoint.objMap = {0};
    toPoint.morMap.assign(incl.source->morphisms(), 0);
    // right side carries the faithful leg B incl
    auto X = straighten(toPoint, incl);
    CHECK(X.cells[0][0].size == 3);  // |G/H| by the coset enumeration oracle
    auto d = decompose(X);
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].first.pair ==
          canon(trivial_group(), G, {0, t}, {0, 0}));
  }
  SUBCASE("non-faithful right side is rejected") {
    auto H = cyclic_group(2);
    auto BH = classifying(H);
    auto projH = classifying_functor(trivial_hom(H, trivial_group()));
    CHECK_THROWS_AS(straighten(identity_functor(BH), projH), NotRightFaithful);
  }
}

TEST_CASE("round trip: straighten after grothendieck") {
  Rng rng(20240811);
  std::vector<GroupPtr> pool{trivial_group(), cyclic_group(2), cyclic_group(3),
                             klein_four(), symmetric_group(3)};
  for (int it = 0; it < 25; ++it) {
    auto G = pool[rng.below(static_cast<int>(pool.size()))];
    auto H = pool[rng.below(static_cast<int>(pool.size()))];
    auto X = random_biset(rng, G, H);
    auto tot = grothendieck(X);
    auto Y = straighten(tot.projL, tot.projR);
    CHECK(decompose(Y).classes == decompose(X).classes);
  }
}

TEST_CASE("tensor") {
  auto C2 = cyclic_group(2);
  auto C3 = cyclic_group(3);
  auto S3 = symmetric_group(3);
  SUBCASE("unit laws") {
    Rng rng(7);
    for (int it = 0; it < 10; ++it) {
      auto X = random_biset(rng, C3, S3);
      CHECK(decompose(tensor(unit_biset({C3}), X)).classes == decompose(X).classes);
      CHECK(decompose(tensor(X, unit_biset({S3}))).classes == decompose(X).classes);
    }
  }
  SUBCASE("two regular orbits collapse to |H| free orbits") {
    auto X = one_cell(C3, C2, {{SubHomPair{{0}, {0}}, 1}});  // (C3 × C2)-regular
    auto Y = one_cell(C2, S3, {{SubHomPair{{0}, {0}}, 1}});  // (C2 × S3)-regular
    auto Z = tensor(X, Y);
    auto d = decompose(Z);
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].first.pair == canon(C3, S3, {0}, {0}));
    CHECK(d.classes[0].second == 2);  // |C2| copies
  }
  SUBCASE("middle mismatch is rejected") {
    auto X = one_cell(C3, C2, {{SubHomPair{{0}, {0}}, 1}});
    auto Y = one_cell(C3, S3, {{SubHomPair{{0}, {0}}, 1}});
    CHECK_THROWS_AS(tensor(X, Y), MiddleMismatch);
  }
  SUBCASE("associativity and unit up to biset_iso on random triples") {
    Rng rng(20240812);
    std::vector<GroupPtr> pool{trivial_group(), cyclic_group(2), cyclic_group(4),
                               klein_four(), symmetric_group(3), dihedral_group(4)};
    for (int it = 0; it < 15; ++it) {
      auto A = pool[rng.below(static_cast<int>(pool.size()))];
      auto B = pool[rng.below(static_cast<int>(pool.size()))];
      auto C = pool[rng.below(static_cast<int>(pool.size()))];
      auto D = pool[rng.below(static_cast<int>(pool.size()))];
      auto X = random_biset(rng, A, B);
      auto Y = random_biset(rng, B, C);
      auto Z = random_biset(rng, C, D);
      CHECK(biset_iso(tensor(tensor(X, Y), Z), tensor(X, tensor(Y, Z))));
    }
  }
}
