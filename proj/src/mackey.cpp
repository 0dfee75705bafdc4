#include "burnside/mackey.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <set>

#include "burnside/dsu.hpp"
#include "burnside/error.hpp"
#include "burnside/rng.hpp"

namespace burnside {

namespace {

// ----- finite G-sets (explicit action tables) ---------------------------

struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<std::vector<int>> act;  // per group element
};

GSet transitive_gset(const GroupPtr& G, const Subgroup& L) {
  GSet s;
  s.group = G;
  std::vector<int> cosetOf(G->order(), -1);
  std::vector<int> reps;
  for (int g = 0; g < G->order(); ++g) {
    if (cosetOf[g] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int l : L.elements) cosetOf[G->mul(g, l)] = c;
  }
  s.size = static_cast<int>(reps.size());
  s.act.assign(G->order(), std::vector<int>(s.size));
  for (int g = 0; g < G->order(); ++g)
    for (int c = 0; c < s.size; ++c) s.act[g][c] = cosetOf[G->mul(g, reps[c])];
  return s;
}

GSet product_gset(const GSet& A, const GSet& B) {
  GSet s;
  s.group = A.group;
  s.size = A.size * B.size;
  s.act.assign(A.group->order(), std::vector<int>(s.size));
  for (int g = 0; g < A.group->order(); ++g)
    for (int x = 0; x < A.size; ++x)
      for (int y = 0; y < B.size; ++y)
        s.act[g][x * B.size + y] = A.act[g][x] * B.size + B.act[g][y];
  return s;
}

// the burnside basis of one group, with class-key lookup
struct OrbitBasis {
  std::vector<Subgroup> reps;
  std::vector<std::vector<int>> keys;  // sorted class keys, aligned with reps
  std::vector<std::string> labels;

  int index_of(const Subgroup& H) const {
    auto key = subgroup_class_key(H);
    const auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key)
      throw InternalCheckFailed("stabilizer class missing from the basis");
    return static_cast<int>(it - keys.begin());
  }
};

std::string subgroup_label(const std::vector<int>& elems) {
  std::string s = "L[";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(elems[i]);
  }
  return s + "]";
}

OrbitBasis orbit_basis(const GroupPtr& G, int orderBound) {
  OrbitBasis b;
  for (const auto& H : subgroups(G, orderBound).classReps) {
    b.keys.push_back(H.elements);  // classReps are already canonical and sorted
    b.reps.push_back(H);
    b.labels.push_back(subgroup_label(H.elements));
  }
  return b;
}

std::vector<long long> decompose_gset(const GSet& s, const OrbitBasis& basis) {
  const auto& G = *s.group;
  std::vector<long long> coeffs(basis.reps.size(), 0);
  Dsu dsu(s.size);
  for (int g = 0; g < G.order(); ++g)
    for (int x = 0; x < s.size; ++x) dsu.unite(x, s.act[g][x]);
  std::set<int> seen;
  for (int x = 0; x < s.size; ++x) {
    const int r = dsu.find(x);
    if (!seen.insert(r).second) continue;
    std::vector<int> stab;
    for (int g = 0; g < G.order(); ++g)
      if (s.act[g][r] == r) stab.push_back(g);
    ++coeffs[basis.index_of(make_subgroup(s.group, std::move(stab)))];
  }
  return coeffs;
}

class BurnsideTheory final : public MackeyTheory {
public:
  explicit BurnsideTheory(int orderBound) : bound_(orderBound) {}
  std::string name() const override { return "burnside"; }

  std::vector<std::string> basis(const GroupPtr& G) override {
    return cached(G).labels;
  }

  IntMat res(const Homomorphism& phi) override {
    const auto& bG = cached(phi.target);
    const auto& bH = cached(phi.source);
    IntMat m(static_cast<int>(bH.reps.size()), static_cast<int>(bG.reps.size()));
    for (size_t j = 0; j < bG.reps.size(); ++j) {
      auto gs = transitive_gset(phi.target, bG.reps[j]);
      GSet restricted;
      restricted.group = phi.source;
      restricted.size = gs.size;
      restricted.act.resize(phi.source->order());
      for (int h = 0; h < phi.source->order(); ++h)
        restricted.act[h] = gs.act[phi.map[h]];
      auto col = decompose_gset(restricted, bH);
      for (size_t i = 0; i < col.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }
    return m;
  }

  IntMat tr(const Homomorphism& inj) override {
    if (!is_injective_hom(inj))
      throw NotInjective("transfers require an injective homomorphism");
    const auto& bH = cached(inj.source);
    const auto& bG = cached(inj.target);
    const auto G = inj.target;
    IntMat m(static_cast<int>(bG.reps.size()), static_cast<int>(bH.reps.size()));
    for (size_t j = 0; j < bH.reps.size(); ++j) {
      auto x = transitive_gset(inj.source, bH.reps[j]);
      // induced set (G × X) / (g·i(h), x) ~ (g, h·x), by explicit quotient
      const int n = G->order() * x.size;
      Dsu dsu(n);
      for (int g = 0; g < G->order(); ++g)
        for (int h = 0; h < inj.source->order(); ++h)
          for (int p = 0; p < x.size; ++p)
            dsu.unite(G->mul(g, inj.map[h]) * x.size + p,
                      g * x.size + x.act[h][p]);
      std::map<int, int> index;
      for (int v = 0; v < n; ++v) {
        const int r = dsu.find(v);
        if (!index.count(r)) {
          const int id = static_cast<int>(index.size());
          index[r] = id;
        }
      }
      GSet induced;
      induced.group = G;
      induced.size = static_cast<int>(index.size());
      induced.act.assign(G->order(), std::vector<int>(induced.size, -1));
      for (int v = 0; v < n; ++v) {
        const int cls = index.at(dsu.find(v));
        const int g = v / x.size, p = v % x.size;
        for (int g0 = 0; g0 < G->order(); ++g0)
          induced.act[g0][cls] = index.at(dsu.find(G->mul(g0, g) * x.size + p));
      }
      auto col = decompose_gset(induced, bG);
      for (size_t i = 0; i < col.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }
    return m;
  }

private:
  const OrbitBasis& cached(const GroupPtr& G) {
    auto it = cache_.find(G.get());
    if (it != cache_.end()) return it->second;
    if (G->order() > bound_)
      throw OrderBoundExceeded("group exceeds the configured order bound");
    return cache_.emplace(G.get(), orbit_basis(G, bound_)).first->second;
  }
  int bound_;
  std::map<const FiniteGroup*, OrbitBasis> cache_;
};

class SwanTheory final : public MackeyTheory {
public:
  SwanTheory(PermCatPtr cat, long long bound) : cat_(std::move(cat)), bound_(bound) {}
  std::string name() const override { return "swan(" + cat_->describe() + ")"; }

  std::vector<std::string> basis(const GroupPtr& G) override {
    return cached(G).labels;
  }

  IntMat res(const Homomorphism& phi) override {
    const auto& mG = cached(phi.target);
    const auto& mH = cached(phi.source);
    IntMat m(static_cast<int>(mH.basis.size()), static_cast<int>(mG.basis.size()));
    for (size_t j = 0; j < mG.basis.size(); ++j) {
      auto col = decompose_in_basis(mH, restrict_gobject(phi, mG.basis[j]));
      for (size_t i = 0; i < col.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }
    return m;
  }

  IntMat tr(const Homomorphism& inj) override {
    if (!is_injective_hom(inj))
      throw NotInjective("transfers require an injective homomorphism");
    const auto& mH = cached(inj.source);
    const auto& mG = cached(inj.target);
    const auto G = inj.target;
    // image subgroup with the transported action
    std::vector<int> image(inj.map);
    auto sub = make_subgroup(G, image);
    auto M = materialize(sub);
    std::vector<int> pre(G->order(), -1);
    for (int h = 0; h < inj.source->order(); ++h) pre[inj.map[h]] = h;
    auto cs = coset_system(G, sub);
    IntMat m(static_cast<int>(mG.basis.size()), static_cast<int>(mH.basis.size()));
    for (size_t j = 0; j < mH.basis.size(); ++j) {
      const auto& X = mH.basis[j];
      std::vector<CatMor> act(M.grp->order());
      for (int l = 0; l < M.grp->order(); ++l)
        act[l] = X.act[pre[M.toParent[l]]];
      auto Xl = make_gobject(M.grp, X.cat, X.object, std::move(act));
      auto col = decompose_in_basis(mG, norm_gobject(M, cs, Xl));
      for (size_t i = 0; i < col.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }
    return m;
  }

  const IsoClassMonoid& cached(const GroupPtr& G) {
    auto it = cache_.find(G.get());
    if (it != cache_.end()) return it->second;
    return cache_.emplace(G.get(), iso_classes(G, cat_, bound_)).first->second;
  }

private:
  PermCatPtr cat_;
  long long bound_;
  std::map<const FiniteGroup*, IsoClassMonoid> cache_;
};

GroupPtr single_component_group(const GroupoidPtr& B) {
  auto sk = skeleton(B);
  if (sk.autGroups.size() != 1)
    throw InputError("evaluation endpoints must be connected groupoids");
  return sk.autGroups[0];
}

}  // namespace

std::shared_ptr<MackeyTheory> burnside_theory(int orderBound) {
  return std::make_shared<BurnsideTheory>(orderBound);
}

std::shared_ptr<MackeyTheory> swan_theory(PermCatPtr cat, long long bound) {
  return std::make_shared<SwanTheory>(std::move(cat), bound);
}

bool MackeyData::in_family(const GroupPtr& G) const {
  for (const auto& g : groups)
    if (g.get() == G.get() || g->same_table(*G)) return true;
  return false;
}

MackeyData MackeyData::extended(const std::vector<GroupPtr>& extra) const {
  MackeyData out = *this;
  for (const auto& g : extra)
    if (!out.in_family(g)) out.groups.push_back(g);
  return out;
}

MackeyData burnside_mackey(std::vector<GroupPtr> groups, int orderBound) {
  for (const auto& g : groups)
    if (g->order() > orderBound)
      throw OrderBoundExceeded("family group exceeds the order bound");
  return MackeyData{std::move(groups), burnside_theory(orderBound)};
}

MackeyData swan_mackey(PermCatPtr cat, std::vector<GroupPtr> groups, long long bound) {
  MackeyData M{std::move(groups), swan_theory(std::move(cat), bound)};
  for (const auto& g : M.groups) M.theory->basis(g);  // fail fast
  return M;
}

IntMat evaluate_span(const MackeyData& M, const Span& alpha) {
  auto src = single_component_group(alpha.source);
  auto tgt = single_component_group(alpha.target);
  GroupPtr G, H;
  for (const auto& g : M.groups) {
    if (!G && g->same_table(*src)) G = g;
    if (!H && g->same_table(*tgt)) H = g;
  }
  if (!G || !H) throw GroupNotInFamily("span endpoint group is not in the family");
  const int rows = M.theory->rank(H);
  const int cols = M.theory->rank(G);
  IntMat out(rows, cols);
  for (const auto& [tc, mult] : span_to_class(alpha).classes) {
    auto L = make_subgroup(H, tc.pair.L);
    auto ML = materialize(L);
    auto incl = make_hom(ML.grp, H, ML.toParent);
    std::vector<int> phiMap(ML.grp->order());
    std::vector<int> phiOf(H->order(), -1);
    for (size_t k = 0; k < tc.pair.L.size(); ++k) phiOf[tc.pair.L[k]] = tc.pair.phi[k];
    for (int l = 0; l < ML.grp->order(); ++l) phiMap[l] = phiOf[ML.toParent[l]];
    auto phi = make_hom(ML.grp, G, std::move(phiMap));
    auto term = M.theory->tr(incl) * M.theory->res(phi);
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += mult * term.data[i];
  }
  return out;
}

EvaluationReport check_double_coset(const MackeyData& M, const GroupPtr& G,
                                    const Subgroup& K, const Subgroup& H) {
  EvaluationReport rep;
  rep.check = "double-coset";
  auto MK = materialize(K);
  auto MH = materialize(H);
  auto Mx = M.extended({G, MK.grp, MH.grp});
  auto engine = evaluate_span(
      Mx, compose_spans(restriction_span(make_hom(MK.grp, G, MK.toParent)),
                        transfer_span(make_hom(MH.grp, G, MH.toParent))));
  IntMat oracle(Mx.theory->rank(MK.grp), Mx.theory->rank(MH.grp));
  for (const auto& dc : double_cosets(G, K, H)) {
    auto MJ = materialize(dc.intersection);
    std::vector<int> toK(MJ.grp->order()), toH(MJ.grp->order());
    for (int j = 0; j < MJ.grp->order(); ++j) {
      toK[j] = MK.toLocal[MJ.toParent[j]];
      toH[j] = MH.toLocal[G->mul(G->mul(G->inv(dc.rep), MJ.toParent[j]), dc.rep)];
    }
    auto term = Mx.theory->tr(make_hom(MJ.grp, MK.grp, toK)) *
                Mx.theory->res(make_hom(MJ.grp, MH.grp, toH));
    for (size_t i = 0; i < oracle.data.size(); ++i) oracle.data[i] += term.data[i];
  }
  rep.checked = 1;
  rep.pass = engine == oracle;
  rep.details["group"] = G->name();
  rep.details["left"] = subgroup_label(K.elements);
  rep.details["right"] = subgroup_label(H.elements);
  if (!rep.pass) {
    rep.details["engine"] = engine.data;
    rep.details["oracle"] = oracle.data;
  }
  return rep;
}

EvaluationReport check_all_double_cosets(const MackeyData& M, int jobs) {
  EvaluationReport rep;
  rep.check = "double-coset-sweep";
  struct Task {
    GroupPtr G;
    Subgroup K, H;
  };
  std::vector<Task> tasks;
  for (const auto& G : M.groups) {
    auto lat = subgroups(G);
    for (const auto& K : lat.classReps)
      for (const auto& H : lat.classReps) tasks.push_back({G, K, H});
  }
  std::vector<EvaluationReport> results(tasks.size());
  if (jobs <= 1) {
    for (size_t t = 0; t < tasks.size(); ++t)
      results[t] = check_double_coset(M, tasks[t].G, tasks[t].K, tasks[t].H);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> nextTask{0};
    for (int w = 0; w < jobs; ++w)
      futs.push_back(std::async(std::launch::async, [&] {
        for (size_t t = nextTask++; t < tasks.size(); t = nextTask++)
          results[t] = check_double_coset(M, tasks[t].G, tasks[t].K, tasks[t].H);
      }));
    for (auto& f : futs) f.get();
  }
  rep.pass = true;
  rep.checked = static_cast<long long>(tasks.size());
  rep.details["counterexample"] = nullptr;
  for (const auto& r : results)
    if (!r.pass && rep.pass) {
      rep.pass = false;
      rep.details["counterexample"] = r.details;
    }
  return rep;
}

namespace {

// a random span between listed groups given by one or two basis classes
Span random_span(Rng& rng, const GroupoidPtr& src, const GroupPtr& G,
                 const GroupoidPtr& tgt, const GroupPtr& H) {
  auto hb = hom_basis(src, tgt);
  BisetClass data;
  data.left = {G};
  data.right = {H};
  std::map<TransitiveClass, int> mult;
  const int pieces = 1 + rng.below(2);
  for (int p = 0; p < pieces; ++p)
    ++mult[hb.classes[rng.below(hb.rank())]];
  for (const auto& [tc, m] : mult) data.classes.emplace_back(tc, m);
  return span_of_classes(data, src, tgt);
}

}  // namespace

EvaluationReport check_functoriality(const MackeyData& M, int samples,
                                     std::uint64_t seed) {
  EvaluationReport rep;
  rep.check = "functoriality";
  rep.details["seed"] = seed;
  Rng rng(seed);
  std::vector<GroupoidPtr> bs;
  for (const auto& g : M.groups) bs.push_back(classifying(g));
  for (int it = 0; it < samples; ++it) {
    const int a = rng.below(static_cast<int>(M.groups.size()));
    const int b = rng.below(static_cast<int>(M.groups.size()));
    const int c = rng.below(static_cast<int>(M.groups.size()));
    auto alpha = random_span(rng, bs[a], M.groups[a], bs[b], M.groups[b]);
    auto beta = random_span(rng, bs[b], M.groups[b], bs[c], M.groups[c]);
    auto lhs = evaluate_span(M, compose_spans(beta, alpha));
    auto rhs = evaluate_span(M, beta) * evaluate_span(M, alpha);
    ++rep.checked;
    if (!(lhs == rhs)) {
      rep.pass = false;
      rep.details["counterexample"] = {
          {"sample", it},
          {"alpha", nlohmann::json::array()},
          {"groups", {M.groups[a]->name(), M.groups[b]->name(), M.groups[c]->name()}},
          {"composite", lhs.data},
          {"product", rhs.data}};
      for (const auto& [tc, m] : span_to_class(alpha).classes)
        rep.details["counterexample"]["alpha"].push_back(
            {{"class", class_label(tc)}, {"mult", m}});
      return rep;
    }
  }
  return rep;
}

namespace {

// homomorphisms up to conjugation on both sides
std::vector<Homomorphism> homs_up_to_conjugacy(const GroupPtr& S, const GroupPtr& T) {
  std::set<std::vector<int>> seen;
  std::vector<Homomorphism> out;
  for (auto& f : all_homs(S, T)) {
    std::vector<int> best = f.map;
    for (int g = 0; g < T->order(); ++g)
      for (int h = 0; h < S->order(); ++h) {
        std::vector<int> cand(f.map.size());
        for (int x = 0; x < S->order(); ++x)
          cand[x] = T->conjugate(g, f.map[S->conjugate(h, x)]);
        if (cand < best) best = cand;
      }
    if (seen.insert(best).second) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

EvaluationReport compare_main_theorem(const GroupPtr& base,
                                      const std::vector<GroupPtr>& groups,
                                      int blockBound) {
  EvaluationReport rep;
  rep.check = "main-theorem";
  auto F = free_category(base, blockBound);
  auto th = swan_theory(F, blockBound);
  auto Bbase = classifying(base);
  std::vector<GroupoidPtr> bs;
  for (const auto& g : groups) bs.push_back(classifying(g));

  // basis bijection per group
  std::vector<HomBasis> spanBases;
  for (size_t i = 0; i < groups.size(); ++i) {
    auto monoid = iso_classes(groups[i], F, blockBound);
    auto hb = hom_basis(Bbase, bs[i],
                        static_cast<long long>(blockBound) * base->order());
    bool match = monoid.keys.size() == hb.classes.size();
    for (size_t k = 0; match && k < monoid.keys.size(); ++k)
      match = monoid.keys[k] == hb.classes[k].pair;
    ++rep.checked;
    if (!match) {
      rep.pass = false;
      rep.details["counterexample"] = {{"stage", "basis"},
                                       {"group", groups[i]->name()},
                                       {"swan-rank", monoid.keys.size()},
                                       {"span-rank", hb.classes.size()}};
      return rep;
    }
    spanBases.push_back(std::move(hb));
  }

  // span-side structure matrix: compose each realized basis span with the
  // generator span and expand in the target basis
  auto spanMatrix = [&](const Span& gen, const HomBasis& from, const HomBasis& to) {
    IntMat m(to.rank(), from.rank());
    for (int j = 0; j < from.rank(); ++j) {
      BisetClass one;
      one.left = from.sourceComps;
      one.right = from.targetComps;
      one.classes.emplace_back(from.classes[j], 1);
      auto composite = compose_spans(gen, span_of_classes(one, from.source, from.target));
      for (const auto& [tc, mult] : span_to_class(composite).classes) {
        const int idx = to.index_of(tc);
        if (idx < 0) throw OrderBoundExceeded("composite class left the basis");
        m.at(idx, j) += mult;
      }
    }
    return m;
  };

  for (size_t i = 0; i < groups.size(); ++i)
    for (size_t j = 0; j < groups.size(); ++j) {
      for (const auto& phi : homs_up_to_conjugacy(groups[i], groups[j])) {
        // restriction: M(G_j) -> M(G_i) against composition with the
        // restriction span BG_j -> BG_i
        auto swanRes = th->res(phi);
        auto spanRes = spanMatrix(restriction_span(phi), spanBases[j], spanBases[i]);
        ++rep.checked;
        if (!(swanRes == spanRes)) {
          rep.pass = false;
          rep.details["counterexample"] = {{"stage", "res"},
                                           {"from", groups[j]->name()},
                                           {"to", groups[i]->name()},
                                           {"hom", phi.map},
                                           {"swan", swanRes.data},
                                           {"span", spanRes.data}};
          return rep;
        }
        if (is_injective_hom(phi)) {
          auto swanTr = th->tr(phi);
          auto spanTr = spanMatrix(transfer_span(phi), spanBases[i], spanBases[j]);
          ++rep.checked;
          if (!(swanTr == spanTr)) {
            rep.pass = false;
            rep.details["counterexample"] = {{"stage", "tr"},
                                             {"from", groups[i]->name()},
                                             {"to", groups[j]->name()},
                                             {"hom", phi.map},
                                             {"swan", swanTr.data},
                                             {"span", spanTr.data}};
            return rep;
          }
        }
      }
    }
  return rep;
}

BurnsideRing burnside_ring(const GroupPtr& G, int orderBound) {
  BurnsideRing ring;
  ring.group = G;
  auto basis = orbit_basis(G, orderBound);
  ring.reps = basis.reps;
  ring.labels = basis.labels;
  const int n = static_cast<int>(basis.reps.size());
  ring.marks = IntMat(n, n);
  std::vector<GSet> sets;
  for (const auto& L : basis.reps) sets.push_back(transitive_gset(G, L));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // fixed points of L_j acting on G/L_i
      long long fixed = 0;
      for (int x = 0; x < sets[i].size; ++x) {
        bool fix = true;
        for (int l : basis.reps[j].elements)
          if (sets[i].act[l][x] != x) {
            fix = false;
            break;
          }
        if (fix) ++fixed;
      }
      ring.marks.at(i, j) = fixed;
    }
  ring.mul.assign(n, std::vector<std::vector<long long>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ring.mul[i][j] = decompose_gset(product_gset(sets[i], sets[j]), basis);
  return ring;
}

}  // namespace burnside
