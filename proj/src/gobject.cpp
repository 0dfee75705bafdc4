#include "burnside/gobject.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "burnside/dsu.hpp"
#include "burnside/error.hpp"

namespace burnside {

namespace {

void check_not_poisoned(const GObject& X) {
  if (X.object == kPoisonObject)
    throw OverflowPoisoned("object exceeded the category bound");
  for (const auto& m : X.act)
    if (m.poisoned()) throw OverflowPoisoned("action morphism is poisoned");
}

bool is_preset(const PermutativeCategory& C) {
  return C.kind() != PermutativeCategory::Kind::Explicit;
}

// σ part of a preset morphism (images of block slots)
perm::Perm sigma_of(const PermutativeCategory& C, const CatMor& m) {
  const int n = m.src;
  if (C.kind() == PermutativeCategory::Kind::Finset)
    return m.data;
  return perm::Perm(m.data.begin(), m.data.begin() + n);
}

int label_of(const PermutativeCategory& C, const CatMor& m, int slot) {
  if (C.kind() == PermutativeCategory::Kind::Finset)
    return C.baseGroup()->identity();
  return m.data[m.src + slot];
}

}  // namespace

GObject make_gobject(GroupPtr group, PermCatPtr cat, int object,
                     std::vector<CatMor> act) {
  GObject X{std::move(group), std::move(cat), object, std::move(act)};
  check_not_poisoned(X);
  const auto& G = *X.group;
  const auto& C = *X.cat;
  if (static_cast<int>(X.act.size()) != G.order())
    throw InputError("action table needs one morphism per group element");
  for (const auto& m : X.act)
    if (m.src != object || m.dst != object)
      throw InputError("action morphisms must be automorphisms of the object");
  if (!(X.act[G.identity()] == C.idMor(object)))
    throw InputError("identity must act as the identity morphism");
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      if (!(X.act[G.mul(a, b)] == C.compose(X.act[a], X.act[b])))
        throw InputError("action is not a homomorphism");
  return X;
}

bool gobject_equal(const GObject& X, const GObject& Y) {
  return X.object == Y.object && X.act == Y.act;
}

GObject restrict_gobject(const Homomorphism& phi, const GObject& X) {
  if (phi.target.get() != X.group.get() && !phi.target->same_table(*X.group))
    throw InputError("restriction homomorphism must land in the acting group");
  std::vector<CatMor> act(phi.source->order());
  for (int h = 0; h < phi.source->order(); ++h) act[h] = X.act[phi.map[h]];
  return make_gobject(phi.source, X.cat, X.object, std::move(act));
}

GObject tensor_gobjects(const GObject& X, const GObject& Y) {
  if (X.group.get() != Y.group.get() && !X.group->same_table(*Y.group))
    throw InputError("tensor factors must share the acting group");
  const auto& C = *X.cat;
  const int obj = C.tensorObj(X.object, Y.object);
  std::vector<CatMor> act(X.group->order());
  for (int g = 0; g < X.group->order(); ++g)
    act[g] = C.tensorMor(X.act[g], Y.act[g]);
  if (obj == kPoisonObject)
    throw OverflowPoisoned("tensor exceeds the category bound");
  return make_gobject(X.group, X.cat, obj, std::move(act));
}

GObject tautological_gobject(const PermCatPtr& freeCat) {
  if (freeCat->kind() != PermutativeCategory::Kind::Free)
    throw InputError("the tautological object lives in a free preset");
  auto B = freeCat->baseGroup();
  std::vector<CatMor> act(B->order());
  for (int h = 0; h < B->order(); ++h) act[h] = CatMor{1, 1, {0, h}};
  return make_gobject(B, freeCat, 1, std::move(act));
}

GObject pushforward_free(const Homomorphism& phi, const GObject& X,
                         const PermCatPtr& targetCat) {
  const auto& C = *X.cat;
  if (is_preset(C) == false || !is_preset(*targetCat))
    throw InputError("pushforward is defined between structured presets");
  if (!phi.source->same_table(*C.baseGroup()) ||
      !phi.target->same_table(*targetCat->baseGroup()))
    throw InputError("pushforward homomorphism must match the base groups");
  const bool withLabels = targetCat->kind() == PermutativeCategory::Kind::Free;
  std::vector<CatMor> act(X.group->order());
  for (int g = 0; g < X.group->order(); ++g) {
    const auto sigma = sigma_of(C, X.act[g]);
    CatMor m{X.object, X.object,
             std::vector<int>(withLabels ? 2 * X.object : X.object)};
    for (int i = 0; i < X.object; ++i) {
      m.data[i] = sigma[i];
      if (withLabels) m.data[X.object + i] = phi.map[label_of(C, X.act[g], i)];
    }
    act[g] = std::move(m);
  }
  return make_gobject(X.group, targetCat, X.object, std::move(act));
}

CatMor wreath_action_on_tensor(const GObject& X, const perm::Perm& sigma,
                               const std::vector<CatMor>& labelActs) {
  const auto& C = *X.cat;
  const int r = static_cast<int>(sigma.size());
  // ⊗_i labelActs[i], left-folded
  CatMor pointwise = C.idMor(C.unitObject());
  for (int i = 0; i < r; ++i) pointwise = C.tensorMor(pointwise, labelActs[i]);
  // block permutation via adjacent symmetries in bubble-sort order
  auto arr = sigma;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < r; ++i)
      if (arr[i] > arr[i + 1]) {
        std::swap(arr[i], arr[i + 1]);
        swaps.push_back(i);
        changed = true;
      }
  }
  const int total = pointwise.dst;
  CatMor block = C.idMor(total);
  // entry swaps are right-composition with adjacent transpositions, so
  // σ∘t_{i1}∘…∘t_{ik} = id and σ applies t_{i1} first
  for (auto it = swaps.begin(); it != swaps.end(); ++it) {
    const int i = *it;
    CatMor adj = C.idMor(C.unitObject());
    for (int k = 0; k < i; ++k) adj = C.tensorMor(adj, C.idMor(X.object));
    adj = C.tensorMor(adj, C.symmetry(X.object, X.object));
    for (int k = i + 2; k < r; ++k) adj = C.tensorMor(adj, C.idMor(X.object));
    block = C.compose(adj, block);
  }
  return C.compose(block, pointwise);
}

GObject norm_gobject(const MaterializedSubgroup& H, const CosetSystem& cs,
                     const GObject& X) {
  if (!X.group->same_table(*H.grp))
    throw InputError("the normed object must live over the subgroup");
  const auto& C = *X.cat;
  auto G = H.parent;
  auto emb = transfer_embedding(G, cs.sub, cs);
  const int r = cs.count();
  int obj = C.unitObject();
  for (int i = 0; i < r; ++i) obj = C.tensorObj(obj, X.object);
  if (obj == kPoisonObject)
    throw OverflowPoisoned("norm tensor exceeds the category bound");
  std::vector<CatMor> act(G->order());
  for (int g = 0; g < G->order(); ++g) {
    const auto& w = emb.images[g];
    std::vector<CatMor> labelActs(r);
    for (int i = 0; i < r; ++i) labelActs[i] = X.act[H.toLocal[w.labels[i]]];
    act[g] = wreath_action_on_tensor(X, w.sigma, labelActs);
  }
  return make_gobject(G, X.cat, obj, std::move(act));
}

std::vector<std::pair<SubHomPair, int>> decompose_gobject(const GObject& X) {
  const auto& C = *X.cat;
  if (!is_preset(C))
    throw InputError("structural decomposition requires a structured preset");
  const auto& G = *X.group;
  const auto B = C.baseGroup();
  const int n = X.object;
  const int bo = B->order();
  // associated set {0..n-1} × B with g·(j,x) = (σ_g(j), h_g[j]·x) and the
  // free right translation action of the base
  Dsu dsu(n * bo);
  for (int g = 0; g < G.order(); ++g) {
    const auto sigma = sigma_of(C, X.act[g]);
    for (int j = 0; j < n; ++j) {
      const int lbl = label_of(C, X.act[g], j);
      for (int x = 0; x < bo; ++x)
        dsu.unite(sigma[j] * bo + B->mul(lbl, x), j * bo + x);
    }
  }
  for (int j = 0; j < n; ++j)
    for (int x = 0; x < bo; ++x)
      for (int b = 0; b < bo; ++b) dsu.unite(j * bo + x, j * bo + B->mul(x, b));
  std::map<SubHomPair, int> mult;
  std::set<int> seen;
  for (int j = 0; j < n; ++j) {
    const int root = dsu.find(j * bo + B->identity());
    if (!seen.insert(root).second) continue;
    SubHomPair p;
    for (int g = 0; g < G.order(); ++g) {
      const auto sigma = sigma_of(C, X.act[g]);
      if (sigma[j] != j) continue;
      p.L.push_back(g);
      p.phi.push_back(label_of(C, X.act[g], j));
    }
    ++mult[canonical_pair(*B, G, p)];
  }
  std::vector<std::pair<SubHomPair, int>> out(mult.begin(), mult.end());
  return out;
}

bool gobject_iso(const GObject& X, const GObject& Y) {
  if (X.cat.get() != Y.cat.get()) return false;
  if (!X.group->same_table(*Y.group)) return false;
  const auto& C = *X.cat;
  if (is_preset(C)) return decompose_gobject(X) == decompose_gobject(Y);
  // explicit categories: exhaustive search for an equivariant isomorphism
  const long long count = C.homCount(X.object, Y.object);
  if (count < 0) throw OrderBoundExceeded("hom set too large for iso search");
  const auto& gens = X.group->generators();
  for (long long i = 0; i < count; ++i) {
    const auto u = C.homAt(X.object, Y.object, i);
    bool ok = true;
    for (int g : gens)
      if (!(C.compose(u, X.act[g]) == C.compose(Y.act[g], u))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

GObject gobject_of_pair(const GroupPtr& G, const PermCatPtr& freeCat,
                        const SubHomPair& pair) {
  const auto B = freeCat->baseGroup();
  auto L = make_subgroup(G, pair.L);
  auto cs = coset_system(G, L);
  auto emb = transfer_embedding(G, L, cs);
  std::vector<int> psiOf(G->order(), -1);
  for (size_t k = 0; k < pair.L.size(); ++k) psiOf[pair.L[k]] = pair.phi[k];
  const int r = cs.count();
  if (r >= freeCat->numObjects())
    throw OrderBoundExceeded("class needs more blocks than the preset holds");
  const bool withLabels = freeCat->kind() == PermutativeCategory::Kind::Free;
  std::vector<CatMor> act(G->order());
  for (int g = 0; g < G->order(); ++g) {
    const auto& w = emb.images[g];
    CatMor m{r, r, std::vector<int>(withLabels ? 2 * r : r)};
    for (int i = 0; i < r; ++i) {
      m.data[i] = w.sigma[i];
      if (withLabels) m.data[r + i] = psiOf[w.labels[i]];
    }
    act[g] = std::move(m);
  }
  return make_gobject(G, freeCat, r, std::move(act));
}

int IsoClassMonoid::index_of_key(const SubHomPair& k) const {
  const auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || !(*it == k)) return -1;
  return static_cast<int>(it - keys.begin());
}

namespace {

std::string pair_label(const SubHomPair& p) {
  std::string s = "L[";
  for (size_t i = 0; i < p.L.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p.L[i]);
  }
  s += "]:psi[";
  for (size_t i = 0; i < p.phi.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p.phi[i]);
  }
  s += ']';
  return s;
}

// all iso classes of an explicit category (decomposables included), used to
// factor exhaustively
struct ExplicitClasses {
  std::vector<GObject> reps;
  int find(const PermutativeCategory& C, const GObject& X) {
    for (size_t i = 0; i < reps.size(); ++i)
      if (gobject_iso(reps[i], X)) return static_cast<int>(i);
    (void)C;
    return -1;
  }
};

ExplicitClasses enumerate_explicit_classes(const GroupPtr& G, const PermCatPtr& C) {
  ExplicitClasses out;
  for (int obj = 0; obj < C->numObjects(); ++obj) {
    auto aut = materialize_aut(*C, obj);
    for (const auto& f : all_homs(G, aut.grp)) {
      std::vector<CatMor> act(G->order());
      for (int g = 0; g < G->order(); ++g) act[g] = aut.mors[f.map[g]];
      auto X = make_gobject(G, C, obj, std::move(act));
      if (out.find(*C, X) < 0) out.reps.push_back(std::move(X));
    }
  }
  return out;
}

}  // namespace

IsoClassMonoid iso_classes(const GroupPtr& G, const PermCatPtr& C, long long bound) {
  IsoClassMonoid out;
  out.group = G;
  out.cat = C;
  out.bound = bound;
  if (is_preset(*C)) {
    const auto B = C->baseGroup();
    const long long maxBlocks = C->numObjects() - 1;
    std::map<SubHomPair, bool> seen;
    for (const auto& L : subgroups(G).classReps) {
      const long long blocks = G->order() / L.order();
      if (blocks > maxBlocks || (bound >= 0 && blocks > bound)) continue;
      auto M = materialize(L);
      for (const auto& f : all_homs(M.grp, B)) {
        SubHomPair raw;
        raw.L = L.elements;
        raw.phi.resize(raw.L.size());
        for (size_t k = 0; k < raw.L.size(); ++k)
          raw.phi[k] = f.map[M.toLocal[raw.L[k]]];
        seen[canonical_pair(*B, *G, raw)] = true;
      }
    }
    for (const auto& [key, _] : seen) {
      out.keys.push_back(key);
      out.labels.push_back(pair_label(key));
      out.basis.push_back(gobject_of_pair(G, C, key));
    }
    // each basis object must decompose to exactly its own class
    for (size_t i = 0; i < out.basis.size(); ++i) {
      auto d = decompose_gobject(out.basis[i]);
      if (d.size() != 1 || !(d[0].first == out.keys[i]) || d[0].second != 1)
        throw InternalCheckFailed("basis object is not transitive");
    }
    // unique decomposition below the bound: pairwise products split back
    for (size_t i = 0; i < out.basis.size(); ++i)
      for (size_t j = i; j < out.basis.size(); ++j) {
        const long long total = C->objectSize(out.basis[i].object) +
                                C->objectSize(out.basis[j].object);
        if (bound >= 0 && total > bound) continue;
        if (total > maxBlocks) continue;
        auto prod = tensor_gobjects(out.basis[i], out.basis[j]);
        std::map<SubHomPair, int> expect;
        ++expect[out.keys[i]];
        ++expect[out.keys[j]];
        std::map<SubHomPair, int> got;
        for (const auto& [k, m] : decompose_gobject(prod)) got[k] += m;
        if (got != expect)
          throw DecompositionNotUnique("pairwise product fails to split");
      }
    return out;
  }
  // explicit categories: enumerate everything and pick the indecomposables
  auto all = enumerate_explicit_classes(G, C);
  const int unit = C->unitObject();
  std::vector<int> indec;
  for (size_t i = 0; i < all.reps.size(); ++i) {
    if (all.reps[i].object == unit && all.reps.size() > 1) continue;
    bool splits = false;
    for (size_t a = 0; a < all.reps.size() && !splits; ++a)
      for (size_t b = 0; b < all.reps.size() && !splits; ++b) {
        if (all.reps[a].object == unit || all.reps[b].object == unit) continue;
        if (C->tensorObj(all.reps[a].object, all.reps[b].object) !=
            all.reps[i].object)
          continue;
        splits = gobject_iso(tensor_gobjects(all.reps[a], all.reps[b]), all.reps[i]);
      }
    if (!splits) indec.push_back(static_cast<int>(i));
  }
  for (size_t k = 0; k < indec.size(); ++k) {
    out.basis.push_back(all.reps[indec[k]]);
    out.labels.push_back("class" + std::to_string(k) + ":obj" +
                         std::to_string(all.reps[indec[k]].object));
  }
  return out;
}

namespace {

// exhaustive factorization over an explicit category's basis
bool factor_explicit(const IsoClassMonoid& monoid, const GObject& X,
                     std::vector<long long>& coeffs) {
  const auto& C = *monoid.cat;
  if (X.object == C.unitObject()) return true;
  for (size_t i = 0; i < monoid.basis.size(); ++i) {
    const auto& b = monoid.basis[i];
    if (b.object == C.unitObject()) {
      if (gobject_iso(X, b)) {
        ++coeffs[i];
        return true;
      }
      continue;
    }
    // try to split off b: search for a complement among all objects
    for (int rest = 0; rest < C.numObjects(); ++rest) {
      if (C.tensorObj(b.object, rest) != X.object) continue;
      auto autRest = materialize_aut(C, rest);
      for (const auto& f : all_homs(X.group, autRest.grp)) {
        std::vector<CatMor> act(X.group->order());
        for (int g = 0; g < X.group->order(); ++g) act[g] = autRest.mors[f.map[g]];
        auto Y = make_gobject(X.group, monoid.cat, rest, std::move(act));
        if (!gobject_iso(tensor_gobjects(b, Y), X)) continue;
        ++coeffs[i];
        return factor_explicit(monoid, Y, coeffs);
      }
    }
  }
  return false;
}

}  // namespace

std::vector<long long> decompose_in_basis(const IsoClassMonoid& monoid,
                                          const GObject& X) {
  std::vector<long long> coeffs(monoid.basis.size(), 0);
  if (is_preset(*monoid.cat)) {
    for (const auto& [key, m] : decompose_gobject(X)) {
      const int idx = monoid.index_of_key(key);
      if (idx < 0)
        throw OrderBoundExceeded("decomposition leaves the enumerated basis");
      coeffs[idx] += m;
    }
    return coeffs;
  }
  if (!factor_explicit(monoid, X, coeffs))
    throw DecompositionNotUnique("object does not factor over the basis");
  return coeffs;
}

}  // namespace burnside
