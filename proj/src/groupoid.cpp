#include "burnside/groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "burnside/error.hpp"

namespace burnside {

namespace {
constexpr int kDenseLimit = 2048;
}

GroupoidPtr FiniteGroupoid::Builder::finish() const {
  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  g->nObj_ = nObj;
  g->nMor_ = static_cast<int>(morSrc.size());
  g->morSrc_ = morSrc;
  g->morDst_ = morDst;
  g->morInv_ = morInv;
  g->idMor_ = idMor;
  g->compDense_ = compDense;
  g->compFn_ = compFn;
  if (static_cast<int>(idMor.size()) != nObj)
    throw InputError("groupoid needs one identity per object");
  g->homTab_.assign(nObj, std::vector<std::vector<int>>(nObj));
  g->outMor_.assign(nObj, {});
  g->outPos_.assign(g->nMor_, -1);
  for (int m = 0; m < g->nMor_; ++m) {
    const int s = morSrc[m], d = morDst[m];
    if (s < 0 || s >= nObj || d < 0 || d >= nObj)
      throw InputError("morphism endpoint out of range");
    g->homTab_[s][d].push_back(m);
    g->outPos_[m] = static_cast<int>(g->outMor_[s].size());
    g->outMor_[s].push_back(m);
  }
  for (int a = 0; a < nObj; ++a) {
    const int e = idMor[a];
    if (e < 0 || e >= g->nMor_ || morSrc[e] != a || morDst[e] != a)
      throw InputError("identity morphism has wrong endpoints");
  }
  for (int m = 0; m < g->nMor_; ++m) {
    const int w = morInv[m];
    if (w < 0 || w >= g->nMor_ || morSrc[w] != morDst[m] || morDst[w] != morSrc[m])
      throw InputError("inverse morphism has wrong endpoints");
  }
  return g;
}

void FiniteGroupoid::validate() const {
  for (int m = 0; m < nMor_; ++m) {
    if (compose(m, idMor_[morSrc_[m]]) != m || compose(idMor_[morDst_[m]], m) != m)
      throw InputError("identity law fails");
    if (compose(morInv_[m], m) != idMor_[morSrc_[m]] ||
        compose(m, morInv_[m]) != idMor_[morDst_[m]])
      throw InputError("inverse law fails");
  }
  for (int g = 0; g < nMor_; ++g)
    for (int f : outMor_[morDst_[g]]) {
      const int fg = compose(f, g);
      if (morSrc_[fg] != morSrc_[g] || morDst_[fg] != morDst_[f])
        throw InputError("composition has wrong endpoints");
      for (int e : outMor_[morDst_[f]])
        if (compose(e, fg) != compose(compose(e, f), g))
          throw InputError("composition is not associative");
    }
}

bool FiniteGroupoid::same_tables(const FiniteGroupoid& other) const {
  if (nObj_ != other.nObj_ || nMor_ != other.nMor_ || morSrc_ != other.morSrc_ ||
      morDst_ != other.morDst_ || morInv_ != other.morInv_ ||
      idMor_ != other.idMor_)
    return false;
  for (int g = 0; g < nMor_; ++g)
    for (int f : outMor_[morDst_[g]])
      if (compose(f, g) != other.compose(f, g)) return false;
  return true;
}

void validate_functor(const GroupoidFunctor& F) {
  const auto& A = *F.source;
  const auto& B = *F.target;
  if (static_cast<int>(F.objMap.size()) != A.objects() ||
      static_cast<int>(F.morMap.size()) != A.morphisms())
    throw InputError("functor tables have wrong length");
  for (int m = 0; m < A.morphisms(); ++m) {
    const int fm = F.morMap[m];
    if (B.src(fm) != F.objMap[A.src(m)] || B.dst(fm) != F.objMap[A.dst(m)])
      throw InputError("functor breaks sources/targets");
  }
  for (int a = 0; a < A.objects(); ++a)
    if (F.morMap[A.id(a)] != B.id(F.objMap[a]))
      throw InputError("functor breaks identities");
  for (int g = 0; g < A.morphisms(); ++g)
    for (int f : A.out(A.dst(g)))
      if (F.morMap[A.compose(f, g)] != B.compose(F.morMap[f], F.morMap[g]))
        throw InputError("functor breaks composition");
}

GroupoidFunctor identity_functor(GroupoidPtr G) {
  GroupoidFunctor F;
  F.source = G;
  F.target = G;
  F.objMap.resize(G->objects());
  F.morMap.resize(G->morphisms());
  for (int i = 0; i < G->objects(); ++i) F.objMap[i] = i;
  for (int i = 0; i < G->morphisms(); ++i) F.morMap[i] = i;
  return F;
}

GroupoidFunctor compose_functors(const GroupoidFunctor& F, const GroupoidFunctor& G) {
  GroupoidFunctor H;
  H.source = G.source;
  H.target = F.target;
  H.objMap.resize(G.objMap.size());
  H.morMap.resize(G.morMap.size());
  for (size_t i = 0; i < G.objMap.size(); ++i) H.objMap[i] = F.objMap[G.objMap[i]];
  for (size_t i = 0; i < G.morMap.size(); ++i) H.morMap[i] = F.morMap[G.morMap[i]];
  return H;
}

void validate_natural_iso(const NaturalIso& n) {
  const auto& F = n.source;
  const auto& G = n.target;
  const auto& A = *F.source;
  const auto& B = *F.target;
  if (static_cast<int>(n.components.size()) != A.objects())
    throw InputError("natural iso needs one component per object");
  for (int a = 0; a < A.objects(); ++a) {
    const int c = n.components[a];
    if (B.src(c) != F.objMap[a] || B.dst(c) != G.objMap[a])
      throw InputError("component has wrong endpoints");
  }
  for (int m = 0; m < A.morphisms(); ++m) {
    const int x = A.src(m), y = A.dst(m);
    if (B.compose(n.components[y], F.morMap[m]) !=
        B.compose(G.morMap[m], n.components[x]))
      throw InputError("naturality square does not commute");
  }
}

GroupoidPtr classifying(const GroupPtr& G) {
  FiniteGroupoid::Builder b;
  b.nObj = 1;
  const int n = G->order();
  b.morSrc.assign(n, 0);
  b.morDst.assign(n, 0);
  b.morInv.resize(n);
  for (int i = 0; i < n; ++i) b.morInv[i] = G->inv(i);
  b.idMor = {G->identity()};
  b.compDense.resize(static_cast<size_t>(n) * n);
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) b.compDense[f * n + g] = G->mul(f, g);
  return b.finish();
}

GroupoidPtr indiscrete(int n) {
  FiniteGroupoid::Builder b;
  b.nObj = n;
  b.morSrc.resize(static_cast<size_t>(n) * n);
  b.morDst.resize(static_cast<size_t>(n) * n);
  b.morInv.resize(static_cast<size_t>(n) * n);
  b.idMor.resize(n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int m = s * n + t;
      b.morSrc[m] = s;
      b.morDst[m] = t;
      b.morInv[m] = t * n + s;
    }
  for (int a = 0; a < n; ++a) b.idMor[a] = a * n + a;
  if (n * n <= kDenseLimit) {
    b.compDense.assign(static_cast<size_t>(n) * n * n * n, -1);
    for (int f = 0; f < n * n; ++f)
      for (int g = 0; g < n * n; ++g)
        if (g % n == f / n)
          b.compDense[static_cast<size_t>(f) * n * n + g] = (g / n) * n + f % n;
  } else {
    b.compFn = [n](int f, int g) { return (g / n) * n + f % n; };
  }
  return b.finish();
}

GroupoidPtr empty_groupoid() {
  FiniteGroupoid::Builder b;
  b.nObj = 0;
  return b.finish();
}

GroupoidFunctor classifying_functor(const Homomorphism& f) {
  GroupoidFunctor F;
  F.source = classifying(f.source);
  F.target = classifying(f.target);
  F.objMap = {0};
  F.morMap = f.map;
  return F;
}

GroupoidFunctor eg_quotient(const GroupPtr& G) {
  const int n = G->order();
  GroupoidFunctor F;
  F.source = indiscrete(n);
  F.target = classifying(G);
  F.objMap.assign(n, 0);
  F.morMap.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) F.morMap[a * n + b] = G->mul(b, G->inv(a));
  return F;
}

Coproduct coproduct(const std::vector<GroupoidPtr>& parts) {
  Coproduct cp;
  FiniteGroupoid::Builder b;
  for (const auto& p : parts) {
    cp.objOffset.push_back(b.nObj);
    cp.morOffset.push_back(static_cast<int>(b.morSrc.size()));
    const int oOff = b.nObj, mOff = static_cast<int>(b.morSrc.size());
    b.nObj += p->objects();
    for (int m = 0; m < p->morphisms(); ++m) {
      b.morSrc.push_back(p->src(m) + oOff);
      b.morDst.push_back(p->dst(m) + oOff);
      b.morInv.push_back(p->inv(m) + mOff);
    }
    for (int a = 0; a < p->objects(); ++a) b.idMor.push_back(p->id(a) + mOff);
  }
  const int total = static_cast<int>(b.morSrc.size());
  auto morOffsets = cp.morOffset;
  auto partsCopy = parts;
  auto partOf = [morOffsets](int m) {
    int lo = 0, hi = static_cast<int>(morOffsets.size()) - 1;
    while (lo < hi) {
      const int mid = (lo + hi + 1) / 2;
      if (morOffsets[mid] <= m)
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  };
  if (total <= kDenseLimit) {
    b.compDense.assign(static_cast<size_t>(total) * total, -1);
    for (int g = 0; g < total; ++g) {
      const int pg = partOf(g);
      const int off = morOffsets[pg];
      for (int f = 0; f < total; ++f) {
        if (partOf(f) != pg) continue;
        if (parts[pg]->src(f - off) == parts[pg]->dst(g - off))
          b.compDense[static_cast<size_t>(f) * total + g] =
              parts[pg]->compose(f - off, g - off) + off;
      }
    }
  } else {
    b.compFn = [partOf, morOffsets, partsCopy](int f, int g) {
      const int p = partOf(f);
      const int off = morOffsets[p];
      return partsCopy[p]->compose(f - off, g - off) + off;
    };
  }
  auto totalG = b.finish();
  cp.total = totalG;
  for (size_t i = 0; i < parts.size(); ++i) {
    GroupoidFunctor inj;
    inj.source = parts[i];
    inj.target = totalG;
    inj.objMap.resize(parts[i]->objects());
    inj.morMap.resize(parts[i]->morphisms());
    for (int a = 0; a < parts[i]->objects(); ++a) inj.objMap[a] = a + cp.objOffset[i];
    for (int m = 0; m < parts[i]->morphisms(); ++m) inj.morMap[m] = m + cp.morOffset[i];
    cp.injections.push_back(std::move(inj));
  }
  return cp;
}

GroupoidFunctor cotuple(const Coproduct& cp, const std::vector<GroupoidFunctor>& legs) {
  if (legs.size() != cp.injections.size())
    throw InputError("cotuple needs one leg per summand");
  GroupoidFunctor F;
  F.source = cp.total;
  F.target = legs.empty() ? nullptr : legs[0].target;
  F.objMap.assign(cp.total->objects(), -1);
  F.morMap.assign(cp.total->morphisms(), -1);
  for (size_t i = 0; i < legs.size(); ++i) {
    if (legs[i].target.get() != F.target.get())
      throw InputError("cotuple legs must share a target");
    for (size_t a = 0; a < legs[i].objMap.size(); ++a)
      F.objMap[cp.objOffset[i] + a] = legs[i].objMap[a];
    for (size_t m = 0; m < legs[i].morMap.size(); ++m)
      F.morMap[cp.morOffset[i] + m] = legs[i].morMap[m];
  }
  return F;
}

bool is_faithful(const GroupoidFunctor& F) {
  const auto& A = *F.source;
  for (int a = 0; a < A.objects(); ++a)
    for (int b = 0; b < A.objects(); ++b) {
      const auto& h = A.hom(a, b);
      std::set<int> images;
      for (int m : h) images.insert(F.morMap[m]);
      if (images.size() != h.size()) return false;
    }
  return true;
}

bool is_full(const GroupoidFunctor& F) {
  const auto& A = *F.source;
  const auto& B = *F.target;
  for (int a = 0; a < A.objects(); ++a)
    for (int b = 0; b < A.objects(); ++b) {
      std::set<int> images;
      for (int m : A.hom(a, b)) images.insert(F.morMap[m]);
      if (images.size() != B.hom(F.objMap[a], F.objMap[b]).size()) return false;
    }
  return true;
}

bool is_essentially_surjective(const GroupoidFunctor& F) {
  const auto& A = *F.source;
  const auto& B = *F.target;
  for (int y = 0; y < B.objects(); ++y) {
    bool hit = false;
    for (int a = 0; a < A.objects() && !hit; ++a)
      hit = !B.hom(F.objMap[a], y).empty();
    if (!hit) return false;
  }
  return true;
}

bool is_isofibration(const GroupoidFunctor& F) {
  const auto& A = *F.source;
  const auto& B = *F.target;
  for (int a = 0; a < A.objects(); ++a)
    for (int h : B.out(F.objMap[a])) {
      bool lifted = false;
      for (int g : A.out(a))
        if (F.morMap[g] == h) {
          lifted = true;
          break;
        }
      if (!lifted) return false;
    }
  return true;
}

bool is_equivalence(const GroupoidFunctor& F) {
  return is_faithful(F) && is_full(F) && is_essentially_surjective(F);
}

StrictPullback strict_pullback(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  if (f.target.get() != g.target.get() && !f.target->same_tables(*g.target))
    throw EndpointMismatch("pullback legs land in different groupoids");
  const auto& A = *f.source;
  const auto& C = *g.source;
  FiniteGroupoid::Builder b;
  std::map<std::pair<int, int>, int> objIndex;
  std::vector<std::pair<int, int>> objs;
  for (int a = 0; a < A.objects(); ++a)
    for (int c = 0; c < C.objects(); ++c)
      if (f.objMap[a] == g.objMap[c]) {
        objIndex[{a, c}] = static_cast<int>(objs.size());
        objs.emplace_back(a, c);
      }
  b.nObj = static_cast<int>(objs.size());
  std::map<std::pair<int, int>, int> morIndex;
  std::vector<std::pair<int, int>> mors;
  for (int al = 0; al < A.morphisms(); ++al)
    for (int ga = 0; ga < C.morphisms(); ++ga)
      if (f.morMap[al] == g.morMap[ga]) {
        morIndex[{al, ga}] = static_cast<int>(mors.size());
        mors.emplace_back(al, ga);
        b.morSrc.push_back(objIndex.at({A.src(al), C.src(ga)}));
        b.morDst.push_back(objIndex.at({A.dst(al), C.dst(ga)}));
      }
  b.morInv.resize(mors.size());
  for (size_t m = 0; m < mors.size(); ++m)
    b.morInv[m] = morIndex.at({A.inv(mors[m].first), C.inv(mors[m].second)});
  for (auto& [a, c] : objs) b.idMor.push_back(morIndex.at({A.id(a), C.id(c)}));
  auto morsCopy = mors;
  auto aPtr = f.source;
  auto cPtr = g.source;
  b.compFn = [morIndex, morsCopy, aPtr, cPtr](int x, int y) {
    const auto& [a1, c1] = morsCopy[x];
    const auto& [a2, c2] = morsCopy[y];
    return morIndex.at({aPtr->compose(a1, a2), cPtr->compose(c1, c2)});
  };
  StrictPullback out;
  out.gWasIsofibration = is_isofibration(g);
  out.total = b.finish();
  out.toLeft.source = out.total;
  out.toLeft.target = f.source;
  out.toRight.source = out.total;
  out.toRight.target = g.source;
  for (auto& [a, c] : objs) {
    out.toLeft.objMap.push_back(a);
    out.toRight.objMap.push_back(c);
  }
  for (auto& [al, ga] : mors) {
    out.toLeft.morMap.push_back(al);
    out.toRight.morMap.push_back(ga);
  }
  return out;
}

IsoComma iso_comma(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  if (f.target.get() != g.target.get() && !f.target->same_tables(*g.target))
    throw EndpointMismatch("iso-comma legs land in different groupoids");
  const auto& A = *f.source;
  const auto& C = *g.source;
  const auto& D = *f.target;

  // position of each morphism of D inside its hom list
  std::vector<int> posInHom(D.morphisms());
  for (int a = 0; a < D.objects(); ++a)
    for (int b = 0; b < D.objects(); ++b) {
      const auto& h = D.hom(a, b);
      for (size_t i = 0; i < h.size(); ++i) posInHom[h[i]] = static_cast<int>(i);
    }

  IsoComma out;
  // objects: (a, c, δ) with δ in hom_D(f a, g c)
  std::vector<std::vector<int>> objBase(std::max(A.objects(), 1),
                                        std::vector<int>(std::max(C.objects(), 1), -1));
  int nObj = 0;
  for (int a = 0; a < A.objects(); ++a)
    for (int c = 0; c < C.objects(); ++c) {
      objBase[a][c] = nObj;
      nObj += static_cast<int>(D.hom(f.objMap[a], g.objMap[c]).size());
    }
  FiniteGroupoid::Builder b;
  b.nObj = nObj;
  out.objA.resize(nObj);
  out.objC.resize(nObj);
  out.objDelta.resize(nObj);
  for (int a = 0; a < A.objects(); ++a)
    for (int c = 0; c < C.objects(); ++c) {
      const auto& h = D.hom(f.objMap[a], g.objMap[c]);
      for (size_t i = 0; i < h.size(); ++i) {
        const int t = objBase[a][c] + static_cast<int>(i);
        out.objA[t] = a;
        out.objC[t] = c;
        out.objDelta[t] = h[i];
      }
    }
  auto objOf = [&](int a, int c, int delta) {
    return objBase[a][c] + posInHom[delta];
  };

  // morphisms out of t = (a, c, δ): one per (α out of a, γ out of c);
  // the target is (dst α, dst γ, g(γ)∘δ∘f(α)^-1)
  std::vector<long long> outBase(nObj + 1, 0);
  for (int t = 0; t < nObj; ++t)
    outBase[t + 1] = outBase[t] +
                     static_cast<long long>(A.out(out.objA[t]).size()) *
                         static_cast<long long>(C.out(out.objC[t]).size());
  const long long nMorL = outBase[nObj];
  if (nMorL > 40000000LL) throw OrderBoundExceeded("iso-comma groupoid too large");
  const int nMor = static_cast<int>(nMorL);
  b.morSrc.resize(nMor);
  b.morDst.resize(nMor);
  b.morInv.resize(nMor);
  out.toLeft.morMap.resize(nMor);
  out.toRight.morMap.resize(nMor);
  for (int t = 0; t < nObj; ++t) {
    const int a = out.objA[t], c = out.objC[t], delta = out.objDelta[t];
    const auto& outsA = A.out(a);
    const auto& outsC = C.out(c);
    for (size_t i = 0; i < outsA.size(); ++i)
      for (size_t j = 0; j < outsC.size(); ++j) {
        const int m = static_cast<int>(outBase[t] + i * outsC.size() + j);
        const int al = outsA[i], ga = outsC[j];
        const int deltaP =
            D.compose(D.compose(g.morMap[ga], delta), D.inv(f.morMap[al]));
        b.morSrc[m] = t;
        b.morDst[m] = objOf(A.dst(al), C.dst(ga), deltaP);
        out.toLeft.morMap[m] = al;
        out.toRight.morMap[m] = ga;
      }
  }
  auto morAt = [&](int t, int al, int ga) {
    const int c = out.objC[t];
    return static_cast<int>(outBase[t] +
                            static_cast<long long>(A.outPos(al)) *
                                C.out(c).size() +
                            C.outPos(ga));
  };
  for (int m = 0; m < nMor; ++m)
    b.morInv[m] = morAt(b.morDst[m], A.inv(out.toLeft.morMap[m]),
                        C.inv(out.toRight.morMap[m]));
  b.idMor.resize(nObj);
  for (int t = 0; t < nObj; ++t)
    b.idMor[t] = morAt(t, A.id(out.objA[t]), C.id(out.objC[t]));

  {
    auto aPtr = f.source;
    auto cPtr = g.source;
    auto srcs = b.morSrc;
    auto lmor = out.toLeft.morMap;
    auto rmor = out.toRight.morMap;
    auto obase = outBase;
    auto objCcopy = out.objC;
    b.compFn = [aPtr, cPtr, srcs, lmor, rmor, obase, objCcopy](int x, int y) {
      const int t = srcs[y];
      const int al = aPtr->compose(lmor[x], lmor[y]);
      const int ga = cPtr->compose(rmor[x], rmor[y]);
      return static_cast<int>(obase[t] +
                              static_cast<long long>(aPtr->outPos(al)) *
                                  cPtr->out(objCcopy[t]).size() +
                              cPtr->outPos(ga));
    };
  }
  out.total = b.finish();
  out.toLeft.source = out.total;
  out.toLeft.target = f.source;
  out.toRight.source = out.total;
  out.toRight.target = g.source;
  out.toLeft.objMap = out.objA;
  out.toRight.objMap = out.objC;
  out.filler.source = compose_functors(f, out.toLeft);
  out.filler.target = compose_functors(g, out.toRight);
  out.filler.components = out.objDelta;
  return out;
}

Skeleton skeleton(const GroupoidPtr& Gp) {
  const auto& G = *Gp;
  Skeleton sk;
  sk.componentOf.assign(G.objects(), -1);
  for (int a = 0; a < G.objects(); ++a) {
    if (sk.componentOf[a] >= 0) continue;
    const int comp = static_cast<int>(sk.repObj.size());
    sk.repObj.push_back(a);
    sk.componentOf[a] = comp;
    std::vector<int> frontier{a};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int m : G.out(x)) {
          const int y = G.dst(m);
          if (sk.componentOf[y] < 0) {
            sk.componentOf[y] = comp;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
  }
  // connecting isos rep -> x: least morphism id, the identity at the rep
  sk.connIso.assign(G.objects(), -1);
  for (int x = 0; x < G.objects(); ++x) {
    const int rep = sk.repObj[sk.componentOf[x]];
    if (x == rep) {
      sk.connIso[x] = G.id(x);
    } else {
      const auto& h = G.hom(rep, x);
      if (h.empty()) throw InternalCheckFailed("component without connecting iso");
      sk.connIso[x] = *std::min_element(h.begin(), h.end());
    }
  }
  const int nComp = static_cast<int>(sk.repObj.size());
  sk.autMor.resize(nComp);
  std::vector<std::map<int, int>> elemOf(nComp);
  FiniteGroupoid::Builder b;
  b.nObj = nComp;
  for (int i = 0; i < nComp; ++i) {
    auto aut = G.hom(sk.repObj[i], sk.repObj[i]);
    std::sort(aut.begin(), aut.end());
    sk.autMor[i] = aut;
    for (size_t k = 0; k < aut.size(); ++k) elemOf[i][aut[k]] = static_cast<int>(k);
    const int n = static_cast<int>(aut.size());
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        table[x * n + y] = elemOf[i].at(G.compose(aut[x], aut[y]));
    sk.autGroups.push_back(FiniteGroup::from_table(std::move(table)));
  }
  std::vector<int> morBase(nComp + 1, 0);
  for (int i = 0; i < nComp; ++i)
    morBase[i + 1] = morBase[i] + static_cast<int>(sk.autMor[i].size());
  const int nMor = morBase[nComp];
  b.morSrc.resize(nMor);
  b.morDst.resize(nMor);
  b.morInv.resize(nMor);
  b.idMor.resize(nComp);
  b.compDense.assign(static_cast<size_t>(nMor) * nMor, -1);
  for (int i = 0; i < nComp; ++i) {
    const auto& g = *sk.autGroups[i];
    for (int x = 0; x < g.order(); ++x) {
      const int m = morBase[i] + x;
      b.morSrc[m] = i;
      b.morDst[m] = i;
      b.morInv[m] = morBase[i] + g.inv(x);
      for (int y = 0; y < g.order(); ++y)
        b.compDense[static_cast<size_t>(m) * nMor + morBase[i] + y] =
            morBase[i] + g.mul(x, y);
    }
    b.idMor[i] = morBase[i] + g.identity();
  }
  sk.skel = b.finish();

  sk.incl.source = sk.skel;
  sk.incl.target = Gp;
  sk.incl.objMap = sk.repObj;
  sk.incl.morMap.resize(nMor);
  for (int i = 0; i < nComp; ++i)
    for (size_t x = 0; x < sk.autMor[i].size(); ++x)
      sk.incl.morMap[morBase[i] + x] = sk.autMor[i][x];

  sk.retr.source = Gp;
  sk.retr.target = sk.skel;
  sk.retr.objMap = sk.componentOf;
  sk.retr.morMap.resize(G.morphisms());
  for (int m = 0; m < G.morphisms(); ++m) {
    const int x = G.src(m), y = G.dst(m);
    const int comp = sk.componentOf[x];
    const int asAut = G.compose(G.inv(sk.connIso[y]), G.compose(m, sk.connIso[x]));
    sk.retr.morMap[m] = morBase[comp] + elemOf[comp].at(asAut);
  }

  sk.inclRetrToId.source = compose_functors(sk.incl, sk.retr);
  sk.inclRetrToId.target = identity_functor(Gp);
  sk.inclRetrToId.components = sk.connIso;
  return sk;
}

int Skeleton::groupElementOf(int component, int morId) const {
  const auto& v = autMor[component];
  const auto it = std::lower_bound(v.begin(), v.end(), morId);
  if (it == v.end() || *it != morId)
    throw InternalCheckFailed("morphism is not an automorphism at the rep");
  return static_cast<int>(it - v.begin());
}

}  // namespace burnside
