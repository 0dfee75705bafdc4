#include "burnside/biset.hpp"

#include <algorithm>
#include <map>

#include "burnside/dsu.hpp"
#include "burnside/error.hpp"

namespace burnside {

namespace {

bool is_bijection(const std::vector<int>& f, int n) {
  std::vector<char> seen(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return static_cast<int>(f.size()) == n;
}

void validate_action(const FiniteGroup& G, const std::vector<std::vector<int>>& act,
                     int size) {
  if (static_cast<int>(act.size()) != G.order())
    throw InputError("action table has one row per group element");
  for (const auto& row : act)
    if (!is_bijection(row, size)) throw InputError("action row is not a bijection");
  for (int x = 0; x < size; ++x)
    if (act[G.identity()][x] != x) throw InputError("identity must act trivially");
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      for (int x = 0; x < size; ++x)
        if (act[G.mul(a, b)][x] != act[a][act[b][x]])
          throw InputError("action is not functorial");
}

}  // namespace

void validate_biset(const Biset& X) {
  if (X.cells.size() != X.left.size())
    throw InputError("cell grid has wrong row count");
  for (size_t i = 0; i < X.left.size(); ++i) {
    if (X.cells[i].size() != X.right.size())
      throw InputError("cell grid has wrong column count");
    for (size_t j = 0; j < X.right.size(); ++j) {
      const auto& c = X.cells[i][j];
      const auto& G = *X.left[i];
      const auto& H = *X.right[j];
      validate_action(G, c.actL, c.size);
      validate_action(H, c.actR, c.size);
      for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < H.order(); ++h)
          for (int x = 0; x < c.size; ++x)
            if (c.actL[g][c.actR[h][x]] != c.actR[h][c.actL[g][x]])
              throw InputError("left and right actions do not commute");
      for (int g = 0; g < G.order(); ++g) {
        if (g == G.identity()) continue;
        for (int x = 0; x < c.size; ++x)
          if (c.actL[g][x] == x)
            throw FreenessViolated("left action has a fixed point");
      }
    }
  }
}

bool same_groups(const std::vector<GroupPtr>& a, const std::vector<GroupPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].get() != b[i].get() && !a[i]->same_table(*b[i])) return false;
  return true;
}

bool operator==(const BisetClass& a, const BisetClass& b) {
  return same_groups(a.left, b.left) && same_groups(a.right, b.right) &&
         a.classes == b.classes;
}

BisetClass decompose(const Biset& X) {
  BisetClass out;
  out.left = X.left;
  out.right = X.right;
  std::map<TransitiveClass, int> mult;
  for (size_t i = 0; i < X.left.size(); ++i)
    for (size_t j = 0; j < X.right.size(); ++j) {
      const auto& c = X.cells[i][j];
      const auto& G = *X.left[i];
      const auto& H = *X.right[j];
      Dsu dsu(c.size);
      for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < c.size; ++x) dsu.unite(x, c.actL[g][x]);
      for (int h = 0; h < H.order(); ++h)
        for (int x = 0; x < c.size; ++x) dsu.unite(x, c.actR[h][x]);
      std::map<int, int> orbitSize;
      for (int x = 0; x < c.size; ++x) ++orbitSize[dsu.find(x)];
      for (const auto& [base, size] : orbitSize) {
        // stabilizer of the base point; freeness forces a graph subgroup
        SubHomPair p;
        for (int h = 0; h < H.order(); ++h) {
          int found = -1;
          for (int g = 0; g < G.order(); ++g)
            if (c.actL[g][c.actR[h][base]] == base) {
              if (found >= 0)
                throw FreenessViolated("stabilizer is not a graph subgroup");
              found = g;
            }
          if (found >= 0) {
            p.L.push_back(h);
            p.phi.push_back(found);
          }
        }
        if (size * static_cast<int>(p.L.size()) != G.order() * H.order())
          throw InternalCheckFailed("orbit size violates the stabilizer count");
        TransitiveClass tc;
        tc.leftComp = static_cast<int>(i);
        tc.rightComp = static_cast<int>(j);
        tc.pair = canonical_pair(G, H, p);
        ++mult[tc];
      }
    }
  for (const auto& [tc, m] : mult) out.classes.emplace_back(tc, m);
  return out;
}

bool biset_iso(const Biset& X, const Biset& Y) {
  return decompose(X) == decompose(Y);
}

Biset biset_of_classes(const BisetClass& data) {
  Biset X;
  X.left = data.left;
  X.right = data.right;
  X.cells.assign(X.left.size(), std::vector<BisetCell>(X.right.size()));
  for (size_t i = 0; i < X.left.size(); ++i)
    for (size_t j = 0; j < X.right.size(); ++j)
      X.cells[i][j].actL.assign(X.left[i]->order(), {}),
          X.cells[i][j].actR.assign(X.right[j]->order(), {});
  for (const auto& [tc, m] : data.classes) {
    const auto& G = *X.left[tc.leftComp];
    const auto& H = *X.right[tc.rightComp];
    auto& cell = X.cells[tc.leftComp][tc.rightComp];
    // cosets of Γ_{L,φ} in G×H, pairs encoded as g·|H| + h
    const int n = G.order() * H.order();
    std::vector<int> cosetOf(n, -1);
    std::vector<int> reps;
    for (int p = 0; p < n; ++p) {
      if (cosetOf[p] >= 0) continue;
      const int rep = static_cast<int>(reps.size());
      reps.push_back(p);
      const int g = p / H.order(), h = p % H.order();
      for (size_t k = 0; k < tc.pair.L.size(); ++k) {
        const int q =
            G.mul(g, tc.pair.phi[k]) * H.order() + H.mul(h, tc.pair.L[k]);
        cosetOf[q] = rep;
      }
      if (cosetOf[p] != rep)
        throw InternalCheckFailed("coset enumeration disagrees with itself");
    }
    const int orbit = static_cast<int>(reps.size());
    for (int copy = 0; copy < m; ++copy) {
      const int base = cell.size;
      cell.size += orbit;
      for (int g = 0; g < G.order(); ++g) {
        auto& row = cell.actL[g];
        row.resize(cell.size);
        for (int x = 0; x < orbit; ++x) {
          const int p = reps[x];
          row[base + x] =
              base + cosetOf[G.mul(g, p / H.order()) * H.order() + p % H.order()];
        }
      }
      for (int h = 0; h < H.order(); ++h) {
        auto& row = cell.actR[h];
        row.resize(cell.size);
        for (int x = 0; x < orbit; ++x) {
          const int p = reps[x];
          row[base + x] =
              base + cosetOf[(p / H.order()) * H.order() + H.mul(h, p % H.order())];
        }
      }
    }
  }
  validate_biset(X);
  return X;
}

Biset unit_biset(const std::vector<GroupPtr>& comps) {
  BisetClass data;
  data.left = comps;
  data.right = comps;
  for (size_t i = 0; i < comps.size(); ++i) {
    TransitiveClass tc;
    tc.leftComp = tc.rightComp = static_cast<int>(i);
    SubHomPair p;
    for (int x = 0; x < comps[i]->order(); ++x) {
      p.L.push_back(x);
      p.phi.push_back(x);
    }
    tc.pair = canonical_pair(*comps[i], *comps[i], p);
    data.classes.emplace_back(tc, 1);
  }
  std::sort(data.classes.begin(), data.classes.end());
  return biset_of_classes(data);
}

Biset tensor(const Biset& X, const Biset& Y) {
  if (!same_groups(X.right, Y.left))
    throw MiddleMismatch("middle groupoids of the tensor factors differ");
  Biset Z;
  Z.left = X.left;
  Z.right = Y.right;
  Z.cells.assign(Z.left.size(), std::vector<BisetCell>(Z.right.size()));
  for (size_t i = 0; i < Z.left.size(); ++i)
    for (size_t k = 0; k < Z.right.size(); ++k) {
      const auto& G = *Z.left[i];
      const auto& K = *Z.right[k];
      // disjoint union of products over the middle components
      std::vector<std::pair<int, std::pair<int, int>>> nodes;  // (j, (x, y))
      std::vector<int> base;
      for (size_t j = 0; j < X.right.size(); ++j) {
        base.push_back(static_cast<int>(nodes.size()));
        for (int x = 0; x < X.cells[i][j].size; ++x)
          for (int y = 0; y < Y.cells[j][k].size; ++y)
            nodes.push_back({static_cast<int>(j), {x, y}});
      }
      auto nodeId = [&](int j, int x, int y) {
        return base[j] + x * Y.cells[j][k].size + y;
      };
      Dsu dsu(static_cast<int>(nodes.size()));
      for (size_t j = 0; j < X.right.size(); ++j) {
        const auto& H = *X.right[j];
        const auto& cx = X.cells[i][j];
        const auto& cy = Y.cells[j][k];
        // cells carry left actions on both sides, so the balanced product
        // quotients by the diagonal: (h·x, h·y) ~ (x, y)
        for (int h = 0; h < H.order(); ++h)
          for (int x = 0; x < cx.size; ++x)
            for (int y = 0; y < cy.size; ++y)
              dsu.unite(nodeId(static_cast<int>(j), cx.actR[h][x], cy.actL[h][y]),
                        nodeId(static_cast<int>(j), x, y));
      }
      std::map<int, int> index;
      for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
        const int r = dsu.find(v);
        if (!index.count(r)) {
          const int id = static_cast<int>(index.size());
          index[r] = id;
        }
      }
      auto& cell = Z.cells[i][k];
      cell.size = static_cast<int>(index.size());
      cell.actL.assign(G.order(), std::vector<int>(cell.size, -1));
      cell.actR.assign(K.order(), std::vector<int>(cell.size, -1));
      for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
        const int cls = index.at(dsu.find(v));
        const auto [j, xy] = nodes[v];
        const auto [x, y] = xy;
        for (int g = 0; g < G.order(); ++g) {
          const int img = index.at(dsu.find(nodeId(j, X.cells[i][j].actL[g][x], y)));
          if (cell.actL[g][cls] >= 0 && cell.actL[g][cls] != img)
            throw InternalCheckFailed("middle quotient action is not well-defined");
          cell.actL[g][cls] = img;
        }
        for (int kk = 0; kk < K.order(); ++kk) {
          const int img = index.at(dsu.find(nodeId(j, x, Y.cells[j][k].actR[kk][y])));
          if (cell.actR[kk][cls] >= 0 && cell.actR[kk][cls] != img)
            throw InternalCheckFailed("middle quotient action is not well-defined");
          cell.actR[kk][cls] = img;
        }
      }
    }
  validate_biset(Z);  // freeness of the composite is part of the contract
  return Z;
}

GrothendieckTotal grothendieck(const Biset& X) {
  validate_biset(X);
  GrothendieckTotal out;
  std::vector<GroupoidPtr> lParts, rParts;
  for (const auto& g : X.left) lParts.push_back(classifying(g));
  for (const auto& g : X.right) rParts.push_back(classifying(g));
  auto lCp = coproduct(lParts);
  auto rCp = coproduct(rParts);
  out.leftGroupoid = lCp.total;
  out.rightGroupoid = rCp.total;

  struct CellRef {
    int i, j, base;
  };
  std::vector<CellRef> cellRefs;
  int nObj = 0;
  for (size_t i = 0; i < X.left.size(); ++i)
    for (size_t j = 0; j < X.right.size(); ++j) {
      cellRefs.push_back({static_cast<int>(i), static_cast<int>(j), nObj});
      nObj += X.cells[i][j].size;
    }
  std::vector<int> objCell(nObj), objElem(nObj);
  for (size_t c = 0; c < cellRefs.size(); ++c) {
    const auto& cr = cellRefs[c];
    for (int x = 0; x < X.cells[cr.i][cr.j].size; ++x) {
      objCell[cr.base + x] = static_cast<int>(c);
      objElem[cr.base + x] = x;
    }
  }
  FiniteGroupoid::Builder b;
  b.nObj = nObj;
  std::vector<long long> outBase(nObj + 1, 0);
  for (int t = 0; t < nObj; ++t) {
    const auto& cr = cellRefs[objCell[t]];
    outBase[t + 1] = outBase[t] + static_cast<long long>(X.left[cr.i]->order()) *
                                      X.right[cr.j]->order();
  }
  if (outBase[nObj] > 20000000LL)
    throw OrderBoundExceeded("total groupoid too large");
  const int nMor = static_cast<int>(outBase[nObj]);
  b.morSrc.resize(nMor);
  b.morDst.resize(nMor);
  b.morInv.resize(nMor);
  out.projL.morMap.resize(nMor);
  out.projR.morMap.resize(nMor);
  auto morAt = [&](int t, int g, int h) {
    const auto& cr = cellRefs[objCell[t]];
    return static_cast<int>(outBase[t] + static_cast<long long>(g) *
                                             X.right[cr.j]->order() +
                            h);
  };
  for (int t = 0; t < nObj; ++t) {
    const auto& cr = cellRefs[objCell[t]];
    const auto& cell = X.cells[cr.i][cr.j];
    const auto& G = *X.left[cr.i];
    const auto& H = *X.right[cr.j];
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < H.order(); ++h) {
        const int m = morAt(t, g, h);
        b.morSrc[m] = t;
        b.morDst[m] = cr.base + cell.actL[g][cell.actR[h][objElem[t]]];
        out.projL.morMap[m] = lCp.morOffset[cr.i] + g;
        out.projR.morMap[m] = rCp.morOffset[cr.j] + h;
      }
  }
  for (int m = 0; m < nMor; ++m) {
    const int t = b.morSrc[m];
    const auto& cr = cellRefs[objCell[t]];
    const int g = static_cast<int>((m - outBase[t]) / X.right[cr.j]->order());
    const int h = static_cast<int>((m - outBase[t]) % X.right[cr.j]->order());
    b.morInv[m] = morAt(b.morDst[m], X.left[cr.i]->inv(g), X.right[cr.j]->inv(h));
  }
  b.idMor.resize(nObj);
  for (int t = 0; t < nObj; ++t) {
    const auto& cr = cellRefs[objCell[t]];
    b.idMor[t] = morAt(t, X.left[cr.i]->identity(), X.right[cr.j]->identity());
  }
  {
    auto srcs = b.morSrc;
    auto obase = outBase;
    auto cells = cellRefs;
    auto objC = objCell;
    auto lG = X.left;
    auto rG = X.right;
    b.compFn = [srcs, obase, cells, objC, lG, rG](int m1, int m2) {
      const int t1 = srcs[m1], t2 = srcs[m2];
      const auto& cr = cells[objC[t2]];
      const int ho = rG[cr.j]->order();
      const int g1 = static_cast<int>((m1 - obase[t1]) / ho);
      const int h1 = static_cast<int>((m1 - obase[t1]) % ho);
      const int g2 = static_cast<int>((m2 - obase[t2]) / ho);
      const int h2 = static_cast<int>((m2 - obase[t2]) % ho);
      return static_cast<int>(obase[t2] +
                              static_cast<long long>(lG[cr.i]->mul(g1, g2)) * ho +
                              rG[cr.j]->mul(h1, h2));
    };
  }
  out.total = b.finish();
  out.projL.source = out.total;
  out.projL.target = out.leftGroupoid;
  out.projR.source = out.total;
  out.projR.target = out.rightGroupoid;
  out.projL.objMap.resize(nObj);
  out.projR.objMap.resize(nObj);
  for (int t = 0; t < nObj; ++t) {
    const auto& cr = cellRefs[objCell[t]];
    out.projL.objMap[t] = lCp.objOffset[cr.i];
    out.projR.objMap[t] = rCp.objOffset[cr.j];
  }
  if (!is_faithful(out.projR))
    throw InternalCheckFailed("total projection lost faithfulness");
  return out;
}

Biset straighten(const GroupoidFunctor& projG, const GroupoidFunctor& projH) {
  if (projG.source.get() != projH.source.get() &&
      !projG.source->same_tables(*projH.source))
    throw InputError("straighten needs two projections of one apex");
  if (!is_faithful(projH))
    throw NotRightFaithful("projection to the right side is not faithful");
  const auto& Xg = *projG.source;
  const auto& Gg = *projG.target;
  const auto& Hg = *projH.target;
  auto skG = skeleton(projG.target);
  auto skH = skeleton(projH.target);

  std::vector<int> posG(Gg.morphisms()), posH(Hg.morphisms());
  for (int a = 0; a < Gg.objects(); ++a)
    for (int bb = 0; bb < Gg.objects(); ++bb) {
      const auto& h = Gg.hom(a, bb);
      for (size_t x = 0; x < h.size(); ++x) posG[h[x]] = static_cast<int>(x);
    }
  for (int a = 0; a < Hg.objects(); ++a)
    for (int bb = 0; bb < Hg.objects(); ++bb) {
      const auto& h = Hg.hom(a, bb);
      for (size_t x = 0; x < h.size(); ++x) posH[h[x]] = static_cast<int>(x);
    }

  // nodes: (x, a: projG x -> repG, b: projH x -> repH)
  std::vector<long long> base(Xg.objects() + 1, 0);
  std::vector<int> cntA(Xg.objects()), cntB(Xg.objects());
  for (int x = 0; x < Xg.objects(); ++x) {
    const int u = projG.objMap[x], v = projH.objMap[x];
    cntA[x] = static_cast<int>(Gg.hom(u, skG.repObj[skG.componentOf[u]]).size());
    cntB[x] = static_cast<int>(Hg.hom(v, skH.repObj[skH.componentOf[v]]).size());
    base[x + 1] = base[x] + static_cast<long long>(cntA[x]) * cntB[x];
  }
  if (base[Xg.objects()] > 20000000LL)
    throw OrderBoundExceeded("straightening fiber too large");
  const int nNodes = static_cast<int>(base[Xg.objects()]);
  auto nodeId = [&](int x, int am, int bm) {
    return static_cast<int>(base[x] +
                            static_cast<long long>(posG[am]) * cntB[x] + posH[bm]);
  };
  Dsu dsu(nNodes);
  for (int m = 0; m < Xg.morphisms(); ++m) {
    const int x = Xg.src(m), y = Xg.dst(m);
    const int uY = projG.objMap[y], vY = projH.objMap[y];
    const auto& homsA = Gg.hom(uY, skG.repObj[skG.componentOf[uY]]);
    const auto& homsB = Hg.hom(vY, skH.repObj[skH.componentOf[vY]]);
    for (int am : homsA)
      for (int bm : homsB)
        dsu.unite(nodeId(y, am, bm),
                  nodeId(x, Gg.compose(am, projG.morMap[m]),
                         Hg.compose(bm, projH.morMap[m])));
  }

  Biset out;
  out.left = skG.autGroups;
  out.right = skH.autGroups;
  out.cells.assign(out.left.size(), std::vector<BisetCell>(out.right.size()));
  // classes grouped per (component of G, component of H)
  std::map<int, std::pair<std::pair<int, int>, int>> classInfo;  // root -> ((i,j), idx)
  for (int x = 0; x < Xg.objects(); ++x) {
    const int i = skG.componentOf[projG.objMap[x]];
    const int j = skH.componentOf[projH.objMap[x]];
    const int u = projG.objMap[x], v = projH.objMap[x];
    for (int am : Gg.hom(u, skG.repObj[i]))
      for (int bm : Hg.hom(v, skH.repObj[j])) {
        const int r = dsu.find(nodeId(x, am, bm));
        if (!classInfo.count(r)) {
          auto& cell = out.cells[i][j];
          classInfo[r] = {{i, j}, cell.size++};
        }
      }
  }
  for (size_t i = 0; i < out.left.size(); ++i)
    for (size_t j = 0; j < out.right.size(); ++j) {
      auto& cell = out.cells[i][j];
      cell.actL.assign(out.left[i]->order(), std::vector<int>(cell.size, -1));
      cell.actR.assign(out.right[j]->order(), std::vector<int>(cell.size, -1));
    }
  // transport actions: g·[x,a,b] = [x, g∘a, b] and h·[x,a,b] = [x, a, h∘b]
  for (int x = 0; x < Xg.objects(); ++x) {
    const int i = skG.componentOf[projG.objMap[x]];
    const int j = skH.componentOf[projH.objMap[x]];
    const int u = projG.objMap[x], v = projH.objMap[x];
    auto& cell = out.cells[i][j];
    for (int am : Gg.hom(u, skG.repObj[i]))
      for (int bm : Hg.hom(v, skH.repObj[j])) {
        const int cls = classInfo.at(dsu.find(nodeId(x, am, bm))).second;
        for (int g = 0; g < out.left[i]->order(); ++g) {
          const int gm = skG.autMor[i][g];
          cell.actL[g][cls] =
              classInfo.at(dsu.find(nodeId(x, Gg.compose(gm, am), bm))).second;
        }
        for (int h = 0; h < out.right[j]->order(); ++h) {
          const int hm = skH.autMor[j][h];
          cell.actR[h][cls] =
              classInfo.at(dsu.find(nodeId(x, am, Hg.compose(hm, bm)))).second;
        }
      }
  }
  validate_biset(out);
  return out;
}

}  // namespace burnside
