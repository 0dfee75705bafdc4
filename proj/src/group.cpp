#include "burnside/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "burnside/error.hpp"

namespace burnside {

namespace {

int find_identity(const std::vector<int>& table, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table[e * n + a] == a && table[a * n + e] == a;
    if (ok) return e;
  }
  return -1;
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::vector<int> table, std::string name) {
  const auto sz = table.size();
  int n = 0;
  while (static_cast<size_t>(n) * n < sz) ++n;
  if (static_cast<size_t>(n) * n != sz || n == 0)
    throw InputError("multiplication table is not a nonempty square");
  for (int v : table)
    if (v < 0 || v >= n) throw InputError("table entry out of range");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->mul_ = std::move(table);
  g->name_ = std::move(name);

  const int e = find_identity(g->mul_, n);
  if (e < 0) throw InputError("table has no two-sided identity");
  g->identity_ = e;

  g->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g->mul(a, b) == e && g->mul(b, a) == e) {
        g->inv_[a] = b;
        break;
      }
    }
    if (g->inv_[a] < 0) throw InputError("element without inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
          throw InputError("multiplication table is not associative");

  // greedy generating set: repeatedly add the least element outside the
  // closure, preferring high element order for shorter words
  std::vector<char> inClosure(n, 0);
  inClosure[e] = 1;
  int covered = 1;
  g->expr_.assign(n, {-1, -1});
  g->wordOrder_.push_back(e);
  while (covered < n) {
    int pick = -1, bestOrd = 0;
    for (int a = 0; a < n; ++a) {
      if (inClosure[a]) continue;
      const int o = [&] {
        int x = a, k = 1;
        while (x != e) {
          x = g->mul(x, a);
          ++k;
        }
        return k;
      }();
      if (o > bestOrd) {
        bestOrd = o;
        pick = a;
      }
    }
    const int gi = static_cast<int>(g->gens_.size());
    g->gens_.push_back(pick);
    // BFS closure, recording one word per new element
    std::vector<int> frontier;
    for (int x = 0; x < n; ++x)
      if (inClosure[x]) frontier.push_back(x);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (size_t k = 0; k < g->gens_.size(); ++k) {
          const int y = g->mul(x, g->gens_[k]);
          if (!inClosure[y]) {
            inClosure[y] = 1;
            ++covered;
            g->expr_[y] = {static_cast<int>(k), x};
            g->wordOrder_.push_back(y);
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    (void)gi;
  }
  return g;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

GroupPtr trivial_group() {
  static GroupPtr g = FiniteGroup::from_table({0}, "1");
  return g;
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup::from_table(std::move(t), "C" + std::to_string(n));
}

GroupPtr symmetric_group(int n) {
  if (n < 0 || perm::factorial(n) > 5040)
    throw OrderBoundExceeded("symmetric group too large to materialize");
  const int ord = static_cast<int>(perm::factorial(n));
  std::vector<perm::Perm> elems(ord);
  for (int i = 0; i < ord; ++i) elems[i] = perm::lex_unrank(n, i);
  std::vector<int> t(static_cast<size_t>(ord) * ord);
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b)
      t[a * ord + b] =
          static_cast<int>(perm::lex_rank(perm::compose(elems[a], elems[b])));
  return FiniteGroup::from_table(std::move(t), "S" + std::to_string(n));
}

GroupPtr dihedral_group(int n) {
  if (n < 1) throw InputError("dihedral parameter must be positive");
  const int ord = 2 * n;
  auto idx = [n](int a, int b) { return a + n * b; };
  std::vector<int> t(ord * ord);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < 2; ++d) {
          // r^a s^b · r^c s^d = r^{a + (-1)^b c} s^{b+d}
          const int ra = ((a + (b ? -c : c)) % n + n) % n;
          t[idx(a, b) * ord + idx(c, d)] = idx(ra, (b + d) % 2);
        }
  return FiniteGroup::from_table(std::move(t), "D" + std::to_string(n));
}

GroupPtr klein_four() {
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
  return FiniteGroup::from_table(std::move(t), "K4");
}

GroupPtr quaternion_group() {
  // elements: 1,-1,i,-i,j,-j,k,-k encoded as 2*axis + sign
  auto enc = [](int axis, int sign) { return 2 * axis + sign; };
  // unit quaternion products: (axis,axis) -> (axis, sign)
  static const int prodAxis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int prodSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ax = a / 2, as = a % 2, bx = b / 2, bs = b % 2;
      t[a * 8 + b] = enc(prodAxis[ax][bx], (as + bs + prodSign[ax][bx]) % 2);
    }
  return FiniteGroup::from_table(std::move(t), "Q8");
}

GroupPtr from_permutations(const std::vector<perm::Perm>& gens, int points,
                           std::string name) {
  std::set<perm::Perm> elems;
  elems.insert(perm::identity(points));
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != points || !perm::is_perm(g))
      throw InputError("invalid permutation generator");
    elems.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<perm::Perm> cur(elems.begin(), elems.end());
    for (const auto& a : cur)
      for (const auto& g : gens) {
        auto p = perm::compose(a, g);
        if (elems.insert(p).second) grew = true;
        if (elems.size() > 20000)
          throw OrderBoundExceeded("permutation closure too large");
      }
  }
  std::vector<perm::Perm> sorted(elems.begin(), elems.end());
  std::map<perm::Perm, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  const int ord = static_cast<int>(sorted.size());
  std::vector<int> t(static_cast<size_t>(ord) * ord);
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b)
      t[a * ord + b] = index.at(perm::compose(sorted[a], sorted[b]));
  return FiniteGroup::from_table(std::move(t), std::move(name));
}

GroupPtr alternating_group(int n) {
  if (n < 3) return trivial_group();
  std::vector<perm::Perm> gens;
  for (int i = 0; i + 2 < n; ++i) {  // consecutive 3-cycles generate A_n
    auto p = perm::identity(n);
    p[i] = i + 1;
    p[i + 1] = i + 2;
    p[i + 2] = i;
    gens.push_back(p);
  }
  return from_permutations(gens, n, "A" + std::to_string(n));
}

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
  const int na = A->order(), nb = B->order(), n = na * nb;
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          t[(a1 * nb + b1) * n + (a2 * nb + b2)] =
              A->mul(a1, a2) * nb + B->mul(b1, b2);
  return FiniteGroup::from_table(std::move(t), A->name() + "x" + B->name());
}

Homomorphism diagonal_hom(const GroupPtr& G) {
  auto GG = direct_product(G, G);
  std::vector<int> m(G->order());
  for (int g = 0; g < G->order(); ++g) m[g] = g * G->order() + g;
  return make_hom(G, GG, std::move(m));
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup make_subgroup(GroupPtr G, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup H{std::move(G), std::move(elements)};
  const auto& g = *H.parent;
  if (!H.contains(g.identity()))
    throw SubgroupMismatch("subgroup misses the identity");
  for (int a : H.elements) {
    if (a < 0 || a >= g.order()) throw SubgroupMismatch("element out of range");
    if (!H.contains(g.inv(a))) throw SubgroupMismatch("subgroup not closed under inverse");
    for (int b : H.elements)
      if (!H.contains(g.mul(a, b)))
        throw SubgroupMismatch("subgroup not closed under multiplication");
  }
  return H;
}

Subgroup closure_subgroup(const GroupPtr& G, const std::vector<int>& seed) {
  std::set<int> elems{G->identity()};
  std::vector<int> frontier{G->identity()};
  for (int s : seed) {
    if (s < 0 || s >= G->order()) throw InputError("generator out of range");
    if (elems.insert(s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int s : seed) {
        const int x = G->mul(a, s);
        if (elems.insert(x).second) next.push_back(x);
        const int y = G->mul(s, a);
        if (elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return make_subgroup(G, std::vector<int>(elems.begin(), elems.end()));
}

Subgroup trivial_subgroup(const GroupPtr& G) {
  return make_subgroup(G, {G->identity()});
}

Subgroup full_subgroup(const GroupPtr& G) {
  std::vector<int> all(G->order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(G, std::move(all));
}

Subgroup conjugate_subgroup(const Subgroup& H, int g) {
  std::vector<int> elems;
  elems.reserve(H.elements.size());
  for (int x : H.elements) elems.push_back(H.parent->conjugate(g, x));
  return make_subgroup(H.parent, std::move(elems));
}

Subgroup intersect_subgroups(const Subgroup& A, const Subgroup& B) {
  std::vector<int> out;
  std::set_intersection(A.elements.begin(), A.elements.end(), B.elements.begin(),
                        B.elements.end(), std::back_inserter(out));
  return make_subgroup(A.parent, std::move(out));
}

bool subgroup_leq(const Subgroup& inner, const Subgroup& outer) {
  return std::includes(outer.elements.begin(), outer.elements.end(),
                       inner.elements.begin(), inner.elements.end());
}

Homomorphism make_hom(GroupPtr source, GroupPtr target, std::vector<int> map) {
  if (static_cast<int>(map.size()) != source->order())
    throw InputError("homomorphism map has wrong length");
  for (int v : map)
    if (v < 0 || v >= target->order()) throw InputError("hom image out of range");
  Homomorphism f{std::move(source), std::move(target), std::move(map)};
  const auto& S = *f.source;
  const auto& T = *f.target;
  if (f.map[S.identity()] != T.identity())
    throw InputError("map does not preserve the identity");
  for (int a = 0; a < S.order(); ++a)
    for (int b = 0; b < S.order(); ++b)
      if (f.map[S.mul(a, b)] != T.mul(f.map[a], f.map[b]))
        throw InputError("map is not a homomorphism");
  return f;
}

Homomorphism identity_hom(GroupPtr G) {
  std::vector<int> m(G->order());
  std::iota(m.begin(), m.end(), 0);
  return Homomorphism{G, G, std::move(m)};
}

Homomorphism trivial_hom(GroupPtr source, GroupPtr target) {
  std::vector<int> m(source->order(), target->identity());
  return Homomorphism{std::move(source), std::move(target), std::move(m)};
}

Homomorphism compose_hom(const Homomorphism& f, const Homomorphism& g) {
  if (f.source.get() != g.target.get() && !f.source->same_table(*g.target))
    throw InputError("homomorphisms not composable");
  std::vector<int> m(g.map.size());
  for (size_t i = 0; i < g.map.size(); ++i) m[i] = f.map[g.map[i]];
  return Homomorphism{g.source, f.target, std::move(m)};
}

Homomorphism conjugation_hom(const GroupPtr& G, int g) {
  std::vector<int> m(G->order());
  for (int x = 0; x < G->order(); ++x) m[x] = G->conjugate(g, x);
  return Homomorphism{G, G, std::move(m)};
}

bool is_injective_hom(const Homomorphism& f) {
  std::vector<char> seen(f.target->order(), 0);
  for (int v : f.map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

SubgroupLattice subgroups(const GroupPtr& G, int orderBound) {
  if (G->order() > orderBound)
    throw OrderBoundExceeded("group order " + std::to_string(G->order()) +
                             " exceeds bound " + std::to_string(orderBound));
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  const auto triv = trivial_subgroup(G).elements;
  found.insert(triv);
  frontier.push_back(triv);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& elems : frontier) {
      for (int g = 0; g < G->order(); ++g) {
        if (std::binary_search(elems.begin(), elems.end(), g)) continue;
        auto seed = elems;
        seed.push_back(g);
        auto H = closure_subgroup(G, seed);
        if (found.insert(H.elements).second) next.push_back(H.elements);
      }
    }
    frontier = std::move(next);
  }

  SubgroupLattice lat;
  for (const auto& e : found) lat.all.push_back(Subgroup{G, e});

  std::set<std::vector<int>> seenClassKeys;
  std::vector<std::pair<std::vector<int>, Subgroup>> reps;
  for (const auto& H : lat.all) {
    auto key = subgroup_class_key(H);
    if (seenClassKeys.insert(key).second)
      reps.emplace_back(key, Subgroup{G, key});
  }
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [k, H] : reps) lat.classReps.push_back(std::move(H));
  return lat;
}

std::vector<int> subgroup_class_key(const Subgroup& H) {
  std::vector<int> best = H.elements;
  for (int g = 0; g < H.parent->order(); ++g) {
    std::vector<int> conj;
    conj.reserve(H.elements.size());
    for (int x : H.elements) conj.push_back(H.parent->conjugate(g, x));
    std::sort(conj.begin(), conj.end());
    if (conj < best) best = conj;
  }
  return best;
}

std::vector<DoubleCoset> double_cosets(const GroupPtr& G, const Subgroup& K,
                                       const Subgroup& H) {
  if (K.parent.get() != G.get() && !K.parent->same_table(*G))
    throw SubgroupMismatch("left subgroup not inside the given group");
  if (H.parent.get() != G.get() && !H.parent->same_table(*G))
    throw SubgroupMismatch("right subgroup not inside the given group");
  std::vector<char> covered(G->order(), 0);
  std::vector<DoubleCoset> out;
  for (int g = 0; g < G->order(); ++g) {
    if (covered[g]) continue;
    for (int k : K.elements)
      for (int h : H.elements) covered[G->mul(G->mul(k, g), h)] = 1;
    std::vector<int> inter;
    for (int k : K.elements) {
      // k ∈ K ∩ gHg^-1  ⇔  g^-1 k g ∈ H
      if (H.contains(G->mul(G->mul(G->inv(g), k), g))) inter.push_back(k);
    }
    out.push_back(DoubleCoset{g, make_subgroup(G, std::move(inter))});
  }
  return out;
}

CosetSystem coset_system(const GroupPtr& G, const Subgroup& H) {
  if (H.parent.get() != G.get() && !H.parent->same_table(*G))
    throw SubgroupMismatch("subgroup belongs to a different group");
  std::vector<char> covered(G->order(), 0);
  std::vector<int> reps{G->identity()};
  for (int h : H.elements) covered[G->mul(G->identity(), h)] = 1;
  for (int g = 0; g < G->order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (int h : H.elements) covered[G->mul(g, h)] = 1;
  }
  return CosetSystem{G, H, std::move(reps)};
}

CosetSystem coset_system_with_reps(const GroupPtr& G, const Subgroup& H,
                                   std::vector<int> reps) {
  if (reps.empty() || reps[0] != G->identity())
    throw InputError("coset representatives must start with the identity");
  std::vector<char> covered(G->order(), 0);
  for (int r : reps) {
    for (int h : H.elements) {
      const int x = G->mul(r, h);
      if (covered[x]) throw InputError("coset representatives overlap");
      covered[x] = 1;
    }
  }
  for (char c : covered)
    if (!c) throw InputError("coset representatives do not cover the group");
  return CosetSystem{G, H, std::move(reps)};
}

WreathStructure::WreathStructure(int copies, GroupPtr base, std::int64_t bound)
    : r_(copies), base_(std::move(base)) {
  if (copies < 0) throw InputError("negative number of wreath copies");
  long double estimate = 1.0L;
  for (int i = 2; i <= copies; ++i) estimate *= i;
  for (int i = 0; i < copies; ++i) estimate *= base_->order();
  // bound <= 0 requests element arithmetic only; encode/decode stay usable
  // as long as the order fits an int64.
  if (bound > 0 && estimate > static_cast<long double>(bound))
    throw OrderBoundExceeded("wreath product order exceeds bound");
  if (estimate < 9e18L) {
    order_ = 1;
    for (int i = 2; i <= copies; ++i) order_ *= i;
    for (int i = 0; i < copies; ++i) order_ *= base_->order();
  } else {
    order_ = -1;
  }
}

WreathElem WreathStructure::id() const {
  return WreathElem{perm::identity(r_),
                    std::vector<int>(r_, base_->identity())};
}

WreathElem WreathStructure::mul(const WreathElem& a, const WreathElem& b) const {
  WreathElem out;
  out.sigma = perm::compose(a.sigma, b.sigma);
  out.labels.resize(r_);
  for (int i = 0; i < r_; ++i)
    out.labels[i] = base_->mul(a.labels[b.sigma[i]], b.labels[i]);
  return out;
}

WreathElem WreathStructure::inv(const WreathElem& a) const {
  WreathElem out;
  out.sigma = perm::inverse(a.sigma);
  out.labels.resize(r_);
  for (int i = 0; i < r_; ++i)
    out.labels[i] = base_->inv(a.labels[out.sigma[i]]);
  return out;
}

std::int64_t WreathStructure::encode(const WreathElem& w) const {
  std::int64_t idx = perm::lex_rank(w.sigma);
  for (int i = 0; i < r_; ++i) idx = idx * base_->order() + w.labels[i];
  return idx;
}

WreathElem WreathStructure::decode(std::int64_t idx) const {
  WreathElem w;
  w.labels.assign(r_, 0);
  for (int i = r_ - 1; i >= 0; --i) {
    w.labels[i] = static_cast<int>(idx % base_->order());
    idx /= base_->order();
  }
  w.sigma = perm::lex_unrank(r_, idx);
  return w;
}

GroupPtr wreath_group(int copies, const GroupPtr& base, std::int64_t tableBound) {
  WreathStructure ws(copies, base, tableBound);
  const int n = static_cast<int>(ws.order());
  std::vector<int> t(static_cast<size_t>(n) * n);
  std::vector<WreathElem> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = ws.decode(i);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a * n + b] = static_cast<int>(ws.encode(ws.mul(elems[a], elems[b])));
  return FiniteGroup::from_table(
      std::move(t), "S" + std::to_string(copies) + "wr" + base->name());
}

TransferEmbedding transfer_embedding(const GroupPtr& G, const Subgroup& H,
                                     const CosetSystem& cs) {
  const int r = cs.count();
  WreathStructure ws(r, G, 0);  // arithmetic only
  TransferEmbedding emb{G, H, cs, {}};
  emb.images.reserve(G->order());
  // coset index of every group element
  std::vector<int> cosetOf(G->order(), -1);
  for (int i = 0; i < r; ++i)
    for (int h : H.elements) cosetOf[G->mul(cs.reps[i], h)] = i;
  for (int g = 0; g < G->order(); ++g) {
    WreathElem w;
    w.sigma.resize(r);
    w.labels.resize(r);
    for (int i = 0; i < r; ++i) {
      const int t = G->mul(g, cs.reps[i]);
      const int j = cosetOf[t];
      w.sigma[i] = j;
      const int h = G->mul(G->inv(cs.reps[j]), t);
      if (!H.contains(h))
        throw InternalCheckFailed("transfer label escaped the subgroup");
      w.labels[i] = h;
    }
    if (!perm::is_perm(w.sigma))
      throw InternalCheckFailed("transfer slot map is not a permutation");
    emb.images.push_back(std::move(w));
  }
  // verify homomorphism and injectivity
  for (int a = 0; a < G->order(); ++a)
    for (int b = 0; b < G->order(); ++b)
      if (!(ws.mul(emb.images[a], emb.images[b]) == emb.images[G->mul(a, b)]))
        throw InternalCheckFailed("transfer embedding is not a homomorphism");
  for (int a = 0; a < G->order(); ++a)
    for (int b = a + 1; b < G->order(); ++b)
      if (emb.images[a] == emb.images[b])
        throw InternalCheckFailed("transfer embedding is not injective");
  return emb;
}

Homomorphism transfer_embedding_hom(const TransferEmbedding& emb,
                                    std::int64_t tableBound) {
  MaterializedSubgroup M = materialize(emb.sub);
  auto W = wreath_group(emb.cosets.count(), M.grp, tableBound);
  WreathStructure ws(emb.cosets.count(), M.grp, tableBound);
  std::vector<int> map(emb.group->order());
  for (int g = 0; g < emb.group->order(); ++g) {
    WreathElem local = emb.images[g];
    for (int& l : local.labels) l = M.toLocal[l];
    map[g] = static_cast<int>(ws.encode(local));
  }
  return make_hom(emb.group, W, std::move(map));
}

MaterializedSubgroup materialize(const Subgroup& H) {
  std::vector<int> toParent = H.elements;
  // identity first, the rest in parent order
  const int e = H.parent->identity();
  auto it = std::find(toParent.begin(), toParent.end(), e);
  std::rotate(toParent.begin(), it, it + 1);
  const int n = static_cast<int>(toParent.size());
  std::vector<int> toLocal(H.parent->order(), -1);
  for (int i = 0; i < n; ++i) toLocal[toParent[i]] = i;
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a * n + b] = toLocal[H.parent->mul(toParent[a], toParent[b])];
  auto grp = FiniteGroup::from_table(std::move(t), H.parent->name() + "sub");
  return MaterializedSubgroup{std::move(grp), H.parent, std::move(toParent),
                              std::move(toLocal)};
}

Homomorphism inclusion_hom(const MaterializedSubgroup& H) {
  return make_hom(H.grp, H.parent, H.toParent);
}

SubHomPair canonical_pair(const FiniteGroup& codomain, const FiniteGroup& ambient,
                          const SubHomPair& p) {
  SubHomPair best;
  bool haveBest = false;
  const int nL = static_cast<int>(p.L.size());
  for (int h = 0; h < ambient.order(); ++h) {
    // conjugated subgroup, sorted together with aligned φ images
    std::vector<std::pair<int, int>> conj(nL);
    for (int i = 0; i < nL; ++i)
      conj[i] = {ambient.conjugate(h, p.L[i]), p.phi[i]};
    std::sort(conj.begin(), conj.end());
    for (int g = 0; g < codomain.order(); ++g) {
      SubHomPair cand;
      cand.L.resize(nL);
      cand.phi.resize(nL);
      for (int i = 0; i < nL; ++i) {
        cand.L[i] = conj[i].first;
        cand.phi[i] = codomain.conjugate(g, conj[i].second);
      }
      if (!haveBest || cand < best) {
        best = std::move(cand);
        haveBest = true;
      }
    }
  }
  return best;
}

bool pair_conjugate(const FiniteGroup& codomain, const FiniteGroup& ambient,
                    const SubHomPair& a, const SubHomPair& b) {
  if (a.L.size() != b.L.size()) return false;
  return canonical_pair(codomain, ambient, a) ==
         canonical_pair(codomain, ambient, b);
}

std::vector<Homomorphism> all_homs(const GroupPtr& source, const GroupPtr& target) {
  const auto& gens = source->generators();
  const auto& expr = source->expressions();
  const int k = static_cast<int>(gens.size());
  long double count = 1.0L;
  for (int i = 0; i < k; ++i) count *= target->order();
  if (count > 2e7L) throw OrderBoundExceeded("homomorphism search space too large");

  std::vector<Homomorphism> out;
  std::vector<int> images(std::max(k, 1), 0);
  std::vector<int> map(source->order());
  auto tryAssign = [&]() {
    map[source->identity()] = target->identity();
    // extend generator images along recorded words, in discovery order
    for (int x : source->wordOrder()) {
      if (x == source->identity()) continue;
      const auto [gi, prev] = expr[x];
      map[x] = target->mul(map[prev], images[gi]);
    }
    for (int a = 0; a < source->order(); ++a)
      for (int b = 0; b < source->order(); ++b)
        if (map[source->mul(a, b)] != target->mul(map[a], map[b])) return;
    out.push_back(Homomorphism{source, target, map});
  };
  if (k == 0) {
    tryAssign();
    return out;
  }
  std::vector<int> stack(k, 0);
  while (true) {
    for (int i = 0; i < k; ++i) images[i] = stack[i];
    // quick order filter before the full check
    bool plausible = true;
    for (int i = 0; i < k && plausible; ++i)
      if (source->element_order(gens[i]) % target->element_order(images[i]) != 0)
        plausible = false;
    if (plausible) tryAssign();
    int pos = k - 1;
    while (pos >= 0 && ++stack[pos] == target->order()) stack[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::vector<Homomorphism> all_injective_homs(const GroupPtr& source,
                                             const GroupPtr& target) {
  std::vector<Homomorphism> out;
  for (auto& f : all_homs(source, target))
    if (is_injective_hom(f)) out.push_back(std::move(f));
  return out;
}

bool is_isomorphic(const GroupPtr& A, const GroupPtr& B) {
  if (A->order() != B->order()) return false;
  for (const auto& f : all_homs(A, B))
    if (is_injective_hom(f)) return true;
  return false;
}

}  // namespace burnside
