#include "burnside/permcat.hpp"

#include <algorithm>
#include <map>

#include "burnside/error.hpp"

namespace burnside {

namespace {

CatMor poison_mor() { return CatMor{kPoisonObject, kPoisonObject, {}}; }

long long saturating_hom_count(int n, int base) {
  long double v = 1.0L;
  for (int i = 2; i <= n; ++i) v *= i;
  for (int i = 0; i < n; ++i) v *= base;
  if (v > 4e18L) return -1;
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

// shared block-sum / block-swap helpers for the two structured presets

class FinsetCategory final : public PermutativeCategory {
public:
  explicit FinsetCategory(int bound) : bound_(bound) {
    if (bound < 0) throw InputError("finset bound must be nonnegative");
  }
  Kind kind() const override { return Kind::Finset; }
  std::string describe() const override {
    return "finset:" + std::to_string(bound_);
  }
  int numObjects() const override { return bound_ + 1; }
  int unitObject() const override { return 0; }
  long long objectSize(int obj) const override { return obj; }
  long long homCount(int a, int b) const override {
    if (a != b || a == kPoisonObject) return 0;
    return saturating_hom_count(a, 1);
  }
  CatMor homAt(int a, int b, long long index) const override {
    if (a != b) throw InputError("finset hom sets are concentrated on equal sizes");
    return CatMor{a, b, perm::lex_unrank(a, index)};
  }
  CatMor idMor(int obj) const override {
    if (obj == kPoisonObject) return poison_mor();
    return CatMor{obj, obj, perm::identity(obj)};
  }
  CatMor compose(const CatMor& f, const CatMor& g) const override {
    if (f.poisoned() || g.poisoned()) return poison_mor();
    if (g.dst != f.src) throw InputError("morphisms not composable");
    return CatMor{g.src, f.dst, perm::compose(f.data, g.data)};
  }
  CatMor invert(const CatMor& f) const override {
    if (f.poisoned()) return poison_mor();
    return CatMor{f.dst, f.src, perm::inverse(f.data)};
  }
  int tensorObj(int a, int b) const override {
    if (a == kPoisonObject || b == kPoisonObject) return kPoisonObject;
    return a + b > bound_ ? kPoisonObject : a + b;
  }
  CatMor tensorMor(const CatMor& f, const CatMor& g) const override {
    const int s = tensorObj(f.src, g.src), d = tensorObj(f.dst, g.dst);
    if (f.poisoned() || g.poisoned() || s == kPoisonObject || d == kPoisonObject)
      return poison_mor();
    CatMor m{s, d, {}};
    m.data.resize(f.data.size() + g.data.size());
    for (size_t i = 0; i < f.data.size(); ++i) m.data[i] = f.data[i];
    for (size_t i = 0; i < g.data.size(); ++i)
      m.data[f.data.size() + i] = static_cast<int>(f.data.size()) + g.data[i];
    return m;
  }
  CatMor symmetry(int a, int b) const override {
    const int t = tensorObj(a, b);
    if (t == kPoisonObject) return poison_mor();
    CatMor m{t, t, std::vector<int>(t)};
    for (int i = 0; i < a; ++i) m.data[i] = b + i;
    for (int j = 0; j < b; ++j) m.data[a + j] = j;
    return m;
  }
  GroupPtr baseGroup() const override { return trivial_group(); }

private:
  int bound_;
};

class FreeCategory final : public PermutativeCategory {
public:
  FreeCategory(GroupPtr base, int bound) : base_(std::move(base)), bound_(bound) {
    if (bound < 0) throw InputError("free preset bound must be nonnegative");
  }
  Kind kind() const override { return Kind::Free; }
  std::string describe() const override {
    return "free:" + base_->name() + ":" + std::to_string(bound_);
  }
  int numObjects() const override { return bound_ + 1; }
  int unitObject() const override { return 0; }
  long long objectSize(int obj) const override { return obj; }
  long long homCount(int a, int b) const override {
    if (a != b || a == kPoisonObject) return 0;
    return saturating_hom_count(a, base_->order());
  }
  CatMor homAt(int a, int b, long long index) const override {
    if (a != b) throw InputError("free hom sets are concentrated on equal sizes");
    CatMor m{a, b, std::vector<int>(2 * a)};
    long long rest = index;
    for (int i = a - 1; i >= 0; --i) {
      m.data[a + i] = static_cast<int>(rest % base_->order());
      rest /= base_->order();
    }
    auto s = perm::lex_unrank(a, rest);
    for (int i = 0; i < a; ++i) m.data[i] = s[i];
    return m;
  }
  CatMor idMor(int obj) const override {
    if (obj == kPoisonObject) return poison_mor();
    CatMor m{obj, obj, std::vector<int>(2 * obj)};
    for (int i = 0; i < obj; ++i) {
      m.data[i] = i;
      m.data[obj + i] = base_->identity();
    }
    return m;
  }
  CatMor compose(const CatMor& f, const CatMor& g) const override {
    if (f.poisoned() || g.poisoned()) return poison_mor();
    if (g.dst != f.src) throw InputError("morphisms not composable");
    const int n = f.src;
    CatMor m{g.src, f.dst, std::vector<int>(2 * n)};
    // (σ;h)∘(σ';h') = (σσ'; h_{σ'(i)} h'_i)
    for (int i = 0; i < n; ++i) {
      m.data[i] = f.data[g.data[i]];
      m.data[n + i] = base_->mul(f.data[n + g.data[i]], g.data[n + i]);
    }
    return m;
  }
  CatMor invert(const CatMor& f) const override {
    if (f.poisoned()) return poison_mor();
    const int n = f.src;
    CatMor m{f.dst, f.src, std::vector<int>(2 * n)};
    for (int i = 0; i < n; ++i) m.data[f.data[i]] = i;
    for (int i = 0; i < n; ++i) m.data[n + i] = base_->inv(f.data[n + m.data[i]]);
    return m;
  }
  int tensorObj(int a, int b) const override {
    if (a == kPoisonObject || b == kPoisonObject) return kPoisonObject;
    return a + b > bound_ ? kPoisonObject : a + b;
  }
  CatMor tensorMor(const CatMor& f, const CatMor& g) const override {
    const int s = tensorObj(f.src, g.src), d = tensorObj(f.dst, g.dst);
    if (f.poisoned() || g.poisoned() || s == kPoisonObject || d == kPoisonObject)
      return poison_mor();
    const int n = f.src, m2 = g.src;
    CatMor m{s, d, std::vector<int>(2 * (n + m2))};
    for (int i = 0; i < n; ++i) {
      m.data[i] = f.data[i];
      m.data[n + m2 + i] = f.data[n + i];
    }
    for (int j = 0; j < m2; ++j) {
      m.data[n + j] = n + g.data[j];
      m.data[n + m2 + n + j] = g.data[m2 + j];
    }
    return m;
  }
  CatMor symmetry(int a, int b) const override {
    const int t = tensorObj(a, b);
    if (t == kPoisonObject) return poison_mor();
    CatMor m{t, t, std::vector<int>(2 * t)};
    for (int i = 0; i < a; ++i) m.data[i] = b + i;
    for (int j = 0; j < b; ++j) m.data[a + j] = j;
    for (int i = 0; i < t; ++i) m.data[t + i] = base_->identity();
    return m;
  }
  GroupPtr baseGroup() const override { return base_; }

private:
  GroupPtr base_;
  int bound_;
};

class ExplicitCategory final : public PermutativeCategory {
public:
  explicit ExplicitCategory(ExplicitCatData d) : d_(std::move(d)) {
    const int nm = static_cast<int>(d_.morSrc.size());
    if (static_cast<int>(d_.morDst.size()) != nm ||
        static_cast<int>(d_.idMor.size()) != d_.objects)
      throw InputError("explicit category tables are inconsistent");
    homIds_.assign(d_.objects, std::vector<std::vector<int>>(d_.objects));
    for (int m = 0; m < nm; ++m) {
      if (d_.morSrc[m] < 0 || d_.morSrc[m] >= d_.objects || d_.morDst[m] < 0 ||
          d_.morDst[m] >= d_.objects)
        throw InputError("morphism endpoint out of range");
      homIds_[d_.morSrc[m]][d_.morDst[m]].push_back(m);
    }
    inv_.assign(nm, -1);
    for (int m = 0; m < nm; ++m) {
      for (int w : homIds_[d_.morDst[m]][d_.morSrc[m]]) {
        if (d_.compose[w][m] == d_.idMor[d_.morSrc[m]] &&
            d_.compose[m][w] == d_.idMor[d_.morDst[m]]) {
          inv_[m] = w;
          break;
        }
      }
      if (inv_[m] < 0) throw InputError("explicit category has a non-invertible morphism");
    }
  }
  Kind kind() const override { return Kind::Explicit; }
  std::string describe() const override { return "explicit"; }
  int numObjects() const override { return d_.objects; }
  int unitObject() const override { return d_.unit; }
  long long objectSize(int) const override { return 1; }
  long long homCount(int a, int b) const override {
    if (a == kPoisonObject || b == kPoisonObject) return 0;
    return static_cast<long long>(homIds_[a][b].size());
  }
  CatMor homAt(int a, int b, long long index) const override {
    return wrap(homIds_[a][b].at(static_cast<size_t>(index)));
  }
  CatMor idMor(int obj) const override {
    if (obj == kPoisonObject) return poison_mor();
    return wrap(d_.idMor[obj]);
  }
  CatMor compose(const CatMor& f, const CatMor& g) const override {
    if (f.poisoned() || g.poisoned()) return poison_mor();
    const int r = d_.compose[f.data[0]][g.data[0]];
    if (r < 0) throw InputError("morphisms not composable");
    return wrap(r);
  }
  CatMor invert(const CatMor& f) const override {
    if (f.poisoned()) return poison_mor();
    return wrap(inv_[f.data[0]]);
  }
  int tensorObj(int a, int b) const override {
    if (a == kPoisonObject || b == kPoisonObject) return kPoisonObject;
    const int r = d_.tensorObj[a][b];
    return r < 0 ? kPoisonObject : r;
  }
  CatMor tensorMor(const CatMor& f, const CatMor& g) const override {
    if (f.poisoned() || g.poisoned()) return poison_mor();
    const int r = d_.tensorMor[f.data[0]][g.data[0]];
    if (r < 0) return poison_mor();
    return wrap(r);
  }
  CatMor symmetry(int a, int b) const override {
    if (a == kPoisonObject || b == kPoisonObject) return poison_mor();
    const int r = d_.symmetry[a][b];
    if (r < 0) return poison_mor();
    return wrap(r);
  }
  GroupPtr baseGroup() const override { return trivial_group(); }

private:
  CatMor wrap(int morId) const {
    return CatMor{d_.morSrc[morId], d_.morDst[morId], {morId}};
  }
  ExplicitCatData d_;
  std::vector<std::vector<std::vector<int>>> homIds_;
  std::vector<int> inv_;
};

}  // namespace

PermCatPtr finset_category(int bound) {
  return std::make_shared<FinsetCategory>(bound);
}

PermCatPtr free_category(const GroupPtr& base, int bound) {
  return std::make_shared<FreeCategory>(base, bound);
}

PermCatPtr explicit_category(ExplicitCatData data) {
  auto cat = std::make_shared<ExplicitCategory>(std::move(data));
  validate_permcat(*cat);
  return cat;
}

void validate_permcat(const PermutativeCategory& C, int maxObjects, long long homCap) {
  const int n = maxObjects < 0 ? C.numObjects()
                               : std::min(maxObjects + 1, C.numObjects());
  auto enumerable = [&](int a, int b) {
    const long long c = C.homCount(a, b);
    return c >= 0 && c <= homCap;
  };
  std::vector<std::vector<CatMor>> end(n);
  for (int a = 0; a < n; ++a) {
    if (!enumerable(a, a)) continue;
    for (long long i = 0; i < C.homCount(a, a); ++i) end[a].push_back(C.homAt(a, a, i));
  }
  // category laws
  for (int a = 0; a < n; ++a) {
    for (const auto& f : end[a]) {
      if (!(C.compose(f, C.idMor(a)) == f) || !(C.compose(C.idMor(a), f) == f))
        throw InputError("identity law fails");
      if (!(C.compose(C.invert(f), f) == C.idMor(a)))
        throw InputError("inverse law fails");
    }
    if (end[a].size() <= 40)
      for (const auto& f : end[a])
        for (const auto& g : end[a])
          for (const auto& h : end[a])
            if (!(C.compose(C.compose(f, g), h) == C.compose(f, C.compose(g, h))))
              throw InputError("composition is not associative");
  }
  // strict tensor structure on objects
  const int u = C.unitObject();
  for (int a = 0; a < n; ++a) {
    if (C.tensorObj(a, u) != a || C.tensorObj(u, a) != a)
      throw InputError("unit object is not strict");
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int ab = C.tensorObj(a, b);
        const int bc = C.tensorObj(b, c);
        const int l = ab == kPoisonObject ? kPoisonObject : C.tensorObj(ab, c);
        const int r = bc == kPoisonObject ? kPoisonObject : C.tensorObj(a, bc);
        if (l != r && l != kPoisonObject && r != kPoisonObject)
          throw InputError("tensor on objects is not associative");
      }
  }
  // bifunctoriality and identities
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (C.tensorObj(a, b) == kPoisonObject) continue;
      if (!enumerable(a, a) || !enumerable(b, b)) continue;
      if (!(C.tensorMor(C.idMor(a), C.idMor(b)) == C.idMor(C.tensorObj(a, b))))
        throw InputError("tensor breaks identities");
      if (end[a].size() * end[b].size() <= 400)
        for (const auto& f1 : end[a])
          for (const auto& f2 : end[a])
            for (const auto& g1 : end[b])
              for (const auto& g2 : end[b])
                if (!(C.compose(C.tensorMor(f1, g1), C.tensorMor(f2, g2)) ==
                      C.tensorMor(C.compose(f1, f2), C.compose(g1, g2))))
                  throw InputError("tensor is not bifunctorial");
    }
  // symmetry: involution, unit, naturality, hexagons
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (C.tensorObj(a, b) == kPoisonObject) continue;
      const auto beta = C.symmetry(a, b);
      if (!(C.compose(C.symmetry(b, a), beta) == C.idMor(C.tensorObj(a, b))))
        throw InputError("symmetry is not an involution");
      if (b == u && !(beta == C.idMor(a)))
        throw InputError("symmetry at the unit must be the identity");
      if (enumerable(a, a) && enumerable(b, b))
        for (const auto& f : end[a])
          for (const auto& g : end[b])
            if (!(C.compose(beta, C.tensorMor(f, g)) ==
                  C.compose(C.tensorMor(g, f), beta)))
              throw InputError("symmetry is not natural");
      for (int c = 0; c < n; ++c) {
        if (C.tensorObj(C.tensorObj(a, b), c) == kPoisonObject) continue;
        const auto lhs = C.symmetry(a, C.tensorObj(b, c));
        const auto rhs = C.compose(C.tensorMor(C.idMor(b), C.symmetry(a, c)),
                                   C.tensorMor(C.symmetry(a, b), C.idMor(c)));
        if (!(lhs == rhs)) throw InputError("left hexagon fails");
        const auto lhs2 = C.symmetry(C.tensorObj(a, b), c);
        const auto rhs2 = C.compose(C.tensorMor(C.symmetry(a, c), C.idMor(b)),
                                    C.tensorMor(C.idMor(a), C.symmetry(b, c)));
        if (!(lhs2 == rhs2)) throw InputError("right hexagon fails");
      }
    }
}

MaterializedAut materialize_aut(const PermutativeCategory& C, int obj, long long cap) {
  const long long count = C.homCount(obj, obj);
  if (count < 0 || count > cap)
    throw OrderBoundExceeded("automorphism group too large to materialize");
  MaterializedAut out;
  out.mors.reserve(static_cast<size_t>(count));
  std::map<std::vector<int>, int> index;
  for (long long i = 0; i < count; ++i) {
    out.mors.push_back(C.homAt(obj, obj, i));
    index[out.mors.back().data] = static_cast<int>(i);
  }
  const int n = static_cast<int>(count);
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = index.at(C.compose(out.mors[a], out.mors[b]).data);
  out.grp = FiniteGroup::from_table(std::move(table), "Aut");
  return out;
}

int MaterializedAut::element_of(const CatMor& m) const {
  for (size_t i = 0; i < mors.size(); ++i)
    if (mors[i] == m) return static_cast<int>(i);
  throw InternalCheckFailed("morphism is not in the materialized group");
}

}  // namespace burnside
