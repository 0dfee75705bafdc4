#pragma once

#include <memory>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

// Distinguished overflow object: tensoring past a preset's bound yields this
// id, and every downstream use errors instead of silently truncating.
inline constexpr int kPoisonObject = -2;

// A morphism of a presented permutative category, carried as plain data so
// that wreath-sized hom sets never need materializing. The encoding is owned
// by the category kind: images for finset, (σ; labels) for free presets, a
// single table id for explicit presentations.
struct CatMor {
  int src = -1, dst = -1;
  std::vector<int> data;
  bool operator==(const CatMor&) const = default;
  bool poisoned() const { return src == kPoisonObject || dst == kPoisonObject; }
};

class PermutativeCategory {
public:
  enum class Kind { Finset, Free, Explicit };

  virtual ~PermutativeCategory() = default;
  virtual Kind kind() const = 0;
  virtual std::string describe() const = 0;
  // objects are 0..numObjects()-1; tensor may also return kPoisonObject
  virtual int numObjects() const = 0;
  virtual int unitObject() const = 0;
  virtual long long objectSize(int obj) const = 0;
  // -1 when the hom set is too large to enumerate
  virtual long long homCount(int a, int b) const = 0;
  virtual CatMor homAt(int a, int b, long long index) const = 0;
  virtual CatMor idMor(int obj) const = 0;
  virtual CatMor compose(const CatMor& f, const CatMor& g) const = 0;  // f∘g
  virtual CatMor invert(const CatMor& f) const = 0;
  virtual int tensorObj(int a, int b) const = 0;
  virtual CatMor tensorMor(const CatMor& f, const CatMor& g) const = 0;
  virtual CatMor symmetry(int a, int b) const = 0;  // β: a⊗b -> b⊗a

  // base group of the labels for the free preset; trivial for finset
  virtual GroupPtr baseGroup() const = 0;
};

using PermCatPtr = std::shared_ptr<const PermutativeCategory>;

// The core of finite sets of size <= bound, tensored by disjoint union.
PermCatPtr finset_category(int bound);
// The free permutative groupoid on the base group, truncated at bound
// blocks: objects n with End(n) = Σ_n ≀ base.
PermCatPtr free_category(const GroupPtr& base, int bound);

// Fully tabulated presentation; verified permutative at construction.
struct ExplicitCatData {
  int objects = 0;
  int unit = 0;
  std::vector<int> morSrc, morDst, idMor;
  std::vector<std::vector<int>> compose;    // [f][g] = f∘g, -1 undefined
  std::vector<std::vector<int>> tensorObj;  // [a][b]
  std::vector<std::vector<int>> tensorMor;  // [f][g]
  std::vector<std::vector<int>> symmetry;   // [a][b] = morphism id
};
PermCatPtr explicit_category(ExplicitCatData data);

// Exhaustive permutative-category axioms over the enumerable part: category
// laws, strict tensor associativity/unitality, bifunctoriality, symmetry
// involution/naturality/unit and both hexagons. Hom sets larger than homCap
// are skipped (the structured presets are exercised at small sizes).
void validate_permcat(const PermutativeCategory& C, int maxObjects = -1,
                      long long homCap = 400);

// Σ_n ≀ base as the endomorphism group of an object of a preset, materialized
// with elements ordered by homAt index. Explicit categories get their hom
// tables. Requires an enumerable hom set.
struct MaterializedAut {
  GroupPtr grp;
  std::vector<CatMor> mors;  // per group element
  int element_of(const CatMor& m) const;
};
MaterializedAut materialize_aut(const PermutativeCategory& C, int obj,
                                long long cap = 50000);

}  // namespace burnside
