#pragma once

#include <string>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/permcat.hpp"

namespace burnside {

// An object of 𝒞 with a group action by automorphisms. The action is stored
// elementwise and verified to be a homomorphism at construction.
struct GObject {
  GroupPtr group;
  PermCatPtr cat;
  int object = -1;
  std::vector<CatMor> act;  // per group element
};

GObject make_gobject(GroupPtr group, PermCatPtr cat, int object,
                     std::vector<CatMor> act);

// strict equality of carriers and action tables (same category assumed)
bool gobject_equal(const GObject& X, const GObject& Y);

// precomposition of the action: same object, action ∘ φ
GObject restrict_gobject(const Homomorphism& phi, const GObject& X);

GObject tensor_gobjects(const GObject& X, const GObject& Y);

// The tautological object of a free preset: block 1 with the base group
// acting by its own labels.
GObject tautological_gobject(const PermCatPtr& freeCat);

// Label relabeling 𝔉_H -> 𝔉_G along φ: H -> G (free presets; finset counts
// as free over the trivial group). The strict pushforward of the action.
GObject pushforward_free(const Homomorphism& phi, const GObject& X,
                         const PermCatPtr& targetCat);

// The r-fold tensor with the action assembled from block symmetries and the
// pointwise action, restricted along the transfer embedding of the coset
// system. X must live over H.grp.
GObject norm_gobject(const MaterializedSubgroup& H, const CosetSystem& cs,
                     const GObject& X);

// (σ; labels) action of one wreath element on X^⊗r: block permutation (built
// from adjacent symmetries in bubble-sort order) after the labelwise action.
CatMor wreath_action_on_tensor(const GObject& X, const perm::Perm& sigma,
                               const std::vector<CatMor>& labelActs);

bool gobject_iso(const GObject& X, const GObject& Y);

// Orbit decomposition of the associated free right-module: classes
// (L <= G, ψ: L -> base) with multiplicities, canonically sorted. Structured
// presets only.
std::vector<std::pair<SubHomPair, int>> decompose_gobject(const GObject& X);

// The commutative monoid π₀(G-𝒞) below the size bound, presented by its
// indecomposable basis.
struct IsoClassMonoid {
  GroupPtr group;
  PermCatPtr cat;
  long long bound = -1;
  std::vector<GObject> basis;
  std::vector<std::string> labels;
  std::vector<SubHomPair> keys;  // canonical, preset categories only

  int index_of_key(const SubHomPair& k) const;
};

IsoClassMonoid iso_classes(const GroupPtr& G, const PermCatPtr& C, long long bound);

// Coefficients of X in the basis of its monoid (preset categories use the
// structural decomposition; explicit ones factor exhaustively).
std::vector<long long> decompose_in_basis(const IsoClassMonoid& monoid,
                                          const GObject& X);

// Realize a basis class (L, ψ) as an honest G-object of the free preset:
// blocks G/L with the transfer-embedding action pushed through ψ.
GObject gobject_of_pair(const GroupPtr& G, const PermCatPtr& freeCat,
                        const SubHomPair& pair);

}  // namespace burnside
