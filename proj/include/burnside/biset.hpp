#pragma once

#include <compare>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/groupoid.hpp"

namespace burnside {

// One value X(G_i, H_j) of a biset: a finite set with commuting left actions
// of the two component groups. "Left"/"right" name the sides of the biset,
// not the side an action is written on.
struct BisetCell {
  int size = 0;
  std::vector<std::vector<int>> actL;  // per element of the left group
  std::vector<std::vector<int>> actR;  // per element of the right group
};

// A biset between skeletal groupoids, given by its component groups and one
// cell per component pair. Left-freeness (the spans' free side) is an
// invariant checked by validate_biset.
struct Biset {
  std::vector<GroupPtr> left;
  std::vector<GroupPtr> right;
  std::vector<std::vector<BisetCell>> cells;  // [leftComp][rightComp]
};

// Functoriality of every cell action, commutation, and freeness of the left
// action. Throws FreenessViolated / InputError.
void validate_biset(const Biset& X);

// A transitive left-free biset up to conjugacy: a subgroup L of the right
// component group together with a homomorphism into the left component group,
// in canonical (least-encoding) form.
struct TransitiveClass {
  int leftComp = 0;
  int rightComp = 0;
  SubHomPair pair;  // L inside right group, phi into left group; canonical
  auto operator<=>(const TransitiveClass&) const = default;
};

struct BisetClass {
  std::vector<GroupPtr> left;
  std::vector<GroupPtr> right;
  std::vector<std::pair<TransitiveClass, int>> classes;  // sorted, mult > 0
};

bool same_groups(const std::vector<GroupPtr>& a, const std::vector<GroupPtr>& b);
bool operator==(const BisetClass& a, const BisetClass& b);

// Orbit decomposition with graph-subgroup stabilizers. Throws
// FreenessViolated when a stabilizer is not a graph (corrupt input).
BisetClass decompose(const Biset& X);

bool biset_iso(const Biset& X, const Biset& Y);

// Realizes a class list as an honest biset: each transitive piece is the
// coset cell (G_i × H_j)/Γ_{L,φ} with the evident two-sided action.
Biset biset_of_classes(const BisetClass& data);
Biset unit_biset(const std::vector<GroupPtr>& comps);

// cell(i,k) = ⨆_j cell_X(i,j) × cell_Y(j,k) / (antidiagonal middle action).
Biset tensor(const Biset& X, const Biset& Y);

// The total groupoid of a biset: the action groupoid of all cells, with the
// two projections onto coproducts of classifying groupoids.
struct GrothendieckTotal {
  GroupoidPtr total;
  GroupoidPtr leftGroupoid;   // ⊔ B(left_i)
  GroupoidPtr rightGroupoid;  // ⊔ B(right_j)
  GroupoidFunctor projL;
  GroupoidFunctor projR;
};
GrothendieckTotal grothendieck(const Biset& X);

// π₀ of the homotopy fibers of (projG, projH): 𝒳 → 𝒢×ℋ with transport
// actions; requires projH faithful (NotRightFaithful otherwise). Endpoints
// are skeletonized here; non-isofibrations are handled by working with the
// mapping-path fibers directly.
Biset straighten(const GroupoidFunctor& projG, const GroupoidFunctor& projH);

}  // namespace burnside
