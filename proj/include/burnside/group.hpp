#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "burnside/perm.hpp"

namespace burnside {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kDefaultOrderBound = 48;
inline constexpr std::int64_t kDefaultWreathBound = 1000000;

// A finite group as an explicit multiplication table. Construction verifies
// the group axioms exhaustively (associativity on all triples, two-sided
// identity, inverses).
class FiniteGroup {
public:
  static GroupPtr from_table(std::vector<int> table, std::string name = "");

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  const std::string& name() const { return name_; }

  int conjugate(int g, int x) const {  // g x g^-1
    return mul(mul(g, x), inv(g));
  }
  int element_order(int a) const;
  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && mul_ == other.mul_;
  }
  // Deterministic small generating set (greedy over element indices).
  const std::vector<int>& generators() const { return gens_; }
  // Expresses every element as word: expr[x] = {generator index, previous
  // element}; expr[identity] = {-1, -1}. Used to enumerate homomorphisms.
  const std::vector<std::pair<int, int>>& expressions() const { return expr_; }
  // Elements in word-discovery order (identity first): expr[x].second always
  // precedes x, so maps can be extended in one pass.
  const std::vector<int>& wordOrder() const { return wordOrder_; }

private:
  FiniteGroup() = default;
  int order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int identity_ = 0;
  std::string name_;
  std::vector<int> gens_;
  std::vector<std::pair<int, int>> expr_;
  std::vector<int> wordOrder_;
};

// Presets. Element 0 is the identity in all of them.
GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n);       // elements ordered by lexicographic rank
GroupPtr dihedral_group(int n);        // order 2n, n >= 1
GroupPtr klein_four();
GroupPtr quaternion_group();
// Closure of permutation generators on the given number of points; elements
// sorted by one-line form, so the identity lands at index 0.
GroupPtr from_permutations(const std::vector<perm::Perm>& gens, int points,
                           std::string name = "");
GroupPtr alternating_group(int n);
// A×B with (a,b) encoded as a·|B| + b.
GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B);

struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted ascending, closed, contains identity
  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
};

Subgroup make_subgroup(GroupPtr G, std::vector<int> elements);
Subgroup closure_subgroup(const GroupPtr& G, const std::vector<int>& seed);
Subgroup trivial_subgroup(const GroupPtr& G);
Subgroup full_subgroup(const GroupPtr& G);
Subgroup conjugate_subgroup(const Subgroup& H, int g);
Subgroup intersect_subgroups(const Subgroup& A, const Subgroup& B);
bool subgroup_leq(const Subgroup& inner, const Subgroup& outer);

struct Homomorphism {
  GroupPtr source, target;
  std::vector<int> map;  // per source element
  int operator()(int x) const { return map[x]; }
};

Homomorphism make_hom(GroupPtr source, GroupPtr target, std::vector<int> map);
Homomorphism identity_hom(GroupPtr G);
Homomorphism trivial_hom(GroupPtr source, GroupPtr target);
Homomorphism compose_hom(const Homomorphism& f, const Homomorphism& g);  // f∘g
Homomorphism conjugation_hom(const GroupPtr& G, int g);  // x -> g x g^-1
// The diagonal embedding G -> G×G in the direct_product encoding.
Homomorphism diagonal_hom(const GroupPtr& G);
bool is_injective_hom(const Homomorphism& f);

// The full subgroup lattice plus one representative per conjugacy class,
// chosen as the lexicographically least element list in its class.
struct SubgroupLattice {
  std::vector<Subgroup> all;
  std::vector<Subgroup> classReps;
};
SubgroupLattice subgroups(const GroupPtr& G, int orderBound = kDefaultOrderBound);

// Representative of the conjugacy class of H: least element list among all
// conjugates.
std::vector<int> subgroup_class_key(const Subgroup& H);

struct DoubleCoset {
  int rep;                // least element of K·rep·H
  Subgroup intersection;  // K ∩ rep·H·rep^-1, as a subgroup of the parent
};
std::vector<DoubleCoset> double_cosets(const GroupPtr& G, const Subgroup& K,
                                       const Subgroup& H);

// Right coset system for H <= G: reps g_1,...,g_r with the cosets g_i·H
// partitioning G and reps[0] = identity.
struct CosetSystem {
  GroupPtr group;
  Subgroup sub;
  std::vector<int> reps;
  int count() const { return static_cast<int>(reps.size()); }
};
CosetSystem coset_system(const GroupPtr& G, const Subgroup& H);
CosetSystem coset_system_with_reps(const GroupPtr& G, const Subgroup& H,
                                   std::vector<int> reps);

// Elements of Σ_r ≀ H: a permutation of r block slots and one H-label per
// slot. Multiplication follows (σ;h)(σ';h') = (σσ'; h_{σ'(1)}h'_1, ...).
struct WreathElem {
  perm::Perm sigma;
  std::vector<int> labels;
  bool operator==(const WreathElem&) const = default;
};

class WreathStructure {
public:
  WreathStructure(int copies, GroupPtr base, std::int64_t bound = kDefaultWreathBound);
  int copies() const { return r_; }
  const GroupPtr& base() const { return base_; }
  std::int64_t order() const { return order_; }
  WreathElem id() const;
  WreathElem mul(const WreathElem& a, const WreathElem& b) const;
  WreathElem inv(const WreathElem& a) const;
  std::int64_t encode(const WreathElem& w) const;
  WreathElem decode(std::int64_t idx) const;

private:
  int r_;
  GroupPtr base_;
  std::int64_t order_;
};

// Materialized wreath product as a multiplication-table group; element
// indices agree with WreathStructure::encode. Usable only at small orders.
GroupPtr wreath_group(int copies, const GroupPtr& base,
                      std::int64_t tableBound = 5000);

// ι: G -> Σ_r ≀ H from a coset system, via g·g_i = g_{σ(i)}·h_i(g).
// Verified to be an injective homomorphism before returning.
struct TransferEmbedding {
  GroupPtr group;
  Subgroup sub;
  CosetSystem cosets;
  std::vector<WreathElem> images;  // per element of G; labels are parent indices
};
TransferEmbedding transfer_embedding(const GroupPtr& G, const Subgroup& H,
                                     const CosetSystem& cs);
// The same embedding as a homomorphism into the materialized wreath group.
Homomorphism transfer_embedding_hom(const TransferEmbedding& emb,
                                    std::int64_t tableBound = 5000);

// A subgroup as a group in its own right. local element 0 is the identity;
// the remaining elements keep their parent order.
struct MaterializedSubgroup {
  GroupPtr grp;
  GroupPtr parent;
  std::vector<int> toParent;  // local -> parent
  std::vector<int> toLocal;   // parent -> local, -1 outside
};
MaterializedSubgroup materialize(const Subgroup& H);
Homomorphism inclusion_hom(const MaterializedSubgroup& H);

// A pair (L <= ambient, φ: L -> codomain) in its raw encoding: L sorted
// ascending, φ aligned with it. These classify transitive one-side-free
// bisets up to joint conjugacy.
struct SubHomPair {
  std::vector<int> L;
  std::vector<int> phi;
  auto operator<=>(const SubHomPair&) const = default;
};

// Lexicographically least encoding of the (codomain × ambient)-conjugacy
// class of p: minimize (h·L·h^-1 sorted, g·φ(·)·g^-1 aligned) over all g, h.
SubHomPair canonical_pair(const FiniteGroup& codomain, const FiniteGroup& ambient,
                          const SubHomPair& p);
bool pair_conjugate(const FiniteGroup& codomain, const FiniteGroup& ambient,
                    const SubHomPair& a, const SubHomPair& b);

std::vector<Homomorphism> all_homs(const GroupPtr& source, const GroupPtr& target);
std::vector<Homomorphism> all_injective_homs(const GroupPtr& source,
                                             const GroupPtr& target);
bool is_isomorphic(const GroupPtr& A, const GroupPtr& B);

}  // namespace burnside
