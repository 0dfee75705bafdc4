#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

// A finite groupoid with globally indexed morphisms. Hom tables are always
// materialized; the composition table is dense for small groupoids and a
// structural function for large constructed ones (iso-commas, action
// groupoids), where the dense table would be quadratic in the morphism count.
class FiniteGroupoid {
public:
  int objects() const { return nObj_; }
  int morphisms() const { return nMor_; }
  int src(int m) const { return morSrc_[m]; }
  int dst(int m) const { return morDst_[m]; }
  int inv(int m) const { return morInv_[m]; }
  int id(int obj) const { return idMor_[obj]; }
  // compose(f, g) = f∘g, apply g first; requires dst(g) == src(f).
  int compose(int f, int g) const {
    return compDense_.empty() ? compFn_(f, g)
                              : compDense_[static_cast<size_t>(f) * nMor_ + g];
  }
  const std::vector<int>& hom(int a, int b) const { return homTab_[a][b]; }
  const std::vector<int>& out(int a) const { return outMor_[a]; }
  // position of m within out(src(m)); used by structural composition
  int outPos(int m) const { return outPos_[m]; }
  bool hasDenseComposition() const { return !compDense_.empty(); }

  // Exhaustive category-axiom check: identities, inverses, associativity on
  // all composable triples. Intended for tests and external inputs.
  void validate() const;

  bool same_tables(const FiniteGroupoid& other) const;

  struct Builder {
    int nObj = 0;
    std::vector<int> morSrc, morDst, morInv, idMor;
    std::vector<int> compDense;  // optional, nMor*nMor
    std::function<int(int, int)> compFn;
    GroupoidPtr finish() const;
  };

private:
  friend struct Builder;
  FiniteGroupoid() = default;
  int nObj_ = 0;
  int nMor_ = 0;
  std::vector<int> morSrc_, morDst_, morInv_, idMor_;
  std::vector<std::vector<std::vector<int>>> homTab_;
  std::vector<std::vector<int>> outMor_;
  std::vector<int> outPos_;
  std::vector<int> compDense_;
  std::function<int(int, int)> compFn_;
};

struct GroupoidFunctor {
  GroupoidPtr source, target;
  std::vector<int> objMap;
  std::vector<int> morMap;
  int obj(int a) const { return objMap[a]; }
  int mor(int m) const { return morMap[m]; }
};

// Verifies that the maps preserve sources, targets, identities and all
// compositions. Quadratic in morphisms of the source; meant for small inputs.
void validate_functor(const GroupoidFunctor& F);

GroupoidFunctor identity_functor(GroupoidPtr G);
GroupoidFunctor compose_functors(const GroupoidFunctor& F,
                                 const GroupoidFunctor& G);  // F∘G

struct NaturalIso {
  GroupoidFunctor source, target;       // parallel functors
  std::vector<int> components;          // per object of the common source
};
// naturality of every square, componentwise invertibility
void validate_natural_iso(const NaturalIso& n);

// Constructors ---------------------------------------------------------

// One object, hom = G with compose(a, b) = a·b.
GroupoidPtr classifying(const GroupPtr& G);
// The unique morphism between any two of n objects.
GroupoidPtr indiscrete(int n);
GroupoidPtr empty_groupoid();

// B applied to a group homomorphism.
GroupoidFunctor classifying_functor(const Homomorphism& f);
// Quotient EG -> BG sending the unique morphism a -> b to b·a^-1.
GroupoidFunctor eg_quotient(const GroupPtr& G);

struct Coproduct {
  GroupoidPtr total;
  std::vector<GroupoidFunctor> injections;
  std::vector<int> objOffset, morOffset;
};
Coproduct coproduct(const std::vector<GroupoidPtr>& parts);

// Combine functors F_i: parts_i -> target into one functor out of the
// coproduct.
GroupoidFunctor cotuple(const Coproduct& cp, const std::vector<GroupoidFunctor>& legs);

// Predicates -----------------------------------------------------------
bool is_faithful(const GroupoidFunctor& F);
bool is_full(const GroupoidFunctor& F);
bool is_essentially_surjective(const GroupoidFunctor& F);
bool is_isofibration(const GroupoidFunctor& F);
bool is_equivalence(const GroupoidFunctor& F);

// Limits ----------------------------------------------------------------

struct StrictPullback {
  GroupoidPtr total;
  GroupoidFunctor toLeft;   // projection to the source of f
  GroupoidFunctor toRight;  // projection to the source of g
  bool gWasIsofibration;    // recorded, not enforced
};
StrictPullback strict_pullback(const GroupoidFunctor& f, const GroupoidFunctor& g);

// Iso-comma groupoid of f: A -> D and g: C -> D: objects (a, c, δ: f a -> g c),
// morphisms (α, γ) with g(γ)∘δ = δ'∘f(α). This is the homotopy pullback.
struct IsoComma {
  GroupoidPtr total;
  GroupoidFunctor toLeft;   // to the source of f
  GroupoidFunctor toRight;  // to the source of g
  NaturalIso filler;        // f∘toLeft => g∘toRight, component δ at (a,c,δ)
  // object data, indexed by object of total
  std::vector<int> objA, objC, objDelta;
};
IsoComma iso_comma(const GroupoidFunctor& f, const GroupoidFunctor& g);

// Skeleton ---------------------------------------------------------------

struct Skeleton {
  GroupoidPtr skel;                       // one object per iso class, dense
  GroupoidFunctor incl;                   // skel -> original
  GroupoidFunctor retr;                   // original -> skel
  NaturalIso inclRetrToId;                // incl∘retr => id_original
  std::vector<int> componentOf;           // original object -> component
  std::vector<int> repObj;                // component -> original object
  std::vector<int> connIso;               // original object -> morphism rep -> obj
  std::vector<GroupPtr> autGroups;        // per component
  std::vector<std::vector<int>> autMor;   // group element -> morphism id at rep
  // inverse lookup: morphism id (rep->rep) to group element
  int groupElementOf(int component, int morId) const;
};
Skeleton skeleton(const GroupoidPtr& G);

}  // namespace burnside
