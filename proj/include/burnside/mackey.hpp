#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "burnside/gobject.hpp"
#include "burnside/matrix.hpp"
#include "burnside/spans.hpp"

namespace burnside {

// Mackey-functor backend: free abelian value groups with restriction
// matrices for arbitrary homomorphisms and transfer matrices for injective
// ones. Values are computed per group on demand and cached.
class MackeyTheory {
public:
  virtual ~MackeyTheory() = default;
  virtual std::string name() const = 0;
  virtual std::vector<std::string> basis(const GroupPtr& G) = 0;
  virtual int rank(const GroupPtr& G) { return static_cast<int>(basis(G).size()); }
  // φ: H -> G yields M(G) -> M(H)
  virtual IntMat res(const Homomorphism& phi) = 0;
  // injective i: H -> G yields M(H) -> M(G)
  virtual IntMat tr(const Homomorphism& inj) = 0;
};

// value(G) = free abelian group on transitive G-sets; res by restriction of
// actions and orbit decomposition, tr by explicit induction G ×_H −.
std::shared_ptr<MackeyTheory> burnside_theory(int orderBound = kDefaultOrderBound);

// value(G) = K₀ of G-objects below the bound; res by categorical
// restriction, tr by the norm.
std::shared_ptr<MackeyTheory> swan_theory(PermCatPtr cat, long long bound);

struct MackeyData {
  std::vector<GroupPtr> groups;
  std::shared_ptr<MackeyTheory> theory;

  bool in_family(const GroupPtr& G) const;
  MackeyData extended(const std::vector<GroupPtr>& extra) const;
};

MackeyData burnside_mackey(std::vector<GroupPtr> groups,
                           int orderBound = kDefaultOrderBound);
MackeyData swan_mackey(PermCatPtr cat, std::vector<GroupPtr> groups,
                       long long bound);

// Σ over the canonical form of α of multiplicity · tr(L -> target) ∘
// res(φ: L -> source). Endpoints must be one-component groupoids whose
// automorphism groups are listed in the family.
IntMat evaluate_span(const MackeyData& M, const Span& alpha);

struct EvaluationReport {
  std::string check;
  bool pass = true;
  long long checked = 0;
  nlohmann::json details = nlohmann::json::object();
};

// engine side: evaluate_span of restriction∘transfer; oracle side: the
// double coset expansion Σ tr ∘ conj ∘ res over K\G/H.
EvaluationReport check_double_coset(const MackeyData& M, const GroupPtr& G,
                                    const Subgroup& K, const Subgroup& H);
// sweep over all subgroup-class pairs of every listed group
EvaluationReport check_all_double_cosets(const MackeyData& M, int jobs = 1);

// seeded random composable span pairs: M(β∘α) = M(β)·M(α)
EvaluationReport check_functoriality(const MackeyData& M, int samples,
                                     std::uint64_t seed);

// The π₀ comparison for the free preset over `base`: for every listed group,
// the iso-class basis of G-objects in free:base:N matches the span hom basis
// out of B(base), and the categorical restriction/norm matrices equal the
// span-composition matrices along every homomorphism between listed groups
// (transfers along the injective ones).
EvaluationReport compare_main_theorem(const GroupPtr& base,
                                      const std::vector<GroupPtr>& groups,
                                      int blockBound);

// Burnside-ring data for one group: transitive basis, table of marks and
// structure constants.
struct BurnsideRing {
  GroupPtr group;
  std::vector<Subgroup> reps;
  std::vector<std::string> labels;
  IntMat marks;                                 // marks[i][j] = |(G/L_i)^{L_j}|
  std::vector<std::vector<std::vector<long long>>> mul;  // [i][j] -> coeffs
};
BurnsideRing burnside_ring(const GroupPtr& G, int orderBound = kDefaultOrderBound);

}  // namespace burnside
