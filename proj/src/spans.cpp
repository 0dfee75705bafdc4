#include "burnside/spans.hpp"

#include <algorithm>
#include <set>

#include "burnside/error.hpp"

namespace burnside {

void validate_span(const Span& s) {
  if (s.faithfulLeg.source.get() != s.apex.get() ||
      s.freeLeg.source.get() != s.apex.get())
    throw InputError("span legs must start at the apex");
  if (s.faithfulLeg.target.get() != s.target.get() ||
      s.freeLeg.target.get() != s.source.get())
    throw InputError("span legs land at the wrong endpoints");
  if (!is_faithful(s.faithfulLeg))
    throw InputError("the target leg of a span must be faithful");
}

Span identity_span(const GroupoidPtr& G) {
  Span s;
  s.source = s.target = s.apex = G;
  s.faithfulLeg = identity_functor(G);
  s.freeLeg = identity_functor(G);
  return s;
}

Span compose_spans(const Span& beta, const Span& alpha) {
  if (alpha.target.get() != beta.source.get() &&
      !alpha.target->same_tables(*beta.source))
    throw EndpointMismatch("spans are not composable");
  auto ic = iso_comma(beta.freeLeg, alpha.faithfulLeg);
  Span s;
  s.source = alpha.source;
  s.target = beta.target;
  s.apex = ic.total;
  s.faithfulLeg = compose_functors(beta.faithfulLeg, ic.toLeft);
  s.freeLeg = compose_functors(alpha.freeLeg, ic.toRight);
  if (!is_faithful(s.faithfulLeg))
    throw InternalCheckFailed("composite span lost faithfulness");
  return s;
}

Span restriction_span(const Homomorphism& phi) {
  Span s;
  auto B = classifying_functor(phi);
  s.apex = B.source;
  s.source = B.target;  // BG for φ: H -> G
  s.target = B.source;  // BH
  s.faithfulLeg = identity_functor(s.apex);
  s.freeLeg = B;
  return s;
}

Span transfer_span(const Homomorphism& inj) {
  if (!is_injective_hom(inj))
    throw NotInjective("transfer spans require an injective homomorphism");
  Span s;
  auto B = classifying_functor(inj);
  s.apex = B.source;
  s.source = B.source;  // BH
  s.target = B.target;  // BG
  s.faithfulLeg = B;
  s.freeLeg = identity_functor(s.apex);
  return s;
}

Biset span_to_biset(const Span& s) { return straighten(s.freeLeg, s.faithfulLeg); }

BisetClass span_to_class(const Span& s) { return decompose(span_to_biset(s)); }

Span span_of_classes(const BisetClass& data, const GroupoidPtr& source,
                     const GroupoidPtr& target) {
  auto skS = skeleton(source);
  auto skT = skeleton(target);
  if (!same_groups(skS.autGroups, data.left) ||
      !same_groups(skT.autGroups, data.right))
    throw InputError("class data does not match the endpoint components");
  std::vector<GroupoidPtr> apexParts;
  std::vector<GroupoidFunctor> faithLegs, freeLegs;
  for (const auto& [tc, mult] : data.classes) {
    const auto& H = skT.autGroups[tc.rightComp];
    auto M = materialize(make_subgroup(H, tc.pair.L));
    // φ aligned with sorted L
    std::vector<int> phiOf(H->order(), -1);
    for (size_t k = 0; k < tc.pair.L.size(); ++k)
      phiOf[tc.pair.L[k]] = tc.pair.phi[k];
    for (int copy = 0; copy < mult; ++copy) {
      auto BL = classifying(M.grp);
      GroupoidFunctor faith;
      faith.source = BL;
      faith.target = target;
      faith.objMap = {skT.repObj[tc.rightComp]};
      faith.morMap.resize(M.grp->order());
      for (int l = 0; l < M.grp->order(); ++l)
        faith.morMap[l] = skT.autMor[tc.rightComp][M.toParent[l]];
      GroupoidFunctor free;
      free.source = BL;
      free.target = source;
      free.objMap = {skS.repObj[tc.leftComp]};
      free.morMap.resize(M.grp->order());
      for (int l = 0; l < M.grp->order(); ++l)
        free.morMap[l] = skS.autMor[tc.leftComp][phiOf[M.toParent[l]]];
      apexParts.push_back(BL);
      faithLegs.push_back(std::move(faith));
      freeLegs.push_back(std::move(free));
    }
  }
  auto cp = coproduct(apexParts);
  Span s;
  s.source = source;
  s.target = target;
  s.apex = cp.total;
  s.faithfulLeg = apexParts.empty() ? GroupoidFunctor{cp.total, target, {}, {}}
                                    : cotuple(cp, faithLegs);
  s.freeLeg = apexParts.empty() ? GroupoidFunctor{cp.total, source, {}, {}}
                                : cotuple(cp, freeLegs);
  validate_span(s);
  return s;
}

int HomBasis::index_of(const TransitiveClass& tc) const {
  const auto it = std::lower_bound(classes.begin(), classes.end(), tc);
  if (it == classes.end() || !(*it == tc)) return -1;
  return static_cast<int>(it - classes.begin());
}

HomBasis hom_basis(const GroupoidPtr& source, const GroupoidPtr& target,
                   long long sizeBound) {
  auto skS = skeleton(source);
  auto skT = skeleton(target);
  HomBasis out;
  out.source = source;
  out.target = target;
  out.sourceComps = skS.autGroups;
  out.targetComps = skT.autGroups;
  out.sizeBound = sizeBound;
  for (size_t i = 0; i < skS.autGroups.size(); ++i)
    for (size_t j = 0; j < skT.autGroups.size(); ++j) {
      const auto& G = skS.autGroups[i];
      const auto& H = skT.autGroups[j];
      std::set<SubHomPair> seen;
      for (const auto& L : subgroups(H).classReps) {
        if (sizeBound >= 0 &&
            static_cast<long long>(G->order()) * H->order() / L.order() > sizeBound)
          continue;
        auto M = materialize(L);
        for (const auto& f : all_homs(M.grp, G)) {
          SubHomPair raw;
          raw.L = L.elements;
          raw.phi.resize(raw.L.size());
          for (size_t k = 0; k < raw.L.size(); ++k)
            raw.phi[k] = f.map[M.toLocal[raw.L[k]]];
          seen.insert(canonical_pair(*G, *H, raw));
        }
      }
      for (const auto& p : seen) {
        TransitiveClass tc;
        tc.leftComp = static_cast<int>(i);
        tc.rightComp = static_cast<int>(j);
        tc.pair = p;
        out.classes.push_back(std::move(tc));
      }
    }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

GroupCompletion group_complete(HomBasis basis) {
  GroupCompletion gc;
  gc.labels.reserve(basis.classes.size());
  for (const auto& tc : basis.classes) gc.labels.push_back(class_label(tc));
  gc.basis = std::move(basis);
  return gc;
}

std::string class_label(const TransitiveClass& tc) {
  std::string s = std::to_string(tc.leftComp) + ":" + std::to_string(tc.rightComp) + ":L[";
  for (size_t i = 0; i < tc.pair.L.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(tc.pair.L[i]);
  }
  s += "]:phi[";
  for (size_t i = 0; i < tc.pair.phi.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(tc.pair.phi[i]);
  }
  s += ']';
  return s;
}

}  // namespace burnside
