#pragma once

#include <string>

#include "burnside/biset.hpp"
#include "burnside/groupoid.hpp"

namespace burnside {

// A morphism source -> target of the effective Burnside category: a span
// whose leg into the TARGET is faithful. A Mackey functor sends it to a map
// M(source) -> M(target), so restriction spans run BG -> BH for φ: H -> G
// and transfer spans run BH -> BG.
struct Span {
  GroupoidPtr source, target, apex;
  GroupoidFunctor faithfulLeg;  // apex -> target
  GroupoidFunctor freeLeg;      // apex -> source
};

// Endpoint/leg consistency plus faithfulness of the target leg.
void validate_span(const Span& s);

Span identity_span(const GroupoidPtr& G);

// apex = iso_comma(beta.freeLeg, alpha.faithfulLeg), legs by projection.
// The composite faithful leg is checked faithful again (pullback stability
// plus closure under composition).
Span compose_spans(const Span& beta, const Span& alpha);

Span restriction_span(const Homomorphism& phi);  // B(target φ) -> B(source φ)
Span transfer_span(const Homomorphism& inj);     // B(source) -> B(target), injective

Biset span_to_biset(const Span& s);
// Canonical form: decompose the straightened apex. This is the equality test
// for all span comparisons.
BisetClass span_to_class(const Span& s);

// Realizes class data as a span with coproduct-of-classifying apex between
// the given endpoint groupoids (whose skeleton components must match the
// class data).
Span span_of_classes(const BisetClass& data, const GroupoidPtr& source,
                     const GroupoidPtr& target);

// The hom-monoid basis: conjugacy classes of pairs (L <= target component
// group, φ: L -> source component group), complete below the size bound
// (|G_i||H_j|/|L| per transitive piece; bound < 0 means unbounded).
struct HomBasis {
  GroupoidPtr source, target;
  std::vector<GroupPtr> sourceComps, targetComps;
  long long sizeBound = -1;
  std::vector<TransitiveClass> classes;

  int rank() const { return static_cast<int>(classes.size()); }
  // index of a class in the basis, -1 if absent
  int index_of(const TransitiveClass& tc) const;
};

HomBasis hom_basis(const GroupoidPtr& source, const GroupoidPtr& target,
                   long long sizeBound = -1);

// The π₀ group completion of the free hom monoid: the free abelian group on
// the basis. Virtual elements are integer coefficient vectors.
struct GroupCompletion {
  HomBasis basis;
  std::vector<std::string> labels;
  int rank() const { return basis.rank(); }
};
GroupCompletion group_complete(HomBasis basis);

std::string class_label(const TransitiveClass& tc);

}  // namespace burnside
