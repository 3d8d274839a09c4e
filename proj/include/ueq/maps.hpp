#pragma once

#include <vector>

#include "ueq/classes.hpp"

namespace ueq {

/// Total function between two spaces, carrying both classes.
struct SpaceMap {
  UeqClass source;
  UeqClass target;
  std::vector<int> values;

  SpaceMap(UeqClass src, UeqClass tgt, std::vector<int> vals);

  int apply(int x) const { return values[static_cast<std::size_t>(x)]; }
  bool is_injective() const;
  bool is_surjective() const;
  ElemSet image() const;
};

std::vector<int> compose_values(const std::vector<int>& inner, const std::vector<int>& outer);

/// Pullback of every target member lands in the source class.
bool is_continuous(const SpaceMap& f);

/// For each source member U there is a target member V with
/// V[f(x)] contained in f(U[x]) for all x.
bool is_open_map(const SpaceMap& f);

/// For each y and target member V some x has y in V[f(x)].
bool is_u_surjection(const SpaceMap& f);

/// Bijection, continuous both ways.
bool is_u_equivalence(const SpaceMap& f);

/// The two equivalent readings of an embedding; is_u_embedding evaluates
/// both and throws CharacterizationMismatch if they ever disagree (which
/// would be an implementation bug, not a property of the input).
bool embedding_definitional(const SpaceMap& f);
bool embedding_characterization(const SpaceMap& f);
bool is_u_embedding(const SpaceMap& f);

/// Requires g o f = id, both continuous; returns is_u_embedding(f).
bool left_inverse_embedding_check(const SpaceMap& f, const SpaceMap& g);

/// Some source member meets ker(phi) exactly in the diagonal. The target
/// class is ignored; only the target carrier matters.
bool is_transverse(const SpaceMap& phi);

/// Points where the two maps agree.
ElemSet coincidence_set(const SpaceMap& alpha, const SpaceMap& beta);

/// The three forms of subset openness. The inclusion form is the defining
/// one; the other two are exposed for the verification harness.
bool subset_open_by_inclusion(const UeqClass& space, const ElemSet& a);
bool subset_open_by_refinement(const UeqClass& space, const ElemSet& a);
bool subset_open_by_inner_relation(const UeqClass& space, const ElemSet& a);

/// Inclusion-map openness; when the class is rich the inner-relation form is
/// evaluated as well and agreement is asserted.
bool is_u_open_subset(const UeqClass& space, const ElemSet& a);

}  // namespace ueq
