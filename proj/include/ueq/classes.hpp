#pragma once

#include <utility>
#include <vector>

#include "ueq/equiv.hpp"

namespace ueq {

namespace detail {
/// Meet-closure of a generator list: fixpoint of pairwise meets with exact
/// dedup. Returns the sorted member list and the number of closure rounds.
std::pair<std::vector<EquivRel>, int> meet_closure(const std::vector<EquivRel>& generators);
}  // namespace detail

/// A nonempty family of equivalence relations on one carrier, closed under
/// binary (hence all finite) meets. Members are materialized eagerly and
/// kept sorted, so membership and equality are exact structural checks.
class UeqClass {
 public:
  static UeqClass generate(Carrier carrier, std::vector<EquivRel> generators);

  const Carrier& carrier() const { return carrier_; }
  int size() const { return carrier_.size; }
  const std::vector<EquivRel>& generators() const { return generators_; }
  const std::vector<EquivRel>& members() const { return members_; }

  bool contains(const EquivRel& u) const;

  /// The finest member (meet of all members); always present by closure.
  const EquivRel& bottom() const { return bottom_; }

  friend bool operator==(const UeqClass& a, const UeqClass& b) {
    return a.carrier_ == b.carrier_ && a.members_ == b.members_;
  }
  friend bool operator!=(const UeqClass& a, const UeqClass& b) { return !(a == b); }

 private:
  UeqClass(Carrier carrier, std::vector<EquivRel> gens, std::vector<EquivRel> members,
           EquivRel bottom)
      : carrier_(carrier),
        generators_(std::move(gens)),
        members_(std::move(members)),
        bottom_(std::move(bottom)) {}

  Carrier carrier_;
  std::vector<EquivRel> generators_;
  std::vector<EquivRel> members_;
  EquivRel bottom_;
};

/// A function into a space, for class induction along one or more maps.
struct MapInto {
  std::vector<int> values;
  UeqClass target;
};

/// Smallest class on the domain making every listed function continuous;
/// generated by the pullbacks of the targets' generators.
UeqClass induced_class(Carrier domain, const std::vector<MapInto>& maps);

/// Relative class on a subset, re-indexed to a fresh carrier 0..|A|-1.
/// inclusion[i] is the original element of position i.
struct RelativeSpace {
  UeqClass cls;
  std::vector<int> inclusion;
};
RelativeSpace relative(const UeqClass& c, const ElemSet& a);

/// Product space: mixed-radix carrier plus the class induced along all
/// projections.
struct ProductSpace {
  UeqClass cls;
  ProductShape shape;
};
ProductSpace product_class(const std::vector<UeqClass>& factors);

bool is_rich(const UeqClass& c);
bool is_separated(const UeqClass& c);

/// Finite cover of the carrier by blocks of one relation.
struct CoverWitness {
  EquivRel relation;
  std::vector<int> centers;
};

/// For each member, the minimal-cardinality center list (one block minimum
/// per block) whose blocks cover the carrier; aligned with members().
std::vector<CoverWitness> totally_bounded_witness(const UeqClass& c);

}  // namespace ueq
