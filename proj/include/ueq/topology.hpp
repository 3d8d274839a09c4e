#pragma once

#include <vector>

#include "ueq/classes.hpp"

namespace ueq {

class FiniteTopology;

namespace detail {
FiniteTopology make_topology(Carrier carrier, std::vector<ElemSet> min_nbhds);
}

/// Finite topology represented by the minimal open neighborhood of each
/// point. The full open-set family is derived on demand (every open set is a
/// union of minimal neighborhoods); intended for desk-scale carriers.
class FiniteTopology {
 public:
  /// Validating constructor for externally supplied neighborhood maps:
  /// requires x in N(x) and N(y) subset of N(x) whenever y in N(x).
  static FiniteTopology from_min_nbhds(Carrier carrier, std::vector<ElemSet> min_nbhds);

  const Carrier& carrier() const { return carrier_; }
  int size() const { return carrier_.size; }
  const ElemSet& min_nbhd(int x) const { return nbhd_[static_cast<std::size_t>(x)]; }
  const std::vector<ElemSet>& min_nbhds() const { return nbhd_; }

  /// Materializes the full open-set family (sorted, deterministic).
  /// Recomputed on each call; size can be exponential in the carrier.
  std::vector<ElemSet> opens() const;

 private:
  friend FiniteTopology detail::make_topology(Carrier, std::vector<ElemSet>);
  FiniteTopology(Carrier carrier, std::vector<ElemSet> nbhds);

  Carrier carrier_;
  std::vector<ElemSet> nbhd_;
};

/// Topology induced by a class: the minimal neighborhood of x is the block
/// of x in the finest member.
FiniteTopology induce_topology(const UeqClass& space);

bool is_open(const FiniteTopology& t, const ElemSet& g);

/// Smallest closed superset: { x : N(x) meets s }.
ElemSet closure(const FiniteTopology& t, const ElemSet& s);

/// Evaluates the member-blockwise density condition and the topological one
/// (closure(d) = carrier); asserts they agree and returns the value.
bool is_dense(const UeqClass& space, const ElemSet& d);

/// No clopen set besides the empty set and the carrier; equivalently the
/// bottom relation is full. Both routes are computed and compared.
bool is_connected(const UeqClass& space);

/// Trace topology on a subset, re-indexed to 0..|Y|-1.
struct SubspaceTopology {
  FiniteTopology top;
  std::vector<int> inclusion;
};
SubspaceTopology subspace_topology(const FiniteTopology& t, const ElemSet& y);

/// Product topology on the mixed-radix carrier: the minimal neighborhood of
/// a tuple is the product of the factor minimal neighborhoods.
struct ProductTopologyResult {
  FiniteTopology top;
  ProductShape shape;
};
ProductTopologyResult product_topology(const std::vector<FiniteTopology>& factors);

/// Minimal-neighborhood maps are identical. Sufficient for equality of
/// finite topologies since the minimal open around each point is unique.
bool topologies_equal(const FiniteTopology& a, const FiniteTopology& b);

/// Injective map whose corestriction to the image (with the trace topology)
/// is a homeomorphism.
bool is_topological_embedding(const std::vector<int>& f, const FiniteTopology& source,
                              const FiniteTopology& target);

}  // namespace ueq
