#pragma once

#include <utility>
#include <vector>

#include "ueq/carrier.hpp"

namespace ueq {

/// Equivalence relation on a carrier in canonical partition form: each
/// element maps to the minimum element of its block, so structural equality
/// coincides with mathematical equality of relations.
class EquivRel {
 public:
  static EquivRel from_blocks(Carrier carrier, const std::vector<std::vector<int>>& blocks);
  static EquivRel from_pairs(Carrier carrier, const std::vector<std::pair<int, int>>& pairs);
  static EquivRel delta(Carrier carrier);
  static EquivRel full(Carrier carrier);

  /// Builds from an id vector that must already be canonical
  /// (id[x] <= x and id[id[x]] == id[x]); validates and throws otherwise.
  static EquivRel from_canonical_ids(Carrier carrier, std::vector<int> ids);

  const Carrier& carrier() const { return carrier_; }
  int size() const { return carrier_.size; }

  int label(int x) const;
  bool related(int x, int y) const;

  const std::vector<int>& block_ids() const { return id_; }

  /// Distinct block labels (block minima), ascending.
  std::vector<int> labels() const;
  int num_blocks() const;
  std::vector<ElemSet> blocks() const;

  /// All related pairs (x, y) with x <= y; test/oracle convenience.
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const EquivRel& a, const EquivRel& b) {
    return a.carrier_ == b.carrier_ && a.id_ == b.id_;
  }
  friend bool operator!=(const EquivRel& a, const EquivRel& b) { return !(a == b); }
  friend bool operator<(const EquivRel& a, const EquivRel& b) {
    if (a.carrier_.size != b.carrier_.size) return a.carrier_.size < b.carrier_.size;
    return a.id_ < b.id_;
  }

 private:
  EquivRel(Carrier carrier, std::vector<int> ids) : carrier_(carrier), id_(std::move(ids)) {}

  Carrier carrier_;
  std::vector<int> id_;
};

/// Intersection of two relations on the same carrier.
EquivRel meet(const EquivRel& a, const EquivRel& b);

/// The block U[x].
ElemSet block_of(const EquivRel& u, int x);

/// U[A]: union of all blocks meeting a.
ElemSet saturate(const EquivRel& u, const ElemSet& a);

/// True iff every a-block is contained in some b-block (a <= b as pair sets).
bool refines(const EquivRel& a, const EquivRel& b);

/// Pullback (f x f)^{-1}(v): x, y related iff f(x), f(y) are v-related.
/// The domain carrier is f.size().
EquivRel preimage_relation(const std::vector<int>& f, const EquivRel& v);

/// Lift of a factor relation to the mixed-radix product carrier: two codes
/// are related iff their factor_index coordinates are u-related.
EquivRel product_lift(int factor_index, const std::vector<Carrier>& factor_carriers,
                      const EquivRel& u);

/// Restriction A x A of u to the listed elements (ascending, distinct),
/// re-indexed to a fresh carrier 0..|A|-1.
EquivRel restrict_relation(const EquivRel& u, const std::vector<int>& elements);

}  // namespace ueq
