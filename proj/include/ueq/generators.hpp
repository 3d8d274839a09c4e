#pragma once

#include "ueq/pseudometric.hpp"
#include "ueq/rng.hpp"

namespace ueq {

/// Size limits for randomized checks. Exhaustive sub-oracles use the smaller
/// exhaustive_carrier bound.
struct Caps {
  int max_carrier = 6;
  int exhaustive_carrier = 4;
  int max_generators = 4;
  int max_factors = 3;
  int product_size_cap = kProductSizeCap;
};

EquivRel random_relation(Rng& rng, Carrier carrier);
UeqClass random_class(Rng& rng, Carrier carrier, int max_generators);

/// Class with the full relation among its generators.
UeqClass random_rich_class(Rng& rng, Carrier carrier, int max_generators);

/// Class whose bottom is the diagonal (the diagonal is appended as a
/// generator when the random draw alone is not separated).
UeqClass random_separated_class(Rng& rng, Carrier carrier, int max_generators);

std::vector<int> random_function(Rng& rng, int domain, int codomain);
std::vector<int> random_injection(Rng& rng, int domain, int codomain);   // domain <= codomain
std::vector<int> random_surjection(Rng& rng, int domain, int codomain);  // domain >= codomain

/// count distinct values drawn from 0..codomain-1, in random order.
std::vector<int> random_distinct(Rng& rng, int count, int codomain);

ElemSet random_subset(Rng& rng, Carrier carrier, bool nonempty);

/// Nested-partition construction: a chain of coarsenings with increasing
/// positive levels, ending at the full relation. Always transitive.
TransitivePseudoMetric random_transitive_metric(Rng& rng, Carrier carrier);

/// Random small rationals symmetrized and shortest-path closed; a valid
/// pseudo-metric that may or may not be transitive.
PseudoMetric random_pseudometric(Rng& rng, Carrier carrier);

MetricFamily random_family(Rng& rng, Carrier carrier, int max_metrics);

}  // namespace ueq
