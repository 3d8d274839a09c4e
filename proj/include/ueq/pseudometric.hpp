#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ueq/maps.hpp"
#include "ueq/topology.hpp"

namespace ueq {

/// Distances are exact rationals; strict comparisons against thresholds are
/// then exact, which r-transitivity depends on.
using Rational = boost::rational<std::int64_t>;

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& r);

/// Symmetric nonnegative matrix with zero diagonal satisfying the triangle
/// inequality; not necessarily transitive.
class PseudoMetric {
 public:
  static PseudoMetric from_matrix(Carrier carrier, std::vector<std::vector<Rational>> dist);

  const Carrier& carrier() const { return carrier_; }
  int size() const { return carrier_.size; }
  const Rational& at(int x, int y) const {
    return dist_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  const std::vector<std::vector<Rational>>& matrix() const { return dist_; }

  /// Distinct nonzero attained distances, ascending.
  std::vector<Rational> attained_nonzero_distances() const;
  Rational max_distance() const;

  friend bool operator==(const PseudoMetric& a, const PseudoMetric& b) {
    return a.carrier_ == b.carrier_ && a.dist_ == b.dist_;
  }

 private:
  PseudoMetric(Carrier carrier, std::vector<std::vector<Rational>> dist);

  Carrier carrier_;
  std::vector<std::vector<Rational>> dist_;
};

/// d(x,y) < r and d(y,z) < r imply d(x,z) < r, for all triples.
bool is_r_transitive(const PseudoMetric& d, const Rational& r);

/// The two routes behind is_transitive, exposed for the harness. A violation
/// of r-transitivity occurs only for r in (max(d(x,y),d(y,z)), d(x,z)], so
/// sweeping r over the attained nonzero distances decides all r > 0.
bool transitive_by_threshold_sweep(const PseudoMetric& d);
bool strong_triangle_holds(const PseudoMetric& d);

/// r-transitive for every r > 0; computes both routes above and asserts
/// they agree.
bool is_transitive(const PseudoMetric& d);

/// Pseudo-metric whose every ball relation is an equivalence relation.
class TransitivePseudoMetric {
 public:
  explicit TransitivePseudoMetric(PseudoMetric d);

  const PseudoMetric& metric() const { return d_; }
  const Carrier& carrier() const { return d_.carrier(); }
  int size() const { return d_.size(); }

  friend bool operator==(const TransitivePseudoMetric& a, const TransitivePseudoMetric& b) {
    return a.d_ == b.d_;
  }

 private:
  PseudoMetric d_;
};

/// Two-valued metric: alpha off the diagonal, zero on it.
TransitivePseudoMetric d_alpha(Carrier carrier, const Rational& alpha);

/// Strict ball relation { (x,y) : d(x,y) < r } as a canonical partition.
EquivRel ball_relation(const TransitivePseudoMetric& d, const Rational& r);

/// All distinct ball relations of one metric; balls change only at attained
/// distances, so sweeping those thresholds (plus one value past the maximum)
/// enumerates them all. Nested, hence already meet-closed.
UeqClass class_from_metric(const TransitivePseudoMetric& d);

class MetricFamily {
 public:
  MetricFamily(Carrier carrier, std::vector<TransitivePseudoMetric> metrics);

  const Carrier& carrier() const { return carrier_; }
  int size() const { return carrier_.size; }
  const std::vector<TransitivePseudoMetric>& metrics() const { return metrics_; }

 private:
  Carrier carrier_;
  std::vector<TransitivePseudoMetric> metrics_;
};

/// Class generated by all ball relations of all family members.
UeqClass class_from_family(const MetricFamily& fam);

/// Topology generated by the point balls as a sub-base.
FiniteTopology subbase_topology_from_family(const MetricFamily& fam);

/// Computes the sub-base topology and the class-induced one, asserts they
/// agree, and returns the result.
FiniteTopology topology_from_family(const MetricFamily& fam);

/// One two-valued metric per member: distance 0 inside a block, 1 across.
/// class_from_family of the result reproduces the class.
MetricFamily metrics_from_class(const UeqClass& c);

/// The evaluation map x -> (x, x, ..., x) from (X, U_fam) into the product
/// of the per-metric spaces, together with the product structure.
struct EvaluationEmbedding {
  SpaceMap map;
  ProductShape shape;
  std::vector<UeqClass> factor_classes;
};
EvaluationEmbedding evaluation_embedding(const MetricFamily& fam);

/// The topology is exactly the one induced by the class.
bool is_equivalently_uniformisable_via(const FiniteTopology& t, const UeqClass& c);

}  // namespace ueq
