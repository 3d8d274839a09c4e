#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "ueq/maps.hpp"
#include "ueq/pseudometric.hpp"
#include "ueq/topology.hpp"

namespace ueq {

using Json = nlohmann::ordered_json;

enum class InstanceKind { Space, Map, Metric, Family, Topology, Subset };

const char* kind_name(InstanceKind kind);

struct SubsetInstance {
  Carrier carrier;
  ElemSet elements;
};

/// One validated document. Every payload passes full semantic validation
/// (partitions must partition, metrics must be symmetric with zero diagonal
/// and the triangle inequality, neighborhood maps must define a topology)
/// before any computation sees it.
struct Instance {
  InstanceKind kind;
  std::variant<UeqClass, SpaceMap, PseudoMetric, MetricFamily, FiniteTopology, SubsetInstance>
      payload;
};

/// Parses a JSON document; SchemaError for structural problems (missing or
/// mistyped fields), ValidationError for semantic ones.
Instance parse_instance(const std::string& text);
Instance parse_instance_json(const Json& doc);

Json relation_to_blocks(const EquivRel& u);
Json space_to_json(const UeqClass& c, bool with_members = false);
Json map_to_json(const SpaceMap& f);
Json metric_to_json(const PseudoMetric& d);
Json family_to_json(const MetricFamily& fam);
Json topology_to_json(const FiniteTopology& t);
Json subset_to_json(Carrier carrier, const ElemSet& elements);

}  // namespace ueq
