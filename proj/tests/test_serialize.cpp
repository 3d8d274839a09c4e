#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ueq/generators.hpp"
#include "ueq/serialize.hpp"

using namespace ueq;

namespace {

template <typename T>
T parse_as(const std::string& text, InstanceKind kind) {
  Instance inst = parse_instance(text);
  REQUIRE(inst.kind == kind);
  return std::get<T>(std::move(inst.payload));
}

ErrorKind kind_of_failure(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ErrorKind::Schema;
}

}  // namespace

TEST_CASE("space documents") {
  auto space = parse_as<UeqClass>(
      R"({"kind":"space","carrier":4,"generators":[[[0,1],[2,3]]]})", InstanceKind::Space);
  CHECK(space.size() == 4);
  CHECK(space.generators().size() == 1);
  CHECK(space.members().size() == 1);
  CHECK(space.generators()[0] == EquivRel::from_blocks(Carrier(4), {{0, 1}, {2, 3}}));

  CHECK(kind_of_failure(R"({"kind":"space","carrier":3,"generators":[[[0,1],[1,2]]]})") ==
        ErrorKind::Validation);  // non-partition blocks
  CHECK(kind_of_failure(R"({"kind":"space","carrier":3,"generators":[]})") ==
        ErrorKind::Validation);
  CHECK(kind_of_failure(R"({"kind":"space","carrier":3})") == ErrorKind::Schema);
  CHECK(kind_of_failure(R"({"kind":"space","carrier":0,"generators":[[[0]]]})") ==
        ErrorKind::Validation);
}

TEST_CASE("map documents") {
  const char* text = R"({
    "kind": "map",
    "source": {"carrier": 2, "generators": [[[0], [1]]]},
    "target": {"carrier": 3, "generators": [[[0, 1, 2]]]},
    "values": [2, 0]
  })";
  auto map = parse_as<SpaceMap>(text, InstanceKind::Map);
  CHECK(map.source.size() == 2);
  CHECK(map.target.size() == 3);
  CHECK(map.values == std::vector<int>{2, 0});

  CHECK(kind_of_failure(R"({
    "kind": "map",
    "source": {"carrier": 2, "generators": [[[0], [1]]]},
    "target": {"carrier": 3, "generators": [[[0, 1, 2]]]},
    "values": [3, 0]
  })") == ErrorKind::Validation);  // value out of the target range
}

TEST_CASE("metric documents") {
  auto d = parse_as<PseudoMetric>(
      R"({"kind":"metric","carrier":2,"dist":[["0","1/2"],["1/2","0"]]})", InstanceKind::Metric);
  CHECK(d.at(0, 1) == Rational(1, 2));

  CHECK(kind_of_failure(R"({"kind":"metric","carrier":2,"dist":[["0","1"],["2","0"]]})") ==
        ErrorKind::Validation);  // asymmetric
  CHECK(kind_of_failure(R"({"kind":"metric","carrier":2,"dist":[["0","1/0"],["1/0","0"]]})") ==
        ErrorKind::Validation);
  // Bare integers are accepted.
  CHECK_NOTHROW(parse_instance(R"({"kind":"metric","carrier":2,"dist":[[0,2],[2,0]]})"));
}

TEST_CASE("family documents require transitive members") {
  const char* good = R"({
    "kind": "family",
    "carrier": 2,
    "metrics": [{"dist": [["0", "1"], ["1", "0"]]}]
  })";
  auto fam = parse_as<MetricFamily>(good, InstanceKind::Family);
  CHECK(fam.metrics().size() == 1);

  // The three-point path metric is a pseudo-metric but not transitive.
  CHECK(kind_of_failure(R"({
    "kind": "family",
    "carrier": 3,
    "metrics": [{"dist": [["0","1","2"],["1","0","1"],["2","1","0"]]}]
  })") == ErrorKind::Validation);
}

TEST_CASE("topology documents validate the neighborhood map") {
  auto t = parse_as<FiniteTopology>(
      R"({"kind":"topology","carrier":2,"min_nbhd":[[0],[0,1]]})", InstanceKind::Topology);
  CHECK(t.min_nbhd(1) == ElemSet::of(2, {0, 1}));
  CHECK(kind_of_failure(R"({"kind":"topology","carrier":2,"min_nbhd":[[1],[1]]})") ==
        ErrorKind::Validation);
}

TEST_CASE("subset documents") {
  auto s = parse_as<SubsetInstance>(R"({"kind":"subset","carrier":4,"elements":[0,2]})",
                                    InstanceKind::Subset);
  CHECK(s.elements == ElemSet::of(4, {0, 2}));
  CHECK(kind_of_failure(R"({"kind":"subset","carrier":2,"elements":[5]})") ==
        ErrorKind::Validation);
}

TEST_CASE("top-level schema errors") {
  CHECK(kind_of_failure("not json at all") == ErrorKind::Schema);
  CHECK(kind_of_failure(R"([1,2,3])") == ErrorKind::Schema);
  CHECK(kind_of_failure(R"({"carrier":2})") == ErrorKind::Schema);
  CHECK(kind_of_failure(R"({"kind":"widget"})") == ErrorKind::Schema);
}

TEST_CASE("generated instances survive a serialize/parse round trip") {
  Rng rng(151);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.range(1, 6);

    UeqClass space = random_class(rng, Carrier(n), 4);
    auto space2 = parse_as<UeqClass>(space_to_json(space).dump(), InstanceKind::Space);
    CHECK(space2 == space);

    UeqClass target = random_class(rng, Carrier(rng.range(1, 6)), 3);
    SpaceMap map(space, target, random_function(rng, n, target.size()));
    auto map2 = parse_as<SpaceMap>(map_to_json(map).dump(), InstanceKind::Map);
    CHECK(map2.values == map.values);
    CHECK(map2.source == map.source);
    CHECK(map2.target == map.target);

    PseudoMetric d = random_pseudometric(rng, Carrier(n));
    auto d2 = parse_as<PseudoMetric>(metric_to_json(d).dump(), InstanceKind::Metric);
    CHECK(d2 == d);

    MetricFamily fam = random_family(rng, Carrier(n), 2);
    auto fam2 = parse_as<MetricFamily>(family_to_json(fam).dump(), InstanceKind::Family);
    REQUIRE(fam2.metrics().size() == fam.metrics().size());
    for (std::size_t i = 0; i < fam.metrics().size(); ++i)
      CHECK(fam2.metrics()[i] == fam.metrics()[i]);

    FiniteTopology t = induce_topology(space);
    auto t2 = parse_as<FiniteTopology>(topology_to_json(t).dump(), InstanceKind::Topology);
    CHECK(topologies_equal(t, t2));

    ElemSet subset = random_subset(rng, Carrier(n), false);
    auto s2 = parse_as<SubsetInstance>(subset_to_json(Carrier(n), subset).dump(),
                                       InstanceKind::Subset);
    CHECK(s2.elements == subset);
  }
}
