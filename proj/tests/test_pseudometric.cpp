#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "ueq/generators.hpp"

using namespace ueq;

namespace {

PseudoMetric metric(int n, const std::vector<std::vector<int>>& ints) {
  std::vector<std::vector<Rational>> dist;
  for (const auto& row : ints) {
    std::vector<Rational> r;
    for (int v : row) r.emplace_back(v);
    dist.push_back(std::move(r));
  }
  return PseudoMetric::from_matrix(Carrier(n), std::move(dist));
}

// Path metric on three points: valid but not transitive.
PseudoMetric path3() { return metric(3, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}); }

EquivRel rel(int n, const std::vector<std::vector<int>>& blocks) {
  return EquivRel::from_blocks(Carrier(n), blocks);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(rational_to_string(Rational(3, 2)) == "3/2");
  CHECK(rational_to_string(Rational(0)) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a/2"), Error);
}

TEST_CASE("pseudo-metric validation") {
  CHECK_NOTHROW(path3());
  CHECK_THROWS_AS(metric(2, {{0, 1}, {2, 0}}), Error);              // asymmetric
  CHECK_THROWS_AS(metric(2, {{1, 0}, {0, 0}}), Error);              // nonzero diagonal
  CHECK_THROWS_AS(metric(2, {{0, -1}, {-1, 0}}), Error);            // negative
  CHECK_THROWS_AS(metric(3, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}), Error);  // triangle fails
  try {
    metric(2, {{0, 1}, {2, 0}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPseudoMetric);
  }
}

TEST_CASE("r-transitivity is a literal triple quantifier") {
  TransitivePseudoMetric d1 = d_alpha(Carrier(3), Rational(1));
  CHECK(is_r_transitive(d1.metric(), Rational(2)));
  CHECK_FALSE(is_r_transitive(path3(), Rational(3, 2)));
  CHECK(is_r_transitive(path3(), Rational(1, 2)));  // below the least distance
  CHECK_THROWS_AS(is_r_transitive(path3(), Rational(0)), Error);
}

TEST_CASE("transitivity: sweep, strong triangle and dense sampling agree") {
  CHECK(is_transitive(d_alpha(Carrier(4), Rational(2)).metric()));
  CHECK_FALSE(is_transitive(path3()));
  CHECK(is_transitive(metric(2, {{0, 0}, {0, 0}})));

  Rng rng(113);
  int transitive_seen = 0, other_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.range(1, 5);
    PseudoMetric d = rng.chance(1, 2) ? random_transitive_metric(rng, Carrier(n)).metric()
                                      : random_pseudometric(rng, Carrier(n));
    bool verdict = is_transitive(d);
    CHECK(verdict == strong_triangle_holds(d));
    CHECK(verdict == transitive_by_threshold_sweep(d));
    CHECK(verdict == oracle::transitive_by_dense_sampling(d));
    (verdict ? transitive_seen : other_seen)++;
  }
  CHECK(transitive_seen > 0);
  CHECK(other_seen > 0);
}

TEST_CASE("d_alpha") {
  TransitivePseudoMetric d = d_alpha(Carrier(2), Rational(1));
  CHECK(d.metric().at(0, 1) == Rational(1));
  CHECK(d.metric().at(0, 0) == Rational(0));
  CHECK(d_alpha(Carrier(1), Rational(7)).size() == 1);
  CHECK(d_alpha(Carrier(3), Rational(2)).metric().at(1, 2) == Rational(2));
  CHECK_THROWS_AS(d_alpha(Carrier(2), Rational(0)), Error);
  CHECK_THROWS_AS(d_alpha(Carrier(2), Rational(-1)), Error);
}

TEST_CASE("ball relations") {
  TransitivePseudoMetric d1 = d_alpha(Carrier(2), Rational(1));
  CHECK(ball_relation(d1, Rational(1, 2)) == EquivRel::delta(Carrier(2)));
  CHECK(ball_relation(d1, Rational(2)) == EquivRel::full(Carrier(2)));
  Rng rng(1);
  TransitivePseudoMetric big = random_transitive_metric(rng, Carrier(4));
  CHECK(ball_relation(big, big.metric().max_distance() + Rational(1)) ==
        EquivRel::full(Carrier(4)));
}

TEST_CASE("balls are nested in the radius") {
  Rng rng(127);
  for (int trial = 0; trial < 200; ++trial) {
    TransitivePseudoMetric d = random_transitive_metric(rng, Carrier(rng.range(1, 5)));
    std::vector<Rational> rs = d.metric().attained_nonzero_distances();
    rs.push_back(d.metric().max_distance() + Rational(1));
    rs.insert(rs.begin(), Rational(1, 7));
    for (std::size_t i = 0; i + 1 < rs.size(); ++i)
      CHECK(refines(ball_relation(d, rs[i]), ball_relation(d, rs[i + 1])));
  }
}

TEST_CASE("class of one metric sweeps the attained thresholds") {
  UeqClass c1 = class_from_metric(d_alpha(Carrier(3), Rational(1)));
  CHECK(c1.members() ==
        std::vector<EquivRel>{EquivRel::full(Carrier(3)), EquivRel::delta(Carrier(3))});

  UeqClass zero = class_from_metric(
      TransitivePseudoMetric(metric(3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})));
  CHECK(zero.members() == std::vector<EquivRel>{EquivRel::full(Carrier(3))});

  // Ultrametric with clusters {0,1} and {2,3} at distance 1, joined at 2.
  TransitivePseudoMetric ultra(
      metric(4, {{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}}));
  UeqClass c = class_from_metric(ultra);
  CHECK(c.members().size() == 3);
  CHECK(c.contains(EquivRel::delta(Carrier(4))));
  CHECK(c.contains(rel(4, {{0, 1}, {2, 3}})));
  CHECK(c.contains(EquivRel::full(Carrier(4))));
}

TEST_CASE("class of a family joins all ball relations") {
  TransitivePseudoMetric a(metric(4, {{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}}));
  TransitivePseudoMetric b(metric(4, {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}}));
  MetricFamily fam(Carrier(4), {a, b});
  UeqClass joined = class_from_family(fam);
  // The two splittings plus their meet (the diagonal) plus the full relation.
  CHECK(joined.members().size() == 4);
  CHECK(joined.contains(EquivRel::delta(Carrier(4))));
  CHECK(is_separated(joined));

  MetricFamily single(Carrier(4), {a});
  CHECK(class_from_family(single) == class_from_metric(a));
  MetricFamily twice(Carrier(4), {a, a});
  CHECK(class_from_family(twice) == class_from_metric(a));
}

TEST_CASE("family topologies: sub-base route equals class route") {
  MetricFamily d1(Carrier(3), {d_alpha(Carrier(3), Rational(1))});
  FiniteTopology t = topology_from_family(d1);
  CHECK(t.opens().size() == 8);  // radius-1 balls are singletons

  MetricFamily zero(Carrier(3),
                    {TransitivePseudoMetric(metric(3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}))});
  CHECK(topology_from_family(zero).opens().size() == 2);

  // Zero distance inside each cluster: minimal balls are the clusters, so
  // the opens are exactly the unions of clusters.
  TransitivePseudoMetric clustered(
      metric(4, {{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}}));
  FiniteTopology tu = topology_from_family(MetricFamily(Carrier(4), {clustered}));
  CHECK(is_open(tu, ElemSet::of(4, {0, 1})));
  CHECK(is_open(tu, ElemSet::of(4, {2, 3})));
  CHECK_FALSE(is_open(tu, ElemSet::of(4, {0})));
  CHECK(tu.opens().size() == 4);

  // With distance 1 inside the clusters instead, the half-radius ball is the
  // diagonal and the topology is discrete.
  TransitivePseudoMetric spread(
      metric(4, {{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}}));
  CHECK(topology_from_family(MetricFamily(Carrier(4), {spread})).opens().size() == 16);

  Rng rng(131);
  for (int trial = 0; trial < 150; ++trial) {
    MetricFamily fam = random_family(rng, Carrier(rng.range(1, 5)), 2);
    CHECK(topologies_equal(subbase_topology_from_family(fam),
                           induce_topology(class_from_family(fam))));
  }
}

TEST_CASE("sub-base route equals class route, exhaustively on a value grid") {
  // Every transitive metric with distances in {0,1,2} on carriers up to 4,
  // in families of one and two members.
  for (int n = 2; n <= 4; ++n) {
    std::vector<TransitivePseudoMetric> all;
    int entries = n * (n - 1) / 2;
    std::vector<int> value(static_cast<std::size_t>(entries), 0);
    for (;;) {
      std::vector<std::vector<Rational>> dist(
          static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      int idx = 0;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
              Rational(value[static_cast<std::size_t>(idx)]);
          dist[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] =
              Rational(value[static_cast<std::size_t>(idx)]);
          ++idx;
        }
      try {
        all.emplace_back(PseudoMetric::from_matrix(Carrier(n), dist));
      } catch (const Error&) {
        // not a pseudo-metric or not transitive; outside the quantifier
      }
      int j = entries - 1;
      while (j >= 0 && value[static_cast<std::size_t>(j)] == 2) --j;
      if (j < 0) break;
      ++value[static_cast<std::size_t>(j)];
      for (int l = j + 1; l < entries; ++l) value[static_cast<std::size_t>(l)] = 0;
    }
    CHECK(!all.empty());
    auto agree = [](const MetricFamily& fam) {
      return topologies_equal(subbase_topology_from_family(fam),
                              induce_topology(class_from_family(fam)));
    };
    for (const TransitivePseudoMetric& a : all)
      CHECK(agree(MetricFamily(Carrier(n), {a})));
    if (n <= 3)
      for (const TransitivePseudoMetric& a : all)
        for (const TransitivePseudoMetric& b : all)
          CHECK(agree(MetricFamily(Carrier(n), {a, b})));
  }
}

TEST_CASE("metrics_from_class and the round trip") {
  UeqClass indiscrete = UeqClass::generate(Carrier(3), {EquivRel::full(Carrier(3))});
  MetricFamily zero_fam = metrics_from_class(indiscrete);
  REQUIRE(zero_fam.metrics().size() == 1);
  CHECK(zero_fam.metrics()[0].metric().max_distance() == Rational(0));
  CHECK(class_from_family(zero_fam) == indiscrete);

  // The diagonal member turns into the two-valued metric at distance 1.
  UeqClass discrete3 = UeqClass::generate(Carrier(3), {EquivRel::delta(Carrier(3))});
  MetricFamily delta_fam = metrics_from_class(discrete3);
  REQUIRE(delta_fam.metrics().size() == 1);
  CHECK(delta_fam.metrics()[0] == d_alpha(Carrier(3), Rational(1)));

  // Rich classes round-trip exactly.
  Rng rng(137);
  for (int trial = 0; trial < 150; ++trial) {
    UeqClass c = random_rich_class(rng, Carrier(rng.range(1, 4)), 3);
    CHECK(class_from_family(metrics_from_class(c)) == c);
  }

  // Every ball class contains the full relation (any radius beyond the
  // maximum distance produces it), so a non-rich class comes back as its
  // rich closure, never as itself.
  UeqClass sep = UeqClass::generate(Carrier(3), {EquivRel::delta(Carrier(3))});
  UeqClass back = class_from_family(metrics_from_class(sep));
  std::vector<EquivRel> gens = sep.generators();
  gens.push_back(EquivRel::full(Carrier(3)));
  CHECK(back == UeqClass::generate(Carrier(3), gens));
  Rng rng2(139);
  for (int trial = 0; trial < 150; ++trial) {
    UeqClass c = random_class(rng2, Carrier(rng2.range(1, 4)), 3);
    std::vector<EquivRel> g = c.generators();
    g.push_back(EquivRel::full(c.carrier()));
    CHECK(class_from_family(metrics_from_class(c)) == UeqClass::generate(c.carrier(), g));
  }
}

TEST_CASE("evaluation embedding") {
  MetricFamily single(Carrier(3), {d_alpha(Carrier(3), Rational(1))});
  EvaluationEmbedding one = evaluation_embedding(single);
  CHECK(one.map.values == std::vector<int>{0, 1, 2});
  CHECK(is_u_embedding(one.map));

  MetricFamily two(Carrier(2), {d_alpha(Carrier(2), Rational(1)),
                                TransitivePseudoMetric(metric(2, {{0, 0}, {0, 0}}))});
  EvaluationEmbedding ev = evaluation_embedding(two);
  CHECK(ev.map.target.size() == 4);
  CHECK(ev.map.values == std::vector<int>{0, 3});  // x -> (x, x)
  CHECK(is_u_embedding(ev.map));

  Rng rng(149);
  for (int trial = 0; trial < 100; ++trial) {
    MetricFamily fam = random_family(rng, Carrier(rng.range(1, 4)), 2);
    CHECK(is_u_embedding(evaluation_embedding(fam).map));
  }
}

TEST_CASE("evaluation embedding rejects oversized products") {
  // A 6-member chain on 6 points: one metric per member gives 6^6 product
  // points, well over the size cap.
  UeqClass chain = UeqClass::generate(
      Carrier(6), {EquivRel::delta(Carrier(6)), rel(6, {{0, 1}, {2}, {3}, {4}, {5}}),
                   rel(6, {{0, 1}, {2, 3}, {4}, {5}}), rel(6, {{0, 1}, {2, 3}, {4, 5}}),
                   rel(6, {{0, 1, 2, 3}, {4, 5}}), EquivRel::full(Carrier(6))});
  MetricFamily fam = metrics_from_class(chain);
  REQUIRE(fam.metrics().size() == 6);
  CHECK_THROWS_AS(evaluation_embedding(fam), Error);
}

TEST_CASE("uniformisability against a class") {
  UeqClass c = UeqClass::generate(Carrier(4), {rel(4, {{0, 1}, {2, 3}})});
  CHECK(is_equivalently_uniformisable_via(induce_topology(c), c));
  FiniteTopology disc = induce_topology(UeqClass::generate(Carrier(2), {EquivRel::delta(Carrier(2))}));
  CHECK(is_equivalently_uniformisable_via(disc, UeqClass::generate(Carrier(2), {EquivRel::delta(Carrier(2))})));

  // Sierpinski-style topology: {}, {0}, {0,1}. No class induces it; class
  // topologies have clopen minimal neighborhoods.
  FiniteTopology sierpinski = FiniteTopology::from_min_nbhds(
      Carrier(2), {ElemSet::of(2, {0}), ElemSet::of(2, {0, 1})});
  for (const UeqClass& cls2 : oracle::all_classes(2, 2))
    CHECK_FALSE(is_equivalently_uniformisable_via(sierpinski, cls2));
  CHECK_THROWS_AS(
      is_equivalently_uniformisable_via(sierpinski, UeqClass::generate(Carrier(3), {EquivRel::delta(Carrier(3))})),
      Error);
}

TEST_CASE("transitive metric construction throws on a non-transitive matrix") {
  CHECK_THROWS_AS(TransitivePseudoMetric{path3()}, Error);
  try {
    TransitivePseudoMetric bad{path3()};
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTransitive);
  }
}
