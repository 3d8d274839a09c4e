#include "ueq/generators.hpp"

#include <algorithm>
#include <numeric>

namespace ueq {

EquivRel random_relation(Rng& rng, Carrier carrier) {
  // Each element either starts a block or joins the block of an earlier
  // element; ids stay canonical (block minima) by induction.
  std::vector<int> ids(static_cast<std::size_t>(carrier.size));
  for (int x = 0; x < carrier.size; ++x) {
    int attach = rng.range(0, x);
    ids[static_cast<std::size_t>(x)] = (attach == x) ? x : ids[static_cast<std::size_t>(attach)];
  }
  return EquivRel::from_canonical_ids(carrier, std::move(ids));
}

UeqClass random_class(Rng& rng, Carrier carrier, int max_generators) {
  int g = rng.range(1, std::max(1, max_generators));
  std::vector<EquivRel> gens;
  gens.reserve(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) gens.push_back(random_relation(rng, carrier));
  return UeqClass::generate(carrier, std::move(gens));
}

UeqClass random_rich_class(Rng& rng, Carrier carrier, int max_generators) {
  UeqClass base = random_class(rng, carrier, std::max(1, max_generators - 1));
  std::vector<EquivRel> gens = base.generators();
  gens.push_back(EquivRel::full(carrier));
  return UeqClass::generate(carrier, std::move(gens));
}

UeqClass random_separated_class(Rng& rng, Carrier carrier, int max_generators) {
  UeqClass base = random_class(rng, carrier, max_generators);
  if (is_separated(base)) return base;
  std::vector<EquivRel> gens = base.generators();
  gens.push_back(EquivRel::delta(carrier));
  return UeqClass::generate(carrier, std::move(gens));
}

std::vector<int> random_function(Rng& rng, int domain, int codomain) {
  std::vector<int> values(static_cast<std::size_t>(domain));
  for (int& v : values) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(codomain)));
  return values;
}

std::vector<int> random_distinct(Rng& rng, int count, int codomain) {
  std::vector<int> pool(static_cast<std::size_t>(codomain));
  std::iota(pool.begin(), pool.end(), 0);
  // Partial Fisher-Yates driven by the portable generator.
  for (int i = 0; i < count; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(codomain - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

std::vector<int> random_injection(Rng& rng, int domain, int codomain) {
  require(domain <= codomain, ErrorKind::Validation, "injection needs domain <= codomain");
  return random_distinct(rng, domain, codomain);
}

std::vector<int> random_surjection(Rng& rng, int domain, int codomain) {
  require(domain >= codomain, ErrorKind::Validation, "surjection needs domain >= codomain");
  std::vector<int> values = random_function(rng, domain, codomain);
  std::vector<int> positions = random_distinct(rng, codomain, domain);
  for (int y = 0; y < codomain; ++y) values[static_cast<std::size_t>(positions[static_cast<std::size_t>(y)])] = y;
  return values;
}

ElemSet random_subset(Rng& rng, Carrier carrier, bool nonempty) {
  ElemSet s(carrier.size);
  for (int x = 0; x < carrier.size; ++x)
    if (rng.chance(1, 2)) s.set(x);
  if (nonempty && s.empty()) s.set(rng.range(0, carrier.size - 1));
  return s;
}

TransitivePseudoMetric random_transitive_metric(Rng& rng, Carrier carrier) {
  const int n = carrier.size;
  // Chain of coarsenings; level[x][y] = first chain index where x and y are
  // related, mapped to an increasing sequence of positive rationals.
  std::vector<EquivRel> chain;
  chain.push_back(random_relation(rng, carrier));
  int extra = rng.range(0, 2);
  for (int i = 0; i < extra; ++i) {
    // Coarsen the previous partition by merging along a random relation.
    std::vector<std::pair<int, int>> merges;
    const EquivRel& prev = chain.back();
    std::vector<int> labels = prev.labels();
    for (std::size_t j = 1; j < labels.size(); ++j)
      if (rng.chance(1, 2)) merges.emplace_back(labels[j - 1], labels[j]);
    std::vector<std::pair<int, int>> pairs = prev.pairs();
    pairs.insert(pairs.end(), merges.begin(), merges.end());
    chain.push_back(EquivRel::from_pairs(carrier, pairs));
  }
  chain.push_back(EquivRel::full(carrier));

  std::vector<Rational> levels;
  Rational level(0);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    level += Rational(rng.range(1, 4), rng.range(1, 3));
    levels.push_back(level);
  }

  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Rational d(0);
      if (!chain.front().related(x, y)) {
        for (std::size_t i = 1; i < chain.size(); ++i)
          if (chain[i].related(x, y)) {
            d = levels[i];
            break;
          }
      }
      dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = d;
      dist[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = d;
    }
  return TransitivePseudoMetric(PseudoMetric::from_matrix(carrier, std::move(dist)));
}

PseudoMetric random_pseudometric(Rng& rng, Carrier carrier) {
  const int n = carrier.size;
  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Rational d(rng.range(1, 6), rng.range(1, 2));
      dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = d;
      dist[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = d;
    }
  // Shortest-path closure restores the triangle inequality.
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
            std::min(dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)],
                     dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] +
                         dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)]);
  return PseudoMetric::from_matrix(carrier, std::move(dist));
}

MetricFamily random_family(Rng& rng, Carrier carrier, int max_metrics) {
  int k = rng.range(1, std::max(1, max_metrics));
  std::vector<TransitivePseudoMetric> metrics;
  metrics.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) metrics.push_back(random_transitive_metric(rng, carrier));
  return MetricFamily(carrier, std::move(metrics));
}

}  // namespace ueq
