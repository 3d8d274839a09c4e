#include "ueq/pseudometric.hpp"

#include <algorithm>
#include <charconv>

namespace ueq {

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size(), ErrorKind::Validation,
            "bad rational component: '" + std::string(s) + "'");
    return v;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  require(den > 0, ErrorKind::Validation, "rational denominator must be positive");
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

PseudoMetric::PseudoMetric(Carrier carrier, std::vector<std::vector<Rational>> dist)
    : carrier_(carrier), dist_(std::move(dist)) {}

PseudoMetric PseudoMetric::from_matrix(Carrier carrier, std::vector<std::vector<Rational>> dist) {
  const int n = carrier.size;
  require(static_cast<int>(dist.size()) == n, ErrorKind::NotAPseudoMetric,
          "distance matrix must be square of carrier size");
  for (const auto& row : dist)
    require(static_cast<int>(row.size()) == n, ErrorKind::NotAPseudoMetric,
            "distance matrix must be square of carrier size");
  for (int x = 0; x < n; ++x) {
    require(dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] == Rational(0),
            ErrorKind::NotAPseudoMetric, "diagonal must be zero at " + std::to_string(x));
    for (int y = 0; y < n; ++y) {
      const Rational& d = dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      require(d >= Rational(0), ErrorKind::NotAPseudoMetric,
              "negative distance at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      require(d == dist[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)],
              ErrorKind::NotAPseudoMetric,
              "asymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        require(dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] <=
                    dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +
                        dist[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)],
                ErrorKind::NotAPseudoMetric,
                "triangle inequality fails at (" + std::to_string(x) + "," + std::to_string(y) +
                    "," + std::to_string(z) + ")");
  return PseudoMetric(carrier, std::move(dist));
}

std::vector<Rational> PseudoMetric::attained_nonzero_distances() const {
  std::vector<Rational> out;
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (at(x, y) > Rational(0)) out.push_back(at(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational PseudoMetric::max_distance() const {
  Rational mx(0);
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y) mx = std::max(mx, at(x, y));
  return mx;
}

bool is_r_transitive(const PseudoMetric& d, const Rational& r) {
  require(r > Rational(0), ErrorKind::Validation, "radius must be positive");
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!(d.at(x, y) < r)) continue;
      for (int z = 0; z < n; ++z)
        if (d.at(y, z) < r && !(d.at(x, z) < r)) return false;
    }
  return true;
}

bool transitive_by_threshold_sweep(const PseudoMetric& d) {
  for (const Rational& r : d.attained_nonzero_distances())
    if (!is_r_transitive(d, r)) return false;
  return true;
}

bool strong_triangle_holds(const PseudoMetric& d) {
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (d.at(x, z) > std::max(d.at(x, y), d.at(y, z))) return false;
  return true;
}

bool is_transitive(const PseudoMetric& d) {
  bool swept = transitive_by_threshold_sweep(d);
  bool ultra = strong_triangle_holds(d);
  require(swept == ultra, ErrorKind::CharacterizationMismatch,
          "transitivity characterizations disagree");
  return swept;
}

TransitivePseudoMetric::TransitivePseudoMetric(PseudoMetric d) : d_(std::move(d)) {
  require(is_transitive(d_), ErrorKind::NotTransitive, "pseudo-metric is not transitive");
}

TransitivePseudoMetric d_alpha(Carrier carrier, const Rational& alpha) {
  require(alpha > Rational(0), ErrorKind::NonPositiveAlpha, "alpha must be positive");
  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(carrier.size),
                                          std::vector<Rational>(static_cast<std::size_t>(carrier.size), alpha));
  for (int x = 0; x < carrier.size; ++x)
    dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = Rational(0);
  return TransitivePseudoMetric(PseudoMetric::from_matrix(carrier, std::move(dist)));
}

EquivRel ball_relation(const TransitivePseudoMetric& d, const Rational& r) {
  require(r > Rational(0), ErrorKind::Validation, "radius must be positive");
  const int n = d.size();
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    // Transitivity makes the ball an equivalence relation, so the first
    // related element is the block minimum.
    for (int y = 0; y <= x; ++y)
      if (d.metric().at(y, x) < r) {
        ids[static_cast<std::size_t>(x)] = y;
        break;
      }
  return EquivRel::from_canonical_ids(d.carrier(), std::move(ids));
}

namespace {

std::vector<Rational> ball_thresholds(const TransitivePseudoMetric& d) {
  std::vector<Rational> rs = d.metric().attained_nonzero_distances();
  rs.push_back(d.metric().max_distance() + Rational(1));
  return rs;
}

}  // namespace

UeqClass class_from_metric(const TransitivePseudoMetric& d) {
  std::vector<EquivRel> balls;
  for (const Rational& r : ball_thresholds(d)) balls.push_back(ball_relation(d, r));
  std::sort(balls.begin(), balls.end());
  balls.erase(std::unique(balls.begin(), balls.end()), balls.end());
  return UeqClass::generate(d.carrier(), std::move(balls));
}

MetricFamily::MetricFamily(Carrier carrier, std::vector<TransitivePseudoMetric> metrics)
    : carrier_(carrier), metrics_(std::move(metrics)) {
  require(!metrics_.empty(), ErrorKind::EmptyFamily, "family needs at least one metric");
  for (const TransitivePseudoMetric& m : metrics_)
    require(m.carrier() == carrier_, ErrorKind::CarrierMismatch,
            "all family metrics must share the carrier");
}

UeqClass class_from_family(const MetricFamily& fam) {
  std::vector<EquivRel> balls;
  for (const TransitivePseudoMetric& d : fam.metrics())
    for (const Rational& r : ball_thresholds(d)) balls.push_back(ball_relation(d, r));
  std::sort(balls.begin(), balls.end());
  balls.erase(std::unique(balls.begin(), balls.end()), balls.end());
  return UeqClass::generate(fam.carrier(), std::move(balls));
}

FiniteTopology subbase_topology_from_family(const MetricFamily& fam) {
  const int n = fam.size();
  // Distinct point balls B_d(x, r); r swept over the ball thresholds.
  std::vector<ElemSet> subbase;
  for (const TransitivePseudoMetric& d : fam.metrics())
    for (const Rational& r : ball_thresholds(d))
      for (int x = 0; x < n; ++x) {
        ElemSet ball(n);
        for (int y = 0; y < n; ++y)
          if (d.metric().at(x, y) < r) ball.set(y);
        subbase.push_back(std::move(ball));
      }
  // Minimal open around x is the intersection of all sub-basic sets
  // containing x (the sub-base family is finite).
  std::vector<ElemSet> nbhds(static_cast<std::size_t>(n), ElemSet::full_set(n));
  for (const ElemSet& s : subbase)
    for (int x = 0; x < n; ++x)
      if (s.test(x)) nbhds[static_cast<std::size_t>(x)] &= s;
  return FiniteTopology::from_min_nbhds(fam.carrier(), std::move(nbhds));
}

FiniteTopology topology_from_family(const MetricFamily& fam) {
  FiniteTopology by_subbase = subbase_topology_from_family(fam);
  FiniteTopology by_class = induce_topology(class_from_family(fam));
  require(topologies_equal(by_subbase, by_class), ErrorKind::CharacterizationMismatch,
          "sub-base and class-induced topologies disagree");
  return by_class;
}

MetricFamily metrics_from_class(const UeqClass& c) {
  std::vector<TransitivePseudoMetric> metrics;
  metrics.reserve(c.members().size());
  for (const EquivRel& u : c.members()) {
    std::vector<std::vector<Rational>> dist(
        static_cast<std::size_t>(c.size()),
        std::vector<Rational>(static_cast<std::size_t>(c.size()), Rational(0)));
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y)
        if (!u.related(x, y)) dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = Rational(1);
    metrics.emplace_back(PseudoMetric::from_matrix(c.carrier(), std::move(dist)));
  }
  return MetricFamily(c.carrier(), std::move(metrics));
}

EvaluationEmbedding evaluation_embedding(const MetricFamily& fam) {
  std::vector<UeqClass> factor_classes;
  factor_classes.reserve(fam.metrics().size());
  for (const TransitivePseudoMetric& d : fam.metrics()) factor_classes.push_back(class_from_metric(d));
  ProductSpace prod = product_class(factor_classes);
  UeqClass source = class_from_family(fam);
  std::vector<int> values(static_cast<std::size_t>(fam.size()));
  std::vector<int> tuple(fam.metrics().size());
  for (int x = 0; x < fam.size(); ++x) {
    std::fill(tuple.begin(), tuple.end(), x);
    values[static_cast<std::size_t>(x)] = prod.shape.encode(tuple);
  }
  return EvaluationEmbedding{SpaceMap(std::move(source), prod.cls, std::move(values)), prod.shape,
                             std::move(factor_classes)};
}

bool is_equivalently_uniformisable_via(const FiniteTopology& t, const UeqClass& c) {
  require(t.carrier() == c.carrier(), ErrorKind::CarrierMismatch,
          "topology and class must share the carrier");
  return topologies_equal(t, induce_topology(c));
}

}  // namespace ueq
