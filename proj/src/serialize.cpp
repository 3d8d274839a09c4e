#include "ueq/serialize.hpp"

namespace ueq {

// Document formats, one JSON object per entity:
//   space:    {"kind":"space","carrier":N,"generators":[[[0,1],[2,3]],...]}
//   map:      {"kind":"map","source":<space>,"target":<space>,"values":[...]}
//   metric:   {"kind":"metric","carrier":N,"dist":[["0/1","1/2",...],...]}
//   family:   {"kind":"family","carrier":N,"metrics":[<metric>,...]}
//   topology: {"kind":"topology","carrier":N,"min_nbhd":[[0,1],[1],...]}
//   subset:   {"kind":"subset","carrier":N,"elements":[0,2]}
// Partitions are written as block lists for readability and canonicalized on
// load. Distances are rational strings "p/q" (bare integers also accepted).

const char* kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Space: return "space";
    case InstanceKind::Map: return "map";
    case InstanceKind::Metric: return "metric";
    case InstanceKind::Family: return "family";
    case InstanceKind::Topology: return "topology";
    case InstanceKind::Subset: return "subset";
  }
  return "?";
}

namespace {

const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  require(it != doc.end(), ErrorKind::Schema, std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const Json& doc, const char* name) {
  const Json& v = field(doc, name);
  require(v.is_number_integer(), ErrorKind::Schema,
          std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

Carrier carrier_field(const Json& doc) {
  int n = int_field(doc, "carrier");
  require(n >= 1, ErrorKind::Validation, "carrier must be >= 1");
  return Carrier(n);
}

std::vector<int> int_array(const Json& v, const char* what) {
  require(v.is_array(), ErrorKind::Schema, std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const Json& e : v) {
    require(e.is_number_integer(), ErrorKind::Schema,
            std::string(what) + " must contain integers");
    out.push_back(e.get<int>());
  }
  return out;
}

EquivRel relation_from_blocks(Carrier carrier, const Json& blocks, const std::string& where) {
  require(blocks.is_array(), ErrorKind::Schema, where + " must be an array of blocks");
  std::vector<std::vector<int>> bs;
  bs.reserve(blocks.size());
  for (const Json& b : blocks) bs.push_back(int_array(b, (where + " block").c_str()));
  try {
    return EquivRel::from_blocks(carrier, bs);
  } catch (const Error& e) {
    fail(ErrorKind::Validation, where + ": " + e.what());
  }
}

UeqClass space_from_json(const Json& doc) {
  require(doc.is_object(), ErrorKind::Schema, "space must be an object");
  Carrier carrier = carrier_field(doc);
  const Json& gens = field(doc, "generators");
  require(gens.is_array(), ErrorKind::Schema, "generators must be an array");
  require(!gens.empty(), ErrorKind::Validation, "space needs at least one generator");
  std::vector<EquivRel> rels;
  rels.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    rels.push_back(relation_from_blocks(carrier, gens[i], "generators[" + std::to_string(i) + "]"));
  return UeqClass::generate(carrier, std::move(rels));
}

SpaceMap map_from_json(const Json& doc) {
  UeqClass source = space_from_json(field(doc, "source"));
  UeqClass target = space_from_json(field(doc, "target"));
  std::vector<int> values = int_array(field(doc, "values"), "values");
  try {
    return SpaceMap(std::move(source), std::move(target), std::move(values));
  } catch (const Error& e) {
    fail(ErrorKind::Validation, std::string("map: ") + e.what());
  }
}

Rational rational_from_json(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>(), 1);
  require(v.is_string(), ErrorKind::Schema, where + " must be a rational string or integer");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    fail(ErrorKind::Validation, where + ": " + e.what());
  }
}

PseudoMetric metric_from_json(const Json& doc) {
  require(doc.is_object(), ErrorKind::Schema, "metric must be an object");
  Carrier carrier = carrier_field(doc);
  const Json& rows = field(doc, "dist");
  require(rows.is_array(), ErrorKind::Schema, "dist must be an array of rows");
  std::vector<std::vector<Rational>> dist;
  dist.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& row = rows[i];
    require(row.is_array(), ErrorKind::Schema, "dist rows must be arrays");
    std::vector<Rational> r;
    r.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
      r.push_back(rational_from_json(row[j],
                                     "dist[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    dist.push_back(std::move(r));
  }
  try {
    return PseudoMetric::from_matrix(carrier, std::move(dist));
  } catch (const Error& e) {
    fail(ErrorKind::Validation, std::string("metric: ") + e.what());
  }
}

MetricFamily family_from_json(const Json& doc) {
  Carrier carrier = carrier_field(doc);
  const Json& metrics = field(doc, "metrics");
  require(metrics.is_array(), ErrorKind::Schema, "metrics must be an array");
  require(!metrics.empty(), ErrorKind::Validation, "family needs at least one metric");
  std::vector<TransitivePseudoMetric> out;
  out.reserve(metrics.size());
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    Json m = metrics[i];
    if (!m.contains("carrier")) m["carrier"] = carrier.size;
    PseudoMetric d = metric_from_json(m);
    require(d.carrier() == carrier, ErrorKind::Validation,
            "metrics[" + std::to_string(i) + "] carrier differs from family carrier");
    try {
      out.emplace_back(std::move(d));
    } catch (const Error& e) {
      fail(ErrorKind::Validation, "metrics[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return MetricFamily(carrier, std::move(out));
}

FiniteTopology topology_from_json(const Json& doc) {
  Carrier carrier = carrier_field(doc);
  const Json& rows = field(doc, "min_nbhd");
  require(rows.is_array(), ErrorKind::Schema, "min_nbhd must be an array");
  require(static_cast<int>(rows.size()) == carrier.size, ErrorKind::Validation,
          "min_nbhd needs one entry per element");
  std::vector<ElemSet> nbhds;
  nbhds.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> xs = int_array(rows[i], ("min_nbhd[" + std::to_string(i) + "]").c_str());
    try {
      nbhds.push_back(ElemSet::from_elements(carrier.size, xs));
    } catch (const Error& e) {
      fail(ErrorKind::Validation, "min_nbhd[" + std::to_string(i) + "]: " + e.what());
    }
  }
  try {
    return FiniteTopology::from_min_nbhds(carrier, std::move(nbhds));
  } catch (const Error& e) {
    fail(ErrorKind::Validation, std::string("topology: ") + e.what());
  }
}

SubsetInstance subset_from_json(const Json& doc) {
  Carrier carrier = carrier_field(doc);
  std::vector<int> xs = int_array(field(doc, "elements"), "elements");
  try {
    return SubsetInstance{carrier, ElemSet::from_elements(carrier.size, xs)};
  } catch (const Error& e) {
    fail(ErrorKind::Validation, std::string("subset: ") + e.what());
  }
}

}  // namespace

Instance parse_instance_json(const Json& doc) {
  require(doc.is_object(), ErrorKind::Schema, "instance must be a JSON object");
  const Json& kind = field(doc, "kind");
  require(kind.is_string(), ErrorKind::Schema, "kind must be a string");
  std::string k = kind.get<std::string>();
  if (k == "space") return Instance{InstanceKind::Space, space_from_json(doc)};
  if (k == "map") return Instance{InstanceKind::Map, map_from_json(doc)};
  if (k == "metric") return Instance{InstanceKind::Metric, metric_from_json(doc)};
  if (k == "family") return Instance{InstanceKind::Family, family_from_json(doc)};
  if (k == "topology") return Instance{InstanceKind::Topology, topology_from_json(doc)};
  if (k == "subset") return Instance{InstanceKind::Subset, subset_from_json(doc)};
  fail(ErrorKind::Schema, "unknown kind '" + k + "'");
}

Instance parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Schema, std::string("invalid JSON: ") + e.what());
  }
  return parse_instance_json(doc);
}

Json relation_to_blocks(const EquivRel& u) {
  Json out = Json::array();
  for (const ElemSet& b : u.blocks()) out.push_back(b.to_vector());
  return out;
}

Json space_to_json(const UeqClass& c, bool with_members) {
  Json doc;
  doc["kind"] = "space";
  doc["carrier"] = c.size();
  Json gens = Json::array();
  for (const EquivRel& g : c.generators()) gens.push_back(relation_to_blocks(g));
  doc["generators"] = std::move(gens);
  if (with_members) {
    Json members = Json::array();
    for (const EquivRel& m : c.members()) members.push_back(relation_to_blocks(m));
    doc["members"] = std::move(members);
  }
  return doc;
}

Json map_to_json(const SpaceMap& f) {
  Json doc;
  doc["kind"] = "map";
  doc["source"] = space_to_json(f.source);
  doc["target"] = space_to_json(f.target);
  doc["values"] = f.values;
  return doc;
}

Json metric_to_json(const PseudoMetric& d) {
  Json doc;
  doc["kind"] = "metric";
  doc["carrier"] = d.size();
  Json rows = Json::array();
  for (int x = 0; x < d.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < d.size(); ++y) row.push_back(rational_to_string(d.at(x, y)));
    rows.push_back(std::move(row));
  }
  doc["dist"] = std::move(rows);
  return doc;
}

Json family_to_json(const MetricFamily& fam) {
  Json doc;
  doc["kind"] = "family";
  doc["carrier"] = fam.size();
  Json metrics = Json::array();
  for (const TransitivePseudoMetric& d : fam.metrics()) {
    Json m = metric_to_json(d.metric());
    m.erase("kind");
    metrics.push_back(std::move(m));
  }
  doc["metrics"] = std::move(metrics);
  return doc;
}

Json topology_to_json(const FiniteTopology& t) {
  Json doc;
  doc["kind"] = "topology";
  doc["carrier"] = t.size();
  Json rows = Json::array();
  for (int x = 0; x < t.size(); ++x) rows.push_back(t.min_nbhd(x).to_vector());
  doc["min_nbhd"] = std::move(rows);
  return doc;
}

Json subset_to_json(Carrier carrier, const ElemSet& elements) {
  Json doc;
  doc["kind"] = "subset";
  doc["carrier"] = carrier.size;
  doc["elements"] = elements.to_vector();
  return doc;
}

}  // namespace ueq
