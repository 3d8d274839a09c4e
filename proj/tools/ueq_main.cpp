// ueq: exact computation with finite equivalence-relation families, their
// induced topologies, map predicates, transitive pseudo-metrics, and a
// seeded property-verification harness.
//
// Exit codes: 0 success / predicate true / all checks pass,
//             1 predicate false / check failure,
//             2 usage, schema, or validation error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ueq/checks.hpp"
#include "ueq/dot.hpp"
#include "ueq/serialize.hpp"

namespace {

using ueq::Error;
using ueq::ErrorKind;
using ueq::Instance;
using ueq::InstanceKind;
using ueq::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ueq::fail(ErrorKind::Validation, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load(const std::string& path) { return ueq::parse_instance(read_file(path)); }

template <typename T>
T load_as(const std::string& path, InstanceKind kind) {
  Instance inst = load(path);
  if (inst.kind != kind)
    ueq::fail(ErrorKind::Validation,
              path + ": expected a " + std::string(ueq::kind_name(kind)) + " document, got " +
                  ueq::kind_name(inst.kind));
  return std::get<T>(std::move(inst.payload));
}

ueq::UeqClass load_space(const std::string& path) {
  return load_as<ueq::UeqClass>(path, InstanceKind::Space);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) ueq::fail(ErrorKind::Validation, "cannot write file: " + path);
  out << text;
}

void print_json(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_validate(const std::vector<std::string>& files) {
  for (const std::string& path : files) {
    Instance inst = load(path);
    std::cout << path << ": OK (" << ueq::kind_name(inst.kind) << ")\n";
  }
  return 0;
}

int cmd_meet(const std::string& file) {
  ueq::UeqClass space = load_space(file);
  Json doc;
  doc["carrier"] = space.size();
  doc["blocks"] = ueq::relation_to_blocks(space.bottom());
  print_json(doc);
  return 0;
}

int cmd_generate(const std::string& file) {
  print_json(ueq::space_to_json(load_space(file), true));
  return 0;
}

int cmd_induce(const std::string& file) {
  ueq::SpaceMap map = load_as<ueq::SpaceMap>(file, InstanceKind::Map);
  ueq::UeqClass induced =
      ueq::induced_class(map.source.carrier(), {ueq::MapInto{map.values, map.target}});
  print_json(ueq::space_to_json(induced, true));
  return 0;
}

int cmd_restrict(const std::string& space_file, const std::string& subset_file) {
  ueq::UeqClass space = load_space(space_file);
  auto subset = load_as<ueq::SubsetInstance>(subset_file, InstanceKind::Subset);
  ueq::RelativeSpace rel = ueq::relative(space, subset.elements);
  Json doc = ueq::space_to_json(rel.cls, true);
  doc["inclusion"] = rel.inclusion;
  print_json(doc);
  return 0;
}

int cmd_product(const std::vector<std::string>& files) {
  std::vector<ueq::UeqClass> factors;
  factors.reserve(files.size());
  for (const std::string& path : files) factors.push_back(load_space(path));
  ueq::ProductSpace prod = ueq::product_class(factors);
  Json doc = ueq::space_to_json(prod.cls, true);
  doc["factor_sizes"] = prod.shape.sizes;
  print_json(doc);
  return 0;
}

int cmd_topology(const std::string& file, const std::string& dot_path) {
  ueq::FiniteTopology t = ueq::induce_topology(load_space(file));
  print_json(ueq::topology_to_json(t));
  if (!dot_path.empty()) write_output(ueq::emit_dot(t), dot_path);
  return 0;
}

int cmd_dot(const std::string& file, const std::string& out_path) {
  Instance inst = load(file);
  ueq::FiniteTopology t = [&] {
    if (inst.kind == InstanceKind::Topology) return std::get<ueq::FiniteTopology>(inst.payload);
    if (inst.kind == InstanceKind::Space)
      return ueq::induce_topology(std::get<ueq::UeqClass>(inst.payload));
    ueq::fail(ErrorKind::Validation, file + ": expected a topology or space document");
  }();
  write_output(ueq::emit_dot(t), out_path);
  return 0;
}

struct CheckArgs {
  std::string map_file, space_file, subset_file, metric_file, topology_file;
};

int cmd_check(const std::string& predicate, const CheckArgs& args) {
  auto need = [&](const std::string& value, const char* flag) -> const std::string& {
    if (value.empty())
      ueq::fail(ErrorKind::Validation,
                "predicate '" + predicate + "' needs " + flag);
    return value;
  };
  auto map = [&] { return load_as<ueq::SpaceMap>(need(args.map_file, "--map"), InstanceKind::Map); };
  auto space = [&] { return load_space(need(args.space_file, "--space")); };
  auto subset = [&] {
    return load_as<ueq::SubsetInstance>(need(args.subset_file, "--subset"), InstanceKind::Subset);
  };

  bool result = false;
  if (predicate == "continuous") result = ueq::is_continuous(map());
  else if (predicate == "open") result = ueq::is_open_map(map());
  else if (predicate == "surjection") result = ueq::is_u_surjection(map());
  else if (predicate == "equivalence") result = ueq::is_u_equivalence(map());
  else if (predicate == "embedding") result = ueq::is_u_embedding(map());
  else if (predicate == "transverse") result = ueq::is_transverse(map());
  else if (predicate == "rich") result = ueq::is_rich(space());
  else if (predicate == "separated") result = ueq::is_separated(space());
  else if (predicate == "connected") result = ueq::is_connected(space());
  else if (predicate == "dense") result = ueq::is_dense(space(), subset().elements);
  else if (predicate == "u-open") result = ueq::is_u_open_subset(space(), subset().elements);
  else if (predicate == "transitive")
    result = ueq::is_transitive(
        load_as<ueq::PseudoMetric>(need(args.metric_file, "--metric"), InstanceKind::Metric));
  else if (predicate == "uniformisable")
    result = ueq::is_equivalently_uniformisable_via(
        load_as<ueq::FiniteTopology>(need(args.topology_file, "--topology"),
                                     InstanceKind::Topology),
        space());
  else
    ueq::fail(ErrorKind::Validation,
              "unknown predicate '" + predicate +
                  "' (expected continuous, open, surjection, equivalence, embedding, "
                  "transverse, rich, separated, connected, dense, u-open, transitive, "
                  "uniformisable)");
  std::cout << (result ? "true" : "false") << '\n';
  return result ? 0 : 1;
}

int cmd_verify(bool all, std::string checks_csv, std::uint64_t seed, int trials, int max_carrier,
               bool json_output) {
  std::vector<std::string> ids;
  if (all || checks_csv.empty()) {
    ids = ueq::all_check_ids();
  } else {
    std::stringstream ss(checks_csv);
    std::string id;
    while (std::getline(ss, id, ','))
      if (!id.empty()) ids.push_back(id);
  }
  ueq::Caps caps;
  if (max_carrier > 0) caps.max_carrier = max_carrier;
  ueq::VerificationReport report = ueq::run_checks(ids, seed, trials, caps);
  if (json_output)
    std::cout << ueq::report_to_json(report).dump(2) << '\n';
  else
    std::cout << ueq::report_to_text(report);
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite equivalence-space toolkit"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "parse and validate instance files");
  std::vector<std::string> validate_files;
  validate->add_option("files", validate_files, "instance files")->required();

  auto* meet_cmd = app.add_subcommand("meet", "finest relation of a space (meet of generators)");
  std::string meet_file;
  meet_cmd->add_option("space", meet_file, "space file")->required();

  auto* generate = app.add_subcommand("generate", "materialize all members of a space");
  std::string generate_file;
  generate->add_option("space", generate_file, "space file")->required();

  auto* induce = app.add_subcommand("induce", "class induced on the source along a map");
  std::string induce_file;
  induce->add_option("map", induce_file, "map file")->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "relative class on a subset");
  std::string restrict_space, restrict_subset;
  restrict_cmd->add_option("space", restrict_space, "space file")->required();
  restrict_cmd->add_option("subset", restrict_subset, "subset file")->required();

  auto* product = app.add_subcommand("product", "product of spaces");
  std::vector<std::string> product_files;
  product->add_option("spaces", product_files, "space files")->required();

  auto* topology = app.add_subcommand("topology", "topology induced by a space");
  std::string topology_file, topology_dot;
  topology->add_option("space", topology_file, "space file")->required();
  topology->add_option("--dot", topology_dot, "also write the specialization preorder as DOT");

  auto* dot = app.add_subcommand("dot", "specialization preorder of a topology or space as DOT");
  std::string dot_file, dot_out;
  dot->add_option("file", dot_file, "topology or space file")->required();
  dot->add_option("--dot", dot_out, "output path (stdout when omitted)");

  auto* check = app.add_subcommand("check", "evaluate one predicate, print true/false");
  std::string predicate;
  CheckArgs check_args;
  check->add_option("predicate", predicate, "predicate name")->required();
  check->add_option("--map", check_args.map_file, "map file");
  check->add_option("--space", check_args.space_file, "space file");
  check->add_option("--subset", check_args.subset_file, "subset file");
  check->add_option("--metric", check_args.metric_file, "metric file");
  check->add_option("--topology", check_args.topology_file, "topology file");

  auto* verify = app.add_subcommand("verify", "run the seeded verification harness");
  bool verify_all = false, verify_json = false;
  std::string verify_checks;
  std::uint64_t verify_seed = 42;
  int verify_trials = 500, verify_max_carrier = 0;
  verify->add_flag("--all", verify_all, "run every registered check");
  verify->add_option("--checks", verify_checks, "comma-separated check ids");
  verify->add_option("--seed", verify_seed, "master seed");
  verify->add_option("--trials", verify_trials, "trials per check");
  verify->add_option("--max-carrier", verify_max_carrier, "carrier cap for random instances");
  verify->add_flag("--json", verify_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(validate_files);
    if (*meet_cmd) return cmd_meet(meet_file);
    if (*generate) return cmd_generate(generate_file);
    if (*induce) return cmd_induce(induce_file);
    if (*restrict_cmd) return cmd_restrict(restrict_space, restrict_subset);
    if (*product) return cmd_product(product_files);
    if (*topology) return cmd_topology(topology_file, topology_dot);
    if (*dot) return cmd_dot(dot_file, dot_out);
    if (*check) return cmd_check(predicate, check_args);
    if (*verify)
      return cmd_verify(verify_all, verify_checks, verify_seed, verify_trials, verify_max_carrier,
                        verify_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
