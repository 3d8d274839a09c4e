#include "ueq/checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace ueq {

namespace {

using TrialFn = TrialOutcome (*)(Rng&, const Caps&, Json*);

TrialOutcome failed(Json* cx, Json doc) {
  if (cx) *cx = std::move(doc);
  return TrialOutcome::Fail;
}

// ---------------------------------------------------------------- shared ---

FiniteTopology pullback_embedding_topology(const std::vector<int>& f,
                                           const FiniteTopology& target) {
  ElemSet img(target.size());
  for (int v : f) img.set(v);
  SubspaceTopology sub = subspace_topology(target, img);
  std::vector<int> pos(static_cast<std::size_t>(target.size()), -1);
  std::vector<int> back(sub.inclusion.size(), -1);
  for (std::size_t i = 0; i < sub.inclusion.size(); ++i)
    pos[static_cast<std::size_t>(sub.inclusion[i])] = static_cast<int>(i);
  for (std::size_t x = 0; x < f.size(); ++x)
    back[static_cast<std::size_t>(pos[static_cast<std::size_t>(f[x])])] = static_cast<int>(x);
  const int n = static_cast<int>(f.size());
  std::vector<ElemSet> nbhds(static_cast<std::size_t>(n), ElemSet(n));
  for (int x = 0; x < n; ++x)
    sub.top.min_nbhd(pos[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])]).for_each([&](int i) {
      nbhds[static_cast<std::size_t>(x)].set(back[static_cast<std::size_t>(i)]);
    });
  return FiniteTopology::from_min_nbhds(Carrier(n), std::move(nbhds));
}

UeqClass connected_class(Carrier carrier) {
  return UeqClass::generate(carrier, {EquivRel::full(carrier)});
}

// Transverse-by-construction map out of a space: injective on each block of
// one chosen member.
std::vector<int> transverse_map(Rng& rng, const UeqClass& v, int codomain) {
  const EquivRel& chosen = v.members()[rng.below(v.members().size())];
  std::vector<int> phi(static_cast<std::size_t>(v.size()));
  for (const ElemSet& block : chosen.blocks()) {
    std::vector<int> elems = block.to_vector();
    std::vector<int> targets = random_distinct(rng, static_cast<int>(elems.size()), codomain);
    for (std::size_t i = 0; i < elems.size(); ++i)
      phi[static_cast<std::size_t>(elems[i])] = targets[i];
  }
  return phi;
}

struct CoincidencePair {
  UeqClass source;   // rich, makes alpha and beta continuous by construction
  UeqClass target;
  UeqClass phi_target;
  std::vector<int> alpha, beta, phi;
};

CoincidencePair coincidence_instance(Rng& rng, const Caps& caps, std::uint64_t agree_num,
                                     std::uint64_t agree_den, bool force_full_agreement) {
  int ny = rng.range(1, caps.max_carrier);
  UeqClass v = random_class(rng, Carrier(ny), 3);
  std::vector<int> phi = transverse_map(rng, v, ny);
  UeqClass z = UeqClass::generate(Carrier(ny), {EquivRel::delta(Carrier(ny))});

  int nx = rng.range(1, caps.max_carrier);
  std::vector<int> alpha = random_function(rng, nx, ny);
  std::vector<int> beta(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x) {
    if (force_full_agreement || rng.chance(agree_num, agree_den)) {
      beta[static_cast<std::size_t>(x)] = alpha[static_cast<std::size_t>(x)];
      continue;
    }
    std::vector<int> fiber;
    for (int y = 0; y < ny; ++y)
      if (phi[static_cast<std::size_t>(y)] == phi[static_cast<std::size_t>(alpha[static_cast<std::size_t>(x)])])
        fiber.push_back(y);
    beta[static_cast<std::size_t>(x)] = fiber[rng.below(fiber.size())];
  }

  std::vector<EquivRel> gens = {EquivRel::full(Carrier(nx))};
  for (const EquivRel& g : v.generators()) {
    gens.push_back(preimage_relation(alpha, g));
    gens.push_back(preimage_relation(beta, g));
  }
  UeqClass u = UeqClass::generate(Carrier(nx), std::move(gens));
  return CoincidencePair{std::move(u), std::move(v), std::move(z),
                         std::move(alpha), std::move(beta), std::move(phi)};
}

Json coincidence_cx(const CoincidencePair& inst) {
  Json cx;
  cx["alpha"] = map_to_json(SpaceMap(inst.source, inst.target, inst.alpha));
  cx["beta_values"] = inst.beta;
  cx["phi"] = map_to_json(SpaceMap(inst.target, inst.phi_target, inst.phi));
  return cx;
}

// ---------------------------------------------------------------- checks ---

TrialOutcome trial_p2_2(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, caps.max_carrier);
  int k = rng.range(1, 2);
  std::vector<MapInto> maps;
  for (int i = 0; i < k; ++i) {
    int m = rng.range(1, caps.max_carrier);
    UeqClass target = random_class(rng, Carrier(m), 3);
    maps.push_back(MapInto{random_function(rng, n, m), std::move(target)});
  }
  UeqClass induced = induced_class(Carrier(n), maps);

  // Any meet-closed class containing the pullback generators.
  std::vector<EquivRel> gens;
  for (const MapInto& m : maps)
    for (const EquivRel& g : m.target.generators()) gens.push_back(preimage_relation(m.values, g));
  int extra = rng.range(0, 2);
  for (int i = 0; i < extra; ++i) gens.push_back(random_relation(rng, Carrier(n)));
  UeqClass container = UeqClass::generate(Carrier(n), std::move(gens));

  bool smallest = std::all_of(induced.members().begin(), induced.members().end(),
                              [&](const EquivRel& m) { return container.contains(m); });
  bool continuous = std::all_of(maps.begin(), maps.end(), [&](const MapInto& m) {
    return is_continuous(SpaceMap(induced, m.target, m.values));
  });
  if (smallest && continuous) return TrialOutcome::Pass;
  Json doc;
  doc["domain"] = n;
  Json fs = Json::array();
  for (const MapInto& m : maps) {
    Json one;
    one["values"] = m.values;
    one["target"] = space_to_json(m.target);
    fs.push_back(std::move(one));
  }
  doc["functions"] = std::move(fs);
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p2_3(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, caps.max_carrier);
  int m = rng.range(1, caps.max_carrier);
  UeqClass v = random_class(rng, Carrier(m), caps.max_generators);
  std::vector<int> phi = random_function(rng, n, m);
  UeqClass induced = induced_class(Carrier(n), {MapInto{phi, v}});
  std::vector<EquivRel> direct;
  direct.reserve(v.members().size());
  for (const EquivRel& mem : v.members()) direct.push_back(preimage_relation(phi, mem));
  std::sort(direct.begin(), direct.end());
  direct.erase(std::unique(direct.begin(), direct.end()), direct.end());
  if (induced.members() == direct) return TrialOutcome::Pass;
  Json doc;
  doc["target"] = space_to_json(v, true);
  doc["values"] = phi;
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p2_4(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, caps.max_carrier);
  int p = rng.range(1, caps.max_carrier);
  int q = rng.range(1, caps.max_carrier);
  UeqClass w = random_class(rng, Carrier(q), 3);
  std::vector<int> psi = random_function(rng, p, q);
  UeqClass v = induced_class(Carrier(p), {MapInto{psi, w}});
  std::vector<int> phi = random_function(rng, n, p);
  UeqClass u = random_class(rng, Carrier(n), 3);
  if (rng.chance(1, 2)) {
    // Force the continuous branch.
    std::vector<EquivRel> gens = u.generators();
    for (const EquivRel& g : v.generators()) gens.push_back(preimage_relation(phi, g));
    u = UeqClass::generate(Carrier(n), std::move(gens));
  }
  bool direct = is_continuous(SpaceMap(u, v, phi));
  bool composed = is_continuous(SpaceMap(u, w, compose_values(phi, psi)));
  if (direct == composed) return TrialOutcome::Pass;
  Json doc;
  doc["phi"] = map_to_json(SpaceMap(u, v, phi));
  doc["psi_values"] = psi;
  doc["outer_target"] = space_to_json(w);
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p2_6(Rng& rng, const Caps& caps, Json* cx) {
  int limit = std::min(5, caps.max_carrier);
  int n = rng.range(1, limit);
  int m = rng.range(1, limit);
  UeqClass v = random_class(rng, Carrier(m), caps.max_generators);
  int branch = rng.range(0, 2);
  std::vector<int> f = (branch >= 1 && n <= m) ? random_injection(rng, n, m)
                                               : random_function(rng, n, m);
  UeqClass u = (branch == 2) ? induced_class(Carrier(n), {MapInto{f, v}})
                             : random_class(rng, Carrier(n), caps.max_generators);
  SpaceMap map(std::move(u), std::move(v), std::move(f));
  bool by_definition = embedding_definitional(map);
  bool by_characterization = embedding_characterization(map);
  if (by_definition == by_characterization) return TrialOutcome::Pass;
  return failed(cx, map_to_json(map));
}

TrialOutcome trial_p2_7(Rng& rng, const Caps& caps, Json* cx) {
  int nx = rng.range(1, caps.max_carrier);
  int ny = rng.range(nx, caps.max_carrier);
  std::vector<int> g = random_surjection(rng, ny, nx);
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(nx));
  for (int y = 0; y < ny; ++y) fibers[static_cast<std::size_t>(g[static_cast<std::size_t>(y)])].push_back(y);
  std::vector<int> f(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x)
    f[static_cast<std::size_t>(x)] =
        fibers[static_cast<std::size_t>(x)][rng.below(fibers[static_cast<std::size_t>(x)].size())];
  std::vector<int> p = compose_values(g, f);  // f o g, idempotent retraction onto f(X)

  int count = rng.range(1, caps.max_generators);
  std::vector<EquivRel> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_relation(rng, Carrier(ny)));
  std::size_t base = gens.size();
  for (std::size_t i = 0; i < base; ++i) gens.push_back(preimage_relation(p, gens[i]));
  UeqClass v = UeqClass::generate(Carrier(ny), std::move(gens));
  UeqClass u = induced_class(Carrier(nx), {MapInto{f, v}});

  SpaceMap fmap(u, v, f), gmap(v, u, g);
  if (!is_continuous(fmap) || !is_continuous(gmap)) return TrialOutcome::Vacuous;
  if (left_inverse_embedding_check(fmap, gmap)) return TrialOutcome::Pass;
  Json doc;
  doc["f"] = map_to_json(fmap);
  doc["g_values"] = g;
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p2_8(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, caps.max_carrier);
  UeqClass u = random_class(rng, Carrier(n), caps.max_generators);
  int parts = rng.range(1, 3);
  std::vector<ElemSet> cover(static_cast<std::size_t>(parts), ElemSet(n));
  for (int x = 0; x < n; ++x) cover[rng.below(static_cast<std::uint64_t>(parts))].set(x);
  for (ElemSet& part : cover)
    for (int x = 0; x < n; ++x)
      if (rng.chance(1, 4)) part.set(x);

  for (const EquivRel& mem : u.members()) {
    ElemSet centers(n);
    for (const ElemSet& part : cover) {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      part.for_each([&](int x) {
        int lbl = mem.label(x);
        if (!seen[static_cast<std::size_t>(lbl)]) {
          seen[static_cast<std::size_t>(lbl)] = 1;
          centers.set(x);  // minimum of block-within-part, by ascending scan
        }
      });
    }
    if (!saturate(mem, centers).is_full()) {
      Json doc;
      doc["space"] = space_to_json(u, true);
      Json parts_json = Json::array();
      for (const ElemSet& part : cover) parts_json.push_back(part.to_vector());
      doc["cover"] = std::move(parts_json);
      doc["member"] = relation_to_blocks(mem);
      return failed(cx, std::move(doc));
    }
  }
  return TrialOutcome::Pass;
}

TrialOutcome trial_p2_9(Rng& rng, const Caps& caps, Json* cx) {
  int m = rng.range(1, caps.max_carrier);
  UeqClass v = random_class(rng, Carrier(m), caps.max_generators);
  int n = rng.range(1, caps.max_carrier);
  std::vector<int> phi = random_function(rng, n, m);

  for (const EquivRel& mem : v.members()) {
    EquivRel u = preimage_relation(phi, mem);
    ElemSet centers(n);
    for (int y : mem.labels()) {
      // Pick the least preimage point of the block V[y], when nonempty.
      for (int x = 0; x < n; ++x)
        if (mem.label(phi[static_cast<std::size_t>(x)]) == y) {
          centers.set(x);
          break;
        }
    }
    if (!saturate(u, centers).is_full()) {
      Json doc;
      doc["target"] = space_to_json(v, true);
      doc["values"] = phi;
      doc["member"] = relation_to_blocks(mem);
      return failed(cx, std::move(doc));
    }
  }
  return TrialOutcome::Pass;
}

TrialOutcome trial_p2_10(Rng& rng, const Caps& caps, Json* cx) {
  int k = rng.range(1, caps.max_factors);
  std::vector<UeqClass> factors;
  for (int i = 0; i < k; ++i) factors.push_back(random_class(rng, Carrier(rng.range(1, 3)), 2));
  ProductSpace prod = product_class(factors);

  int n = rng.range(1, caps.max_carrier);
  std::vector<int> phi = random_function(rng, n, prod.cls.size());
  UeqClass a = rng.chance(1, 2) ? induced_class(Carrier(n), {MapInto{phi, prod.cls}})
                                : random_class(rng, Carrier(n), 3);

  bool into_product = is_continuous(SpaceMap(a, prod.cls, phi));
  bool coordinatewise = true;
  for (int j = 0; j < k && coordinatewise; ++j) {
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
      comp[static_cast<std::size_t>(x)] = prod.shape.coord(phi[static_cast<std::size_t>(x)], j);
    coordinatewise = is_continuous(SpaceMap(a, factors[static_cast<std::size_t>(j)], comp));
  }
  if (into_product == coordinatewise) return TrialOutcome::Pass;
  Json doc;
  doc["map"] = map_to_json(SpaceMap(a, prod.cls, phi));
  Json fs = Json::array();
  for (const UeqClass& f : factors) fs.push_back(space_to_json(f));
  doc["factors"] = std::move(fs);
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p2_11(Rng& rng, const Caps& caps, Json* cx) {
  int k = rng.range(1, caps.max_factors);
  std::vector<UeqClass> factors;
  for (int i = 0; i < k; ++i)
    factors.push_back(random_separated_class(rng, Carrier(rng.range(1, 3)), 2));
  ProductSpace prod = product_class(factors);
  if (is_separated(prod.cls)) return TrialOutcome::Pass;
  Json doc = Json::array();
  for (const UeqClass& f : factors) doc.push_back(space_to_json(f));
  return failed(cx, Json{{"factors", doc}});
}

TrialOutcome trial_p2_12(Rng& rng, const Caps& caps, Json* cx) {
  int k = rng.range(1, caps.max_factors);
  std::vector<UeqClass> factors;
  for (int i = 0; i < k; ++i) factors.push_back(random_class(rng, Carrier(rng.range(1, 3)), 2));
  ProductSpace prod = product_class(factors);
  std::vector<FiniteTopology> tops;
  for (const UeqClass& f : factors) tops.push_back(induce_topology(f));
  ProductTopologyResult pt = product_topology(tops);
  if (topologies_equal(induce_topology(prod.cls), pt.top)) return TrialOutcome::Pass;
  Json doc = Json::array();
  for (const UeqClass& f : factors) doc.push_back(space_to_json(f));
  return failed(cx, Json{{"factors", doc}});
}

TrialOutcome trial_p3_1(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, caps.max_carrier);
  UeqClass space = random_rich_class(rng, Carrier(n), caps.max_generators);
  ElemSet a = random_subset(rng, Carrier(n), true);
  bool by_inclusion = subset_open_by_inclusion(space, a);
  bool by_refinement = subset_open_by_refinement(space, a);
  bool by_inner = subset_open_by_inner_relation(space, a);
  bool combined = is_u_open_subset(space, a);
  if (by_inclusion == by_refinement && by_refinement == by_inner && combined == by_inclusion)
    return TrialOutcome::Pass;
  Json doc;
  doc["space"] = space_to_json(space, true);
  doc["subset"] = subset_to_json(space.carrier(), a);
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p3_2(Rng& rng, const Caps& caps, Json* cx) {
  CoincidencePair inst = coincidence_instance(rng, caps, 7, 10, false);
  SpaceMap am(inst.source, inst.target, inst.alpha);
  SpaceMap bm(inst.source, inst.target, inst.beta);
  SpaceMap pm(inst.target, inst.phi_target, inst.phi);
  bool premises = is_continuous(am) && is_continuous(bm) && is_transverse(pm) &&
                  compose_values(inst.alpha, inst.phi) == compose_values(inst.beta, inst.phi) &&
                  is_rich(inst.source);
  if (!premises) return TrialOutcome::Vacuous;
  ElemSet c = coincidence_set(am, bm);
  if (c.empty()) return TrialOutcome::Vacuous;  // recorded apart from pass/fail
  if (is_u_open_subset(inst.source, c)) return TrialOutcome::Pass;
  return failed(cx, coincidence_cx(inst));
}

TrialOutcome trial_p3_4(Rng& rng, const Caps& caps, Json* cx) {
  bool force_surjective = rng.chance(3, 5);
  int nx = rng.range(1, caps.max_carrier);
  int ny = force_surjective ? rng.range(1, nx) : rng.range(1, caps.max_carrier);
  std::vector<int> f = force_surjective ? random_surjection(rng, nx, ny)
                                        : random_function(rng, nx, ny);
  UeqClass v = random_class(rng, Carrier(ny), 3);
  if (rng.chance(1, 2)) {
    std::vector<EquivRel> gens = v.generators();
    gens.push_back(EquivRel::delta(Carrier(ny)));
    v = UeqClass::generate(Carrier(ny), std::move(gens));
  }
  UeqClass u = random_rich_class(rng, Carrier(nx), caps.max_generators);
  SpaceMap map(std::move(u), std::move(v), std::move(f));
  if (!is_rich(map.source) || !is_u_surjection(map) || !is_open_map(map))
    return TrialOutcome::Vacuous;
  if (map.is_surjective()) return TrialOutcome::Pass;
  return failed(cx, map_to_json(map));
}

TrialOutcome trial_p3_6(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, caps.max_carrier);
  UeqClass space = random_rich_class(rng, Carrier(n), caps.max_generators);
  ElemSet a = rng.chance(7, 20) ? ElemSet::full_set(n) : random_subset(rng, Carrier(n), true);
  if (!is_u_open_subset(space, a) || !is_dense(space, a)) return TrialOutcome::Vacuous;
  if (a.is_full()) return TrialOutcome::Pass;
  Json doc;
  doc["space"] = space_to_json(space, true);
  doc["subset"] = subset_to_json(space.carrier(), a);
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p3_7(Rng& rng, const Caps& caps, Json* cx) {
  bool force_equal = rng.chance(2, 5);
  CoincidencePair inst = coincidence_instance(rng, caps, 7, 10, force_equal);
  SpaceMap am(inst.source, inst.target, inst.alpha);
  SpaceMap bm(inst.source, inst.target, inst.beta);
  SpaceMap pm(inst.target, inst.phi_target, inst.phi);
  bool premises = is_continuous(am) && is_continuous(bm) && is_transverse(pm) &&
                  compose_values(inst.alpha, inst.phi) == compose_values(inst.beta, inst.phi) &&
                  is_rich(inst.source);
  if (!premises) return TrialOutcome::Vacuous;
  ElemSet c = coincidence_set(am, bm);
  if (c.empty() || !is_dense(inst.source, c)) return TrialOutcome::Vacuous;
  if (inst.alpha == inst.beta) return TrialOutcome::Pass;
  return failed(cx, coincidence_cx(inst));
}

TrialOutcome trial_p3_8(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, caps.max_carrier);
  UeqClass space = connected_class(Carrier(n));
  ElemSet a = random_subset(rng, Carrier(n), true);
  FiniteTopology t = induce_topology(space);
  bool ok = is_dense(space, a);
  for (const EquivRel& mem : space.members()) {
    ElemSet sat = saturate(mem, a);
    ElemSet sat2 = saturate(mem, sat);
    ok = ok && closure(t, sat).is_subset_of(sat2) && sat2.is_subset_of(sat);
  }
  if (ok) return TrialOutcome::Pass;
  Json doc;
  doc["space"] = space_to_json(space, true);
  doc["subset"] = subset_to_json(space.carrier(), a);
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p3_9(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, std::min(5, caps.max_carrier));
  UeqClass space = connected_class(Carrier(n));
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    ElemSet a(n);
    for (int x = 0; x < n; ++x)
      if (bits >> x & 1) a.set(x);
    bool open = is_u_open_subset(space, a);
    if (open != a.is_full()) {
      Json doc;
      doc["space"] = space_to_json(space, true);
      doc["subset"] = subset_to_json(space.carrier(), a);
      return failed(cx, std::move(doc));
    }
  }
  return TrialOutcome::Pass;
}

TrialOutcome trial_p3_10(Rng& rng, const Caps& caps, Json* cx) {
  int ny = rng.range(1, caps.max_carrier);
  UeqClass v = random_class(rng, Carrier(ny), 3);
  std::vector<int> phi = transverse_map(rng, v, ny);
  UeqClass z = UeqClass::generate(Carrier(ny), {EquivRel::delta(Carrier(ny))});

  // alpha and beta take values inside one bottom block, which is exactly what
  // continuity from a connected space allows.
  std::vector<int> block =
      block_of(v.bottom(), rng.range(0, ny - 1)).to_vector();
  int nx = rng.range(1, caps.max_carrier);
  UeqClass u = connected_class(Carrier(nx));
  std::vector<int> alpha(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x) alpha[static_cast<std::size_t>(x)] = block[rng.below(block.size())];
  int x0 = rng.range(0, nx - 1);
  std::vector<int> beta(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x) {
    if (x == x0) {
      beta[static_cast<std::size_t>(x)] = alpha[static_cast<std::size_t>(x)];
      continue;
    }
    std::vector<int> fiber;
    for (int y : block)
      if (phi[static_cast<std::size_t>(y)] ==
          phi[static_cast<std::size_t>(alpha[static_cast<std::size_t>(x)])])
        fiber.push_back(y);
    beta[static_cast<std::size_t>(x)] = fiber[rng.below(fiber.size())];
  }

  SpaceMap am(u, v, alpha), bm(u, v, beta), pm(v, z, phi);
  bool premises = is_continuous(am) && is_continuous(bm) && is_transverse(pm) &&
                  compose_values(alpha, phi) == compose_values(beta, phi) && is_rich(u) &&
                  is_connected(u) &&
                  alpha[static_cast<std::size_t>(x0)] == beta[static_cast<std::size_t>(x0)];
  if (!premises) return TrialOutcome::Vacuous;
  if (alpha == beta) return TrialOutcome::Pass;
  Json doc;
  doc["alpha"] = map_to_json(am);
  doc["beta_values"] = beta;
  doc["phi_values"] = phi;
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p4_2(Rng& rng, const Caps& caps, Json* cx) {
  int m = rng.range(1, caps.max_carrier);
  UeqClass v = random_class(rng, Carrier(m), caps.max_generators);
  std::vector<int> h = random_injection(rng, m, m);  // bijection
  FiniteTopology pulled = pullback_embedding_topology(h, induce_topology(v));
  UeqClass u = induced_class(Carrier(m), {MapInto{h, v}});
  if (is_equivalently_uniformisable_via(pulled, u)) return TrialOutcome::Pass;
  Json doc;
  doc["space"] = space_to_json(v, true);
  doc["values"] = h;
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p4_3(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, caps.max_carrier);
  UeqClass space = random_class(rng, Carrier(n), caps.max_generators);
  ElemSet y = random_subset(rng, Carrier(n), true);
  RelativeSpace rel = relative(space, y);
  SubspaceTopology sub = subspace_topology(induce_topology(space), y);
  if (topologies_equal(induce_topology(rel.cls), sub.top)) return TrialOutcome::Pass;
  Json doc;
  doc["space"] = space_to_json(space, true);
  doc["subset"] = subset_to_json(space.carrier(), y);
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p4_4(Rng& rng, const Caps& caps, Json* cx) {
  int m = rng.range(1, caps.max_carrier);
  UeqClass v = random_class(rng, Carrier(m), caps.max_generators);
  int n = rng.range(1, m);
  std::vector<int> f = random_injection(rng, n, m);
  FiniteTopology pulled = pullback_embedding_topology(f, induce_topology(v));
  UeqClass u = induced_class(Carrier(n), {MapInto{f, v}});
  if (is_equivalently_uniformisable_via(pulled, u)) return TrialOutcome::Pass;
  Json doc;
  doc["space"] = space_to_json(v, true);
  doc["values"] = f;
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p4_5(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, std::min(5, caps.max_carrier));
  PseudoMetric d = rng.chance(1, 2) ? random_transitive_metric(rng, Carrier(n)).metric()
                                    : random_pseudometric(rng, Carrier(n));
  bool swept = transitive_by_threshold_sweep(d);
  bool ultra = strong_triangle_holds(d);
  if (swept == ultra && is_transitive(d) == swept) return TrialOutcome::Pass;
  return failed(cx, metric_to_json(d));
}

TrialOutcome trial_p4_6(Rng& rng, const Caps& /*caps*/, Json* cx) {
  int k = rng.range(1, 2);
  std::vector<UeqClass> factor_classes;
  std::vector<FiniteTopology> factor_tops;
  Json metrics = Json::array();
  for (int i = 0; i < k; ++i) {
    TransitivePseudoMetric d = random_transitive_metric(rng, Carrier(rng.range(1, 3)));
    metrics.push_back(metric_to_json(d.metric()));
    factor_classes.push_back(class_from_metric(d));
    factor_tops.push_back(induce_topology(factor_classes.back()));
  }
  ProductSpace prod = product_class(factor_classes);
  ProductTopologyResult pt = product_topology(factor_tops);
  int n = rng.range(1, prod.cls.size());
  std::vector<int> f = random_injection(rng, n, prod.cls.size());
  FiniteTopology pulled = pullback_embedding_topology(f, pt.top);
  UeqClass u = induced_class(Carrier(n), {MapInto{f, prod.cls}});
  if (is_equivalently_uniformisable_via(pulled, u)) return TrialOutcome::Pass;
  Json doc;
  doc["metrics"] = std::move(metrics);
  doc["values"] = f;
  return failed(cx, std::move(doc));
}

TrialOutcome trial_p4_8(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, std::min(5, caps.max_carrier));
  MetricFamily fam = random_family(rng, Carrier(n), 2);
  FiniteTopology by_subbase = subbase_topology_from_family(fam);
  FiniteTopology by_class = induce_topology(class_from_family(fam));
  topology_from_family(fam);  // self-asserting route
  if (topologies_equal(by_subbase, by_class)) return TrialOutcome::Pass;
  return failed(cx, family_to_json(fam));
}

TrialOutcome trial_p4_9(Rng& rng, const Caps& caps, Json* cx) {
  int n = rng.range(1, std::min(5, caps.max_carrier));
  MetricFamily fam = random_family(rng, Carrier(n), 2);
  EvaluationEmbedding ev = evaluation_embedding(fam);
  if (is_u_embedding(ev.map)) return TrialOutcome::Pass;
  return failed(cx, family_to_json(fam));
}

TrialOutcome trial_p4_10(Rng& rng, const Caps& caps, Json* cx) {
  // Ball classes always contain the full relation (any radius past the
  // maximum distance gives it), so only rich classes can round-trip; those
  // are exactly the metric-generated ones. Member counts are kept small so
  // the per-member evaluation product stays under the size cap.
  int n = rng.range(2, std::min(4, caps.max_carrier));
  UeqClass c = random_rich_class(rng, Carrier(n), 3);
  MetricFamily fam = metrics_from_class(c);
  bool round_trip = class_from_family(fam) == c;
  EvaluationEmbedding ev = evaluation_embedding(fam);
  std::vector<FiniteTopology> factor_tops;
  for (const UeqClass& fc : ev.factor_classes) factor_tops.push_back(induce_topology(fc));
  ProductTopologyResult pt = product_topology(factor_tops);
  bool embeds = is_topological_embedding(ev.map.values, induce_topology(c), pt.top);
  if (round_trip && embeds) return TrialOutcome::Pass;
  Json doc;
  doc["space"] = space_to_json(c, true);
  doc["round_trip"] = round_trip;
  doc["topological_embedding"] = embeds;
  return failed(cx, std::move(doc));
}

// -------------------------------------------------------------- registry ---

struct CheckDef {
  const char* id;
  const char* title;
  TrialFn fn;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"P2.2", "induced class is the smallest one making the functions continuous", trial_p2_2},
      {"P2.3", "single-function induced class equals the direct pullback family", trial_p2_3},
      {"P2.4", "continuity through an induced middle space matches the composite", trial_p2_4},
      {"P2.6", "embedding characterizations agree", trial_p2_6},
      {"P2.7", "a continuous left inverse forces an embedding", trial_p2_7},
      {"P2.8", "finite unions of totally bounded subspaces are totally bounded", trial_p2_8},
      {"P2.9", "induced classes pull back total boundedness", trial_p2_9},
      {"P2.10", "continuity into a product is coordinatewise", trial_p2_10},
      {"P2.11", "products of separated spaces are separated", trial_p2_11},
      {"P2.12", "product class topology equals product of factor topologies", trial_p2_12},
      {"P3.1", "three-way subset-openness equivalence on rich spaces", trial_p3_1},
      {"P3.2", "nonempty coincidence sets are open subsets", trial_p3_2},
      {"P3.4", "open surjection-like maps from rich spaces are surjective", trial_p3_4},
      {"P3.6", "open dense subsets of rich spaces are everything", trial_p3_6},
      {"P3.7", "dense coincidence forces equality", trial_p3_7},
      {"P3.8", "nonempty subsets of connected spaces are dense", trial_p3_8},
      {"P3.9", "open subsets of connected spaces are trivial", trial_p3_9},
      {"P3.10", "one coincidence point on a connected space forces equality", trial_p3_10},
      {"P4.2", "topological equivalence transports uniformisability", trial_p4_2},
      {"P4.3", "relative class topology equals subspace topology", trial_p4_3},
      {"P4.4", "topological embeddings transport uniformisability", trial_p4_4},
      {"P4.5", "threshold sweep agrees with the strong triangle law", trial_p4_5},
      {"P4.6", "embeddings into metric products give uniformisability", trial_p4_6},
      {"P4.8", "ball sub-base topology equals class topology", trial_p4_8},
      {"P4.9", "the evaluation map is an embedding", trial_p4_9},
      {"P4.10", "metric-generated classes embed into metric products", trial_p4_10},
  };
  return defs;
}

const CheckDef& find_check(const std::string& id) {
  for (const CheckDef& def : registry())
    if (id == def.id) return def;
  fail(ErrorKind::UnknownCheckId, "no check named '" + id + "'");
}

}  // namespace

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  ids.reserve(registry().size());
  for (const CheckDef& def : registry()) ids.emplace_back(def.id);
  return ids;
}

std::string check_title(const std::string& id) { return find_check(id).title; }

TrialOutcome run_single_trial(const std::string& id, std::uint64_t seed, std::uint64_t index,
                              const Caps& caps, Json* counterexample) {
  const CheckDef& def = find_check(id);
  Rng rng(Rng::derive(seed, id, index));
  try {
    return def.fn(rng, caps, counterexample);
  } catch (const Error& e) {
    // A thrown kind (e.g. CharacterizationMismatch) is an implementation
    // defect surfaced by this trial; report it as a failure.
    if (counterexample) *counterexample = Json{{"error", e.what()}};
    return TrialOutcome::Fail;
  }
}

VerificationReport run_checks(const std::vector<std::string>& ids, std::uint64_t seed, int trials,
                              const Caps& caps) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.seed = seed;
  report.trials = trials;
  report.caps = caps;
  for (const std::string& id : ids) {
    find_check(id);  // validate before any work
    CheckResult result;
    result.id = id;
    for (int i = 0; i < trials; ++i) {
      Json cx;
      TrialOutcome outcome =
          run_single_trial(id, seed, static_cast<std::uint64_t>(i), caps,
                           result.counterexample ? nullptr : &cx);
      switch (outcome) {
        case TrialOutcome::Pass: ++result.passes; break;
        case TrialOutcome::Vacuous: ++result.vacuous; break;
        case TrialOutcome::Fail:
          ++result.failures;
          if (!result.counterexample) {
            cx["check_id"] = id;
            cx["trial"] = i;
            result.counterexample = std::move(cx);
          }
          break;
      }
    }
    report.results.push_back(std::move(result));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool VerificationReport::ok() const {
  for (const CheckResult& r : results)
    if (r.failures > 0 || r.fully_vacuous()) return false;
  return true;
}

Json report_to_json(const VerificationReport& report) {
  Json doc;
  doc["seed"] = report.seed;
  doc["trials"] = report.trials;
  doc["caps"] = Json{{"max_carrier", report.caps.max_carrier},
                     {"exhaustive_carrier", report.caps.exhaustive_carrier},
                     {"max_generators", report.caps.max_generators},
                     {"max_factors", report.caps.max_factors},
                     {"product_size_cap", report.caps.product_size_cap}};
  Json checks = Json::array();
  int failures_total = 0;
  for (const CheckResult& r : report.results) {
    Json entry;
    entry["check_id"] = r.id;
    entry["passes"] = r.passes;
    entry["failures"] = r.failures;
    entry["vacuous"] = r.vacuous;
    if (r.counterexample) entry["counterexample"] = *r.counterexample;
    checks.push_back(std::move(entry));
    failures_total += r.failures;
  }
  doc["checks"] = std::move(checks);
  doc["failures_total"] = failures_total;
  doc["ok"] = report.ok();
  return doc;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "check    passes  failures  vacuous  description\n";
  for (const CheckResult& r : report.results) {
    out << r.id;
    for (std::size_t i = r.id.size(); i < 9; ++i) out << ' ';
    std::string p = std::to_string(r.passes), f = std::to_string(r.failures),
                v = std::to_string(r.vacuous);
    out << p << std::string(8 - std::min<std::size_t>(7, p.size()), ' ') << f
        << std::string(10 - std::min<std::size_t>(9, f.size()), ' ') << v
        << std::string(9 - std::min<std::size_t>(8, v.size()), ' ') << check_title(r.id);
    if (r.fully_vacuous()) out << "  [ALL TRIALS VACUOUS]";
    out << '\n';
  }
  out << "seed=" << report.seed << " trials=" << report.trials
      << " caps: carrier<=" << report.caps.max_carrier
      << " generators<=" << report.caps.max_generators
      << " factors<=" << report.caps.max_factors << '\n';
  out << "wall time: " << report.wall_seconds << "s\n";
  out << "RESULT: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace ueq
