// Brute-force reference constructions used only by tests. Everything here
// works on explicit pair sets and exhaustive set families so it stays
// independent of the partition-based production code it checks.
#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "ueq/classes.hpp"
#include "ueq/pseudometric.hpp"
#include "ueq/topology.hpp"

namespace oracle {

using PairSet = std::set<std::pair<int, int>>;

inline PairSet pairset_of(const ueq::EquivRel& u) {
  PairSet out;
  for (int x = 0; x < u.size(); ++x)
    for (int y = 0; y < u.size(); ++y)
      if (u.related(x, y)) out.emplace(x, y);
  return out;
}

/// Reflexive-symmetric-transitive closure by fixpoint iteration.
inline PairSet closure_of_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  PairSet rel;
  for (int x = 0; x < n; ++x) rel.emplace(x, x);
  for (auto [a, b] : pairs) {
    rel.emplace(a, b);
    rel.emplace(b, a);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    PairSet next = rel;
    for (auto [a, b] : rel)
      for (auto [c, d] : rel)
        if (b == c && !next.count({a, d})) {
          next.emplace(a, d);
          grew = true;
        }
    rel = std::move(next);
  }
  return rel;
}

/// Canonical relation from an explicit pair set (must be an equivalence).
inline ueq::EquivRel relation_from_pairset(int n, const PairSet& rel) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y <= x; ++y)
      if (rel.count({y, x})) {
        ids[static_cast<std::size_t>(x)] = y;
        break;
      }
  return ueq::EquivRel::from_canonical_ids(ueq::Carrier(n), std::move(ids));
}

inline ueq::EquivRel meet_by_pairs(const ueq::EquivRel& a, const ueq::EquivRel& b) {
  PairSet pa = pairset_of(a), pb = pairset_of(b), out;
  std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                        std::inserter(out, out.begin()));
  return relation_from_pairset(a.size(), out);
}

/// Meets of every nonempty generator subset, deduplicated and sorted.
inline std::vector<ueq::EquivRel> members_by_subset_meets(const std::vector<ueq::EquivRel>& gens) {
  std::vector<ueq::EquivRel> out;
  for (std::size_t bits = 1; bits < (std::size_t{1} << gens.size()); ++bits) {
    ueq::EquivRel acc = ueq::EquivRel::full(gens.front().carrier());
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (bits >> i & 1) acc = meet_by_pairs(acc, gens[i]);
    out.push_back(std::move(acc));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All partitions of 0..n-1 via restricted growth strings.
inline std::vector<ueq::EquivRel> all_relations(int n) {
  std::vector<ueq::EquivRel> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    std::vector<int> first(static_cast<std::size_t>(n), -1);
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      int g = rgs[static_cast<std::size_t>(i)];
      if (first[static_cast<std::size_t>(g)] == -1) first[static_cast<std::size_t>(g)] = i;
      ids[static_cast<std::size_t>(i)] = first[static_cast<std::size_t>(g)];
    }
    out.push_back(ueq::EquivRel::from_canonical_ids(ueq::Carrier(n), std::move(ids)));
  };
  // Iterative successor over restricted growth strings.
  auto max_prefix = [&](int i) {
    int m = 0;
    for (int j = 0; j < i; ++j) m = std::max(m, rgs[static_cast<std::size_t>(j)] + 1);
    return m;
  };
  for (;;) {
    emit();
    int i = n - 1;
    while (i > 0 && rgs[static_cast<std::size_t>(i)] >= max_prefix(i)) --i;
    if (i == 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
  }
  return out;
}

/// All classes generated by nonempty generator subsets of size <= max_gens.
inline std::vector<ueq::UeqClass> all_classes(int n, int max_gens) {
  std::vector<ueq::EquivRel> rels = all_relations(n);
  std::vector<ueq::UeqClass> out;
  std::set<std::vector<ueq::EquivRel>> seen;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) {
      std::vector<ueq::EquivRel> gens;
      for (int i : pick) gens.push_back(rels[static_cast<std::size_t>(i)]);
      ueq::UeqClass cls = ueq::UeqClass::generate(ueq::Carrier(n), std::move(gens));
      if (seen.insert(cls.members()).second) out.push_back(std::move(cls));
    }
    if (static_cast<int>(pick.size()) == max_gens) return;
    for (std::size_t i = start; i < rels.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Union closure of the literal base {U[x] : U member, x element}, plus the
/// empty set: the induced topology computed without the bottom-block
/// shortcut.
inline std::vector<ueq::ElemSet> opens_from_literal_base(const ueq::UeqClass& cls) {
  std::vector<ueq::ElemSet> base;
  for (const ueq::EquivRel& u : cls.members())
    for (int x = 0; x < cls.size(); ++x) base.push_back(ueq::block_of(u, x));
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::set<ueq::ElemSet> family;
  family.insert(ueq::ElemSet(cls.size()));
  for (const ueq::ElemSet& b : base) {
    std::vector<ueq::ElemSet> snapshot(family.begin(), family.end());
    for (const ueq::ElemSet& s : snapshot) family.insert(s | b);
  }
  return std::vector<ueq::ElemSet>(family.begin(), family.end());
}

inline ueq::FiniteTopology topology_from_literal_base(const ueq::UeqClass& cls) {
  std::vector<ueq::ElemSet> opens = opens_from_literal_base(cls);
  std::vector<ueq::ElemSet> nbhds;
  for (int x = 0; x < cls.size(); ++x) {
    ueq::ElemSet n = ueq::ElemSet::full_set(cls.size());
    for (const ueq::ElemSet& g : opens)
      if (g.test(x)) n &= g;
    nbhds.push_back(std::move(n));
  }
  return ueq::FiniteTopology::from_min_nbhds(cls.carrier(), std::move(nbhds));
}

/// Smallest closed superset computed as the intersection of all closed sets
/// (complements of opens) containing s.
inline ueq::ElemSet closure_via_closed_sets(const ueq::FiniteTopology& t, const ueq::ElemSet& s) {
  ueq::ElemSet out = ueq::ElemSet::full_set(t.size());
  for (const ueq::ElemSet& g : t.opens()) {
    ueq::ElemSet closed = g.complement();
    if (s.is_subset_of(closed)) out &= closed;
  }
  return out;
}

/// Connectedness by scanning every open for a proper nonempty clopen.
inline bool connected_by_clopen_scan(const ueq::FiniteTopology& t) {
  std::vector<ueq::ElemSet> opens = t.opens();
  std::set<ueq::ElemSet> open_set(opens.begin(), opens.end());
  for (const ueq::ElemSet& g : opens)
    if (!g.empty() && !g.is_full() && open_set.count(g.complement())) return false;
  return true;
}

/// Topology generated by an arbitrary finite sub-base: finite intersections,
/// then union closure; minimal neighborhoods read off the open family.
inline ueq::FiniteTopology topology_from_subbase(int n, const std::vector<ueq::ElemSet>& subbase) {
  std::set<ueq::ElemSet> inters;
  inters.insert(ueq::ElemSet::full_set(n));  // empty intersection
  for (const ueq::ElemSet& s : subbase) {
    std::vector<ueq::ElemSet> snapshot(inters.begin(), inters.end());
    for (const ueq::ElemSet& t : snapshot) inters.insert(t & s);
  }
  std::set<ueq::ElemSet> family;
  family.insert(ueq::ElemSet(n));
  for (const ueq::ElemSet& b : inters) {
    std::vector<ueq::ElemSet> snapshot(family.begin(), family.end());
    for (const ueq::ElemSet& s : snapshot) family.insert(s | b);
  }
  std::vector<ueq::ElemSet> nbhds;
  for (int x = 0; x < n; ++x) {
    ueq::ElemSet nb = ueq::ElemSet::full_set(n);
    for (const ueq::ElemSet& g : family)
      if (g.test(x)) nb &= g;
    nbhds.push_back(std::move(nb));
  }
  return ueq::FiniteTopology::from_min_nbhds(ueq::Carrier(n), std::move(nbhds));
}

/// Transitivity by sampling radii densely: every attained distance, every
/// midpoint between consecutive attained distances, half the smallest, and
/// one point past the maximum.
inline bool transitive_by_dense_sampling(const ueq::PseudoMetric& d) {
  std::vector<ueq::Rational> rs = d.attained_nonzero_distances();
  std::vector<ueq::Rational> samples;
  if (!rs.empty()) samples.push_back(rs.front() / 2);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    samples.push_back(rs[i]);
    if (i + 1 < rs.size()) samples.push_back((rs[i] + rs[i + 1]) / 2);
  }
  samples.push_back(d.max_distance() + 1);
  for (const ueq::Rational& r : samples)
    if (!ueq::is_r_transitive(d, r)) return false;
  return true;
}

}  // namespace oracle
