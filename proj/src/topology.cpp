#include "ueq/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace ueq {

namespace detail {

FiniteTopology make_topology(Carrier carrier, std::vector<ElemSet> min_nbhds) {
  return FiniteTopology(carrier, std::move(min_nbhds));
}

}  // namespace detail

FiniteTopology::FiniteTopology(Carrier carrier, std::vector<ElemSet> nbhds)
    : carrier_(carrier), nbhd_(std::move(nbhds)) {}

FiniteTopology FiniteTopology::from_min_nbhds(Carrier carrier, std::vector<ElemSet> min_nbhds) {
  require(static_cast<int>(min_nbhds.size()) == carrier.size, ErrorKind::Validation,
          "need one minimal neighborhood per element");
  for (int x = 0; x < carrier.size; ++x) {
    const ElemSet& nx = min_nbhds[static_cast<std::size_t>(x)];
    require(nx.universe() == carrier.size, ErrorKind::Validation,
            "neighborhood universe must match carrier");
    require(nx.test(x), ErrorKind::Validation,
            "minimal neighborhood must contain its point: " + std::to_string(x));
  }
  for (int x = 0; x < carrier.size; ++x) {
    bool ok = true;
    min_nbhds[static_cast<std::size_t>(x)].for_each([&](int y) {
      if (ok) ok = min_nbhds[static_cast<std::size_t>(y)].is_subset_of(
                   min_nbhds[static_cast<std::size_t>(x)]);
    });
    require(ok, ErrorKind::Validation,
            "minimal neighborhood of " + std::to_string(x) + " is not open");
  }
  return FiniteTopology(carrier, std::move(min_nbhds));
}

std::vector<ElemSet> FiniteTopology::opens() const {
  std::vector<ElemSet> bases(nbhd_);
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  // Union closure: after processing base b the family holds every union of a
  // subset of the bases seen so far.
  std::set<ElemSet> family;
  family.insert(ElemSet(carrier_.size));
  for (const ElemSet& b : bases) {
    std::vector<ElemSet> snapshot(family.begin(), family.end());
    for (const ElemSet& s : snapshot) family.insert(s | b);
  }
  return std::vector<ElemSet>(family.begin(), family.end());
}

FiniteTopology induce_topology(const UeqClass& space) {
  const EquivRel& bottom = space.bottom();
  std::vector<ElemSet> nbhds;
  nbhds.reserve(static_cast<std::size_t>(space.size()));
  for (int x = 0; x < space.size(); ++x) nbhds.push_back(block_of(bottom, x));
  return detail::make_topology(space.carrier(), std::move(nbhds));
}

bool is_open(const FiniteTopology& t, const ElemSet& g) {
  require(g.universe() == t.size(), ErrorKind::CarrierMismatch,
          "subset universe must match the topology carrier");
  bool ok = true;
  g.for_each([&](int x) {
    if (ok) ok = t.min_nbhd(x).is_subset_of(g);
  });
  return ok;
}

ElemSet closure(const FiniteTopology& t, const ElemSet& s) {
  require(s.universe() == t.size(), ErrorKind::CarrierMismatch,
          "subset universe must match the topology carrier");
  ElemSet out(t.size());
  for (int x = 0; x < t.size(); ++x)
    if (t.min_nbhd(x).intersects(s)) out.set(x);
  return out;
}

bool is_dense(const UeqClass& space, const ElemSet& d) {
  require(d.universe() == space.size(), ErrorKind::CarrierMismatch,
          "subset universe must match the class carrier");
  bool blockwise = true;
  for (const EquivRel& u : space.members()) {
    for (int x = 0; x < space.size() && blockwise; ++x)
      blockwise = block_of(u, x).intersects(d);
    if (!blockwise) break;
  }
  bool topological = closure(induce_topology(space), d).is_full();
  require(blockwise == topological, ErrorKind::CharacterizationMismatch,
          "density characterizations disagree");
  return blockwise;
}

bool is_connected(const UeqClass& space) {
  bool by_bottom = space.bottom() == EquivRel::full(space.carrier());

  // Independent route: clopen sets are unions of components of the
  // symmetrized neighborhood graph, so connectedness is one component.
  FiniteTopology t = induce_topology(space);
  const int n = t.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int x = 0; x < n; ++x)
    t.min_nbhd(x).for_each([&](int y) {
      int rx = find(x), ry = find(y);
      if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
    });
  bool one_component = true;
  for (int x = 0; x < n; ++x)
    if (find(x) != 0) one_component = false;

  require(by_bottom == one_component, ErrorKind::CharacterizationMismatch,
          "connectedness characterizations disagree");
  return by_bottom;
}

SubspaceTopology subspace_topology(const FiniteTopology& t, const ElemSet& y) {
  require(y.universe() == t.size(), ErrorKind::CarrierMismatch,
          "subset universe must match the topology carrier");
  require(!y.empty(), ErrorKind::EmptySubset, "subspace needs a nonempty subset");
  std::vector<int> inclusion = y.to_vector();
  const int m = static_cast<int>(inclusion.size());
  std::vector<int> pos(static_cast<std::size_t>(t.size()), -1);
  for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(inclusion[static_cast<std::size_t>(i)])] = i;
  std::vector<ElemSet> nbhds(static_cast<std::size_t>(m), ElemSet(m));
  for (int i = 0; i < m; ++i) {
    ElemSet trace = t.min_nbhd(inclusion[static_cast<std::size_t>(i)]) & y;
    trace.for_each([&](int orig) { nbhds[static_cast<std::size_t>(i)].set(pos[static_cast<std::size_t>(orig)]); });
  }
  return SubspaceTopology{detail::make_topology(Carrier(m), std::move(nbhds)),
                          std::move(inclusion)};
}

ProductTopologyResult product_topology(const std::vector<FiniteTopology>& factors) {
  require(!factors.empty(), ErrorKind::EmptyFamily, "product needs at least one factor");
  std::vector<int> sizes;
  sizes.reserve(factors.size());
  for (const FiniteTopology& f : factors) sizes.push_back(f.size());
  ProductShape shape = ProductShape::of(sizes);
  const int k = shape.factors();

  // mask[i][v]: product points whose i-th coordinate lies in N_i(v).
  std::vector<std::vector<ElemSet>> mask(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    mask[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]),
                                             ElemSet(shape.total));
    for (int code = 0; code < shape.total; ++code) {
      int c = shape.coord(code, i);
      for (int v = 0; v < sizes[static_cast<std::size_t>(i)]; ++v)
        if (factors[static_cast<std::size_t>(i)].min_nbhd(v).test(c))
          mask[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)].set(code);
    }
  }
  std::vector<ElemSet> nbhds;
  nbhds.reserve(static_cast<std::size_t>(shape.total));
  for (int code = 0; code < shape.total; ++code) {
    ElemSet n = mask[0][static_cast<std::size_t>(shape.coord(code, 0))];
    for (int i = 1; i < k; ++i)
      n &= mask[static_cast<std::size_t>(i)][static_cast<std::size_t>(shape.coord(code, i))];
    nbhds.push_back(std::move(n));
  }
  return ProductTopologyResult{detail::make_topology(Carrier(shape.total), std::move(nbhds)),
                               shape};
}

bool topologies_equal(const FiniteTopology& a, const FiniteTopology& b) {
  require(a.carrier() == b.carrier(), ErrorKind::CarrierMismatch,
          "topology comparison needs a shared carrier");
  return a.min_nbhds() == b.min_nbhds();
}

bool is_topological_embedding(const std::vector<int>& f, const FiniteTopology& source,
                              const FiniteTopology& target) {
  require(static_cast<int>(f.size()) == source.size(), ErrorKind::Validation,
          "map must assign a value to every source element");
  ElemSet img(target.size());
  for (int v : f) {
    require(0 <= v && v < target.size(), ErrorKind::Index, "map value out of target range");
    if (img.test(v)) return false;  // not injective
    img.set(v);
  }
  SubspaceTopology sub = subspace_topology(target, img);
  std::vector<int> pos(static_cast<std::size_t>(target.size()), -1);
  for (std::size_t i = 0; i < sub.inclusion.size(); ++i)
    pos[static_cast<std::size_t>(sub.inclusion[i])] = static_cast<int>(i);
  // Homeomorphism onto the image: minimal neighborhoods must correspond.
  for (int x = 0; x < source.size(); ++x) {
    ElemSet mapped(sub.top.size());
    source.min_nbhd(x).for_each(
        [&](int z) { mapped.set(pos[static_cast<std::size_t>(f[static_cast<std::size_t>(z)])]); });
    if (mapped != sub.top.min_nbhd(pos[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])]))
      return false;
  }
  return true;
}

}  // namespace ueq
