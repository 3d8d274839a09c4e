#include "ueq/equiv.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>

namespace ueq {

namespace {

// Scanning elements in ascending order and labeling each previously unseen
// key with the current element yields block ids that are block minima, i.e.
// the canonical form.
std::vector<int> label_by_first_occurrence(int n, const std::vector<std::uint64_t>& keys) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::unordered_map<std::uint64_t, int> first;
  first.reserve(static_cast<std::size_t>(n) * 2);
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = first.try_emplace(keys[static_cast<std::size_t>(x)], x);
    (void)fresh;
    ids[static_cast<std::size_t>(x)] = it->second;
  }
  return ids;
}

}  // namespace

EquivRel EquivRel::from_canonical_ids(Carrier carrier, std::vector<int> ids) {
  require(static_cast<int>(ids.size()) == carrier.size, ErrorKind::Validation,
          "id vector length must equal carrier size");
  for (int x = 0; x < carrier.size; ++x) {
    int b = ids[static_cast<std::size_t>(x)];
    require(0 <= b && b <= x, ErrorKind::Validation,
            "block id must be <= element at element " + std::to_string(x));
    require(ids[static_cast<std::size_t>(b)] == b, ErrorKind::Validation,
            "block id must label itself at element " + std::to_string(x));
  }
  return EquivRel(carrier, std::move(ids));
}

EquivRel EquivRel::from_blocks(Carrier carrier, const std::vector<std::vector<int>>& blocks) {
  const int n = carrier.size;
  std::vector<int> ids(static_cast<std::size_t>(n), -1);
  for (const auto& block : blocks) {
    require(!block.empty(), ErrorKind::Validation, "empty block");
    int mn = *std::min_element(block.begin(), block.end());
    for (int x : block) {
      require(0 <= x && x < n, ErrorKind::Index, "block element out of range: " + std::to_string(x));
      require(ids[static_cast<std::size_t>(x)] == -1, ErrorKind::Overlap,
              "element in two blocks: " + std::to_string(x));
      ids[static_cast<std::size_t>(x)] = mn;
    }
  }
  for (int x = 0; x < n; ++x)
    require(ids[static_cast<std::size_t>(x)] != -1, ErrorKind::Coverage,
            "element not covered by any block: " + std::to_string(x));
  return EquivRel(carrier, std::move(ids));
}

EquivRel EquivRel::from_pairs(Carrier carrier, const std::vector<std::pair<int, int>>& pairs) {
  const int n = carrier.size;
  // Union-find with path halving; roots are remapped to block minima below.
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
  for (const auto& [a, b] : pairs) {
    require(0 <= a && a < n, ErrorKind::Index, "pair element out of range: " + std::to_string(a));
    require(0 <= b && b < n, ErrorKind::Index, "pair element out of range: " + std::to_string(b));
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) ids[static_cast<std::size_t>(x)] = find(x);
  return EquivRel(carrier, std::move(ids));
}

EquivRel EquivRel::delta(Carrier carrier) {
  std::vector<int> ids(static_cast<std::size_t>(carrier.size));
  std::iota(ids.begin(), ids.end(), 0);
  return EquivRel(carrier, std::move(ids));
}

EquivRel EquivRel::full(Carrier carrier) {
  return EquivRel(carrier, std::vector<int>(static_cast<std::size_t>(carrier.size), 0));
}

int EquivRel::label(int x) const {
  require(0 <= x && x < carrier_.size, ErrorKind::Index,
          "element out of range: " + std::to_string(x));
  return id_[static_cast<std::size_t>(x)];
}

bool EquivRel::related(int x, int y) const { return label(x) == label(y); }

std::vector<int> EquivRel::labels() const {
  std::vector<int> out;
  for (int x = 0; x < carrier_.size; ++x)
    if (id_[static_cast<std::size_t>(x)] == x) out.push_back(x);
  return out;
}

int EquivRel::num_blocks() const { return static_cast<int>(labels().size()); }

std::vector<ElemSet> EquivRel::blocks() const {
  std::vector<int> ls = labels();
  std::vector<int> pos(static_cast<std::size_t>(carrier_.size), -1);
  for (std::size_t i = 0; i < ls.size(); ++i) pos[static_cast<std::size_t>(ls[i])] = static_cast<int>(i);
  std::vector<ElemSet> out(ls.size(), ElemSet(carrier_.size));
  for (int x = 0; x < carrier_.size; ++x)
    out[static_cast<std::size_t>(pos[static_cast<std::size_t>(id_[static_cast<std::size_t>(x)])])].set(x);
  return out;
}

std::vector<std::pair<int, int>> EquivRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < carrier_.size; ++x)
    for (int y = x; y < carrier_.size; ++y)
      if (id_[static_cast<std::size_t>(x)] == id_[static_cast<std::size_t>(y)]) out.emplace_back(x, y);
  return out;
}

EquivRel meet(const EquivRel& a, const EquivRel& b) {
  require(a.carrier() == b.carrier(), ErrorKind::CarrierMismatch,
          "meet needs relations on the same carrier");
  const int n = a.size();
  std::vector<std::uint64_t> keys(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    keys[static_cast<std::size_t>(x)] =
        static_cast<std::uint64_t>(a.block_ids()[static_cast<std::size_t>(x)]) *
            static_cast<std::uint64_t>(n) +
        static_cast<std::uint64_t>(b.block_ids()[static_cast<std::size_t>(x)]);
  return EquivRel::from_canonical_ids(a.carrier(), label_by_first_occurrence(n, keys));
}

ElemSet block_of(const EquivRel& u, int x) {
  int lbl = u.label(x);
  ElemSet s(u.size());
  for (int y = 0; y < u.size(); ++y)
    if (u.block_ids()[static_cast<std::size_t>(y)] == lbl) s.set(y);
  return s;
}

ElemSet saturate(const EquivRel& u, const ElemSet& a) {
  require(a.universe() == u.size(), ErrorKind::Index, "subset universe must match carrier");
  std::vector<char> hit(static_cast<std::size_t>(u.size()), 0);
  a.for_each([&](int x) { hit[static_cast<std::size_t>(u.label(x))] = 1; });
  ElemSet s(u.size());
  for (int y = 0; y < u.size(); ++y)
    if (hit[static_cast<std::size_t>(u.block_ids()[static_cast<std::size_t>(y)])]) s.set(y);
  return s;
}

bool refines(const EquivRel& a, const EquivRel& b) {
  require(a.carrier() == b.carrier(), ErrorKind::CarrierMismatch,
          "refines needs relations on the same carrier");
  // Every element must be b-related to its a-representative.
  for (int x = 0; x < a.size(); ++x) {
    int rep = a.block_ids()[static_cast<std::size_t>(x)];
    if (b.block_ids()[static_cast<std::size_t>(x)] != b.block_ids()[static_cast<std::size_t>(rep)])
      return false;
  }
  return true;
}

EquivRel preimage_relation(const std::vector<int>& f, const EquivRel& v) {
  const int n = static_cast<int>(f.size());
  Carrier domain(n);
  std::vector<std::uint64_t> keys(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int fx = f[static_cast<std::size_t>(x)];
    require(0 <= fx && fx < v.size(), ErrorKind::Index,
            "function value out of range: " + std::to_string(fx));
    keys[static_cast<std::size_t>(x)] =
        static_cast<std::uint64_t>(v.block_ids()[static_cast<std::size_t>(fx)]);
  }
  return EquivRel::from_canonical_ids(domain, label_by_first_occurrence(n, keys));
}

EquivRel product_lift(int factor_index, const std::vector<Carrier>& factor_carriers,
                      const EquivRel& u) {
  require(0 <= factor_index && factor_index < static_cast<int>(factor_carriers.size()),
          ErrorKind::Index, "factor index out of range");
  require(factor_carriers[static_cast<std::size_t>(factor_index)] == u.carrier(),
          ErrorKind::CarrierMismatch, "relation carrier must match its factor");
  std::vector<int> sizes;
  sizes.reserve(factor_carriers.size());
  for (const Carrier& c : factor_carriers) sizes.push_back(c.size);
  ProductShape shape = ProductShape::of(sizes);
  std::vector<std::uint64_t> keys(static_cast<std::size_t>(shape.total));
  for (int code = 0; code < shape.total; ++code)
    keys[static_cast<std::size_t>(code)] = static_cast<std::uint64_t>(
        u.block_ids()[static_cast<std::size_t>(shape.coord(code, factor_index))]);
  return EquivRel::from_canonical_ids(Carrier(shape.total),
                                      label_by_first_occurrence(shape.total, keys));
}

EquivRel restrict_relation(const EquivRel& u, const std::vector<int>& elements) {
  require(!elements.empty(), ErrorKind::EmptySubset, "cannot restrict to the empty set");
  const int m = static_cast<int>(elements.size());
  std::vector<std::uint64_t> keys(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    keys[static_cast<std::size_t>(i)] =
        static_cast<std::uint64_t>(u.label(elements[static_cast<std::size_t>(i)]));
  return EquivRel::from_canonical_ids(Carrier(m), label_by_first_occurrence(m, keys));
}

}  // namespace ueq
