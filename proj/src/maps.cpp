#include "ueq/maps.hpp"

#include <algorithm>
#include <string>

namespace ueq {

SpaceMap::SpaceMap(UeqClass src, UeqClass tgt, std::vector<int> vals)
    : source(std::move(src)), target(std::move(tgt)), values(std::move(vals)) {
  require(static_cast<int>(values.size()) == source.size(), ErrorKind::Validation,
          "map must assign a value to every source element");
  for (int v : values)
    require(0 <= v && v < target.size(), ErrorKind::Index,
            "map value out of target range: " + std::to_string(v));
}

bool SpaceMap::is_injective() const {
  std::vector<char> seen(static_cast<std::size_t>(target.size()), 0);
  for (int v : values) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool SpaceMap::is_surjective() const { return image().count() == target.size(); }

ElemSet SpaceMap::image() const {
  ElemSet img(target.size());
  for (int v : values) img.set(v);
  return img;
}

std::vector<int> compose_values(const std::vector<int>& inner, const std::vector<int>& outer) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

bool is_continuous(const SpaceMap& f) {
  for (const EquivRel& v : f.target.members())
    if (!f.source.contains(preimage_relation(f.values, v))) return false;
  return true;
}

bool is_open_map(const SpaceMap& f) {
  const int n = f.source.size();
  for (const EquivRel& u : f.source.members()) {
    // Image of each u-block, indexed by block label.
    std::vector<ElemSet> img(static_cast<std::size_t>(n), ElemSet(f.target.size()));
    for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(u.label(x))].set(f.apply(x));
    bool found = false;
    for (const EquivRel& v : f.target.members()) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = block_of(v, f.apply(x)).is_subset_of(img[static_cast<std::size_t>(u.label(x))]);
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_u_surjection(const SpaceMap& f) {
  ElemSet img = f.image();
  for (const EquivRel& v : f.target.members())
    for (int y = 0; y < f.target.size(); ++y)
      if (!block_of(v, y).intersects(img)) return false;
  return true;
}

namespace {

std::vector<int> inverse_values(const SpaceMap& f) {
  std::vector<int> inv(static_cast<std::size_t>(f.target.size()), -1);
  for (int x = 0; x < f.source.size(); ++x) inv[static_cast<std::size_t>(f.apply(x))] = x;
  return inv;
}

}  // namespace

bool is_u_equivalence(const SpaceMap& f) {
  if (f.source.size() != f.target.size() || !f.is_injective()) return false;
  if (!is_continuous(f)) return false;
  SpaceMap inverse(f.target, f.source, inverse_values(f));
  return is_continuous(inverse);
}

bool embedding_definitional(const SpaceMap& f) {
  if (!f.is_injective()) return false;
  RelativeSpace onto = relative(f.target, f.image());
  // Corestriction of f onto its image, re-indexed.
  std::vector<int> pos(static_cast<std::size_t>(f.target.size()), -1);
  for (std::size_t i = 0; i < onto.inclusion.size(); ++i)
    pos[static_cast<std::size_t>(onto.inclusion[i])] = static_cast<int>(i);
  std::vector<int> corestricted(f.values.size());
  for (std::size_t x = 0; x < f.values.size(); ++x)
    corestricted[x] = pos[static_cast<std::size_t>(f.values[x])];
  SpaceMap onto_image(f.source, onto.cls, corestricted);
  return is_u_equivalence(onto_image);
}

bool embedding_characterization(const SpaceMap& f) {
  if (!f.is_injective() || !is_continuous(f)) return false;
  UeqClass pulled = induced_class(f.source.carrier(), {MapInto{f.values, f.target}});
  return f.source == pulled;
}

bool is_u_embedding(const SpaceMap& f) {
  bool by_definition = embedding_definitional(f);
  bool by_characterization = embedding_characterization(f);
  require(by_definition == by_characterization, ErrorKind::CharacterizationMismatch,
          "embedding characterizations disagree");
  return by_definition;
}

bool left_inverse_embedding_check(const SpaceMap& f, const SpaceMap& g) {
  require(f.target.carrier() == g.source.carrier() && f.source.carrier() == g.target.carrier(),
          ErrorKind::CarrierMismatch, "left inverse must map back to the source carrier");
  require(f.target == g.source && f.source == g.target, ErrorKind::Validation,
          "left inverse must connect the same two spaces");
  for (int x = 0; x < f.source.size(); ++x)
    require(g.apply(f.apply(x)) == x, ErrorKind::NotLeftInverse,
            "g o f is not the identity at element " + std::to_string(x));
  require(is_continuous(f), ErrorKind::NotContinuous, "f is not continuous");
  require(is_continuous(g), ErrorKind::NotContinuous, "g is not continuous");
  return is_u_embedding(f);
}

bool is_transverse(const SpaceMap& phi) {
  EquivRel kernel = preimage_relation(phi.values, EquivRel::delta(phi.target.carrier()));
  EquivRel diagonal = EquivRel::delta(phi.source.carrier());
  for (const EquivRel& u : phi.source.members())
    if (meet(kernel, u) == diagonal) return true;
  return false;
}

ElemSet coincidence_set(const SpaceMap& alpha, const SpaceMap& beta) {
  require(alpha.source.carrier() == beta.source.carrier(), ErrorKind::CarrierMismatch,
          "coincidence needs maps with the same source carrier");
  require(alpha.target.carrier() == beta.target.carrier(), ErrorKind::CarrierMismatch,
          "coincidence needs maps with the same target carrier");
  ElemSet c(alpha.source.size());
  for (int x = 0; x < alpha.source.size(); ++x)
    if (alpha.apply(x) == beta.apply(x)) c.set(x);
  return c;
}

bool subset_open_by_inclusion(const UeqClass& space, const ElemSet& a) {
  RelativeSpace sub = relative(space, a);
  SpaceMap inclusion(sub.cls, space, sub.inclusion);
  return is_open_map(inclusion);
}

bool subset_open_by_refinement(const UeqClass& space, const ElemSet& a) {
  require(!a.empty(), ErrorKind::EmptySubset, "subset openness needs a nonempty subset");
  for (const EquivRel& u : space.members()) {
    bool found = false;
    for (const EquivRel& v : space.members()) {
      bool ok = true;
      a.for_each([&](int x) {
        if (ok) ok = block_of(v, x).is_subset_of(block_of(u, x) & a);
      });
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool subset_open_by_inner_relation(const UeqClass& space, const ElemSet& a) {
  require(!a.empty(), ErrorKind::EmptySubset, "subset openness needs a nonempty subset");
  for (const EquivRel& v : space.members()) {
    bool ok = true;
    a.for_each([&](int x) {
      if (ok) ok = block_of(v, x).is_subset_of(a);
    });
    if (ok) return true;
  }
  return false;
}

bool is_u_open_subset(const UeqClass& space, const ElemSet& a) {
  bool by_inclusion = subset_open_by_inclusion(space, a);
  if (is_rich(space)) {
    bool by_inner = subset_open_by_inner_relation(space, a);
    require(by_inclusion == by_inner, ErrorKind::CharacterizationMismatch,
            "subset openness characterizations disagree on a rich class");
  }
  return by_inclusion;
}

}  // namespace ueq
