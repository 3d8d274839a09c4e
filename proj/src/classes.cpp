#include "ueq/classes.hpp"

#include <algorithm>
#include <set>

namespace ueq {

namespace detail {

std::pair<std::vector<EquivRel>, int> meet_closure(const std::vector<EquivRel>& generators) {
  std::set<EquivRel> members(generators.begin(), generators.end());
  std::vector<EquivRel> frontier(members.begin(), members.end());
  int rounds = 0;
  while (!frontier.empty()) {
    ++rounds;
    std::vector<EquivRel> fresh;
    for (const EquivRel& f : frontier)
      for (const EquivRel& m : members) {
        EquivRel mt = meet(f, m);
        if (!members.count(mt)) fresh.push_back(mt);
      }
    // Dedup within the round, then grow the set and recurse on the additions.
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    members.insert(fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  return {std::vector<EquivRel>(members.begin(), members.end()), rounds};
}

}  // namespace detail

UeqClass UeqClass::generate(Carrier carrier, std::vector<EquivRel> generators) {
  require(!generators.empty(), ErrorKind::EmptyGeneratorSet,
          "a class needs at least one generator");
  for (const EquivRel& g : generators)
    require(g.carrier() == carrier, ErrorKind::CarrierMismatch,
            "generator carrier does not match class carrier");
  auto [members, rounds] = detail::meet_closure(generators);
  (void)rounds;
  EquivRel bottom = generators.front();
  for (const EquivRel& g : generators) bottom = meet(bottom, g);
  return UeqClass(carrier, std::move(generators), std::move(members), std::move(bottom));
}

bool UeqClass::contains(const EquivRel& u) const {
  require(u.carrier() == carrier_, ErrorKind::CarrierMismatch,
          "membership test needs a relation on the class carrier");
  return std::binary_search(members_.begin(), members_.end(), u);
}

UeqClass induced_class(Carrier domain, const std::vector<MapInto>& maps) {
  require(!maps.empty(), ErrorKind::EmptyFamily, "induction needs at least one function");
  std::vector<EquivRel> gens;
  for (const MapInto& m : maps) {
    require(static_cast<int>(m.values.size()) == domain.size, ErrorKind::CarrierMismatch,
            "all functions must share the domain carrier");
    for (const EquivRel& g : m.target.generators()) gens.push_back(preimage_relation(m.values, g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return UeqClass::generate(domain, std::move(gens));
}

RelativeSpace relative(const UeqClass& c, const ElemSet& a) {
  require(a.universe() == c.size(), ErrorKind::CarrierMismatch,
          "subset universe must match the class carrier");
  require(!a.empty(), ErrorKind::EmptySubset, "relative class needs a nonempty subset");
  std::vector<int> inclusion = a.to_vector();
  std::vector<EquivRel> gens;
  gens.reserve(c.generators().size());
  for (const EquivRel& g : c.generators()) gens.push_back(restrict_relation(g, inclusion));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return RelativeSpace{UeqClass::generate(Carrier(static_cast<int>(inclusion.size())),
                                          std::move(gens)),
                       std::move(inclusion)};
}

ProductSpace product_class(const std::vector<UeqClass>& factors) {
  require(!factors.empty(), ErrorKind::EmptyFamily, "product needs at least one factor");
  std::vector<Carrier> carriers;
  std::vector<int> sizes;
  for (const UeqClass& f : factors) {
    carriers.push_back(f.carrier());
    sizes.push_back(f.size());
  }
  ProductShape shape = ProductShape::of(sizes);
  std::vector<EquivRel> gens;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const EquivRel& g : factors[i].generators())
      gens.push_back(product_lift(static_cast<int>(i), carriers, g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return ProductSpace{UeqClass::generate(Carrier(shape.total), std::move(gens)), shape};
}

bool is_rich(const UeqClass& c) { return c.contains(EquivRel::full(c.carrier())); }

bool is_separated(const UeqClass& c) { return c.bottom() == EquivRel::delta(c.carrier()); }

std::vector<CoverWitness> totally_bounded_witness(const UeqClass& c) {
  std::vector<CoverWitness> out;
  out.reserve(c.members().size());
  for (const EquivRel& m : c.members()) out.push_back(CoverWitness{m, m.labels()});
  return out;
}

}  // namespace ueq
