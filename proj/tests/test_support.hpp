#pragma once
// Lattice catalog and random lattice generation shared by the tests.

#include "oracles.hpp"

#include <random>
#include <string>
#include <vector>

namespace support {

using namespace torusbt;

struct NamedLattice {
  std::string name;
  GLattice lattice;
};

inline GLattice regular(const GroupPtr& g) { return permutation_lattice(g, std::vector<Element>{g->identity()}); }

inline const SubgroupClass& class_of_order(const GroupPtr& g, std::size_t order, std::size_t skip = 0) {
  for (const auto& c : g->subgroup_classes())
    if (c.order == order && skip-- == 0) return c;
  throw std::runtime_error("no such subgroup");
}

// Rank-1 lattice on which g acts by +1 on H and -1 off H, [G:H] = 2.
inline GLattice sign_for(const GroupPtr& g, const SubgroupClass& h) {
  std::vector<int> signs(g->order());
  for (Element e = 0; e < g->order(); ++e) signs[e] = h.contains(e) ? 1 : -1;
  return sign_lattice(g, signs);
}

// Building blocks of rank <= max_rank for random direct sums.
inline std::vector<GLattice> building_blocks(const GroupPtr& g, std::size_t max_rank) {
  std::vector<GLattice> out{GLattice::trivial(g)};
  for (const auto& h : g->subgroup_classes()) {
    if (h.index == 2) out.push_back(sign_for(g, h));
    if (h.index > 1 && h.index <= max_rank) out.push_back(permutation_lattice(g, h));
    if (h.index > 2 && h.index - 1 <= max_rank) {
      GLattice aug = permutation_augmentation(g, h.elements);
      out.push_back(aug);
      out.push_back(dual(aug));
    }
  }
  return out;
}

inline GLattice random_lattice(const GroupPtr& g, std::mt19937& rng, std::size_t max_rank) {
  auto blocks = building_blocks(g, max_rank);
  std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
  GLattice x = blocks[pick(rng)];
  for (int tries = 0; tries < 3; ++tries) {
    const GLattice& b = blocks[pick(rng)];
    if (x.rank() + b.rank() <= max_rank && rng() % 2) x = direct_sum(x, b);
  }
  return oracle::change_basis(x, oracle::random_unimodular(x.rank(), rng));
}

inline std::vector<GroupPtr> test_groups() {
  return {make_group(trivial_group()),     make_group(cyclic_group(2)),   make_group(cyclic_group(3)),
          make_group(cyclic_group(4)),     make_group(klein_four_group()), make_group(cyclic_group(6)),
          make_group(symmetric_group(3)),  make_group(dihedral_group(4)),  make_group(quaternion_group()),
          make_group(alternating_group4())};
}

// Fixture lattices plus a few over larger groups (rank <= 6, |G| <= 24).
inline std::vector<NamedLattice> catalog_lattices() {
  std::vector<NamedLattice> out;
  for (const auto& f : fixture_catalog()) out.push_back({f.name, f.lattice});
  auto s3 = make_group(symmetric_group(3));
  auto s4 = make_group(symmetric_group(4));
  auto d4 = make_group(dihedral_group(4));
  auto q8 = make_group(quaternion_group());
  auto a4 = make_group(alternating_group4());
  auto c6 = make_group(cyclic_group(6));
  out.push_back({"s3_regular", regular(s3)});
  out.push_back({"s3_sign", sign_for(s3, class_of_order(s3, 3))});
  out.push_back({"s4_standard", permutation_augmentation(s4, class_of_order(s4, 6).elements)});
  out.push_back({"s4_standard_dual", dual(permutation_augmentation(s4, class_of_order(s4, 6).elements))});
  out.push_back({"d4_square", permutation_lattice(d4, class_of_order(d4, 2))});
  out.push_back({"q8_quotient", permutation_lattice(q8, class_of_order(q8, 2))});
  out.push_back({"a4_tetra", permutation_augmentation(a4, class_of_order(a4, 3).elements)});
  out.push_back({"c6_sign_plus_z3", direct_sum(sign_for(c6, class_of_order(c6, 3)),
                                               permutation_lattice(c6, class_of_order(c6, 2)))});
  return out;
}

}  // namespace support
