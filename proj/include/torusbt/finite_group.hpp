#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace torusbt {

using Element = std::size_t;
using Permutation = std::vector<std::size_t>;

/// A subgroup up to conjugacy. `elements` is the canonical representative
/// (sorted element indices); `id` is the position in the canonical ordering
/// of subgroup_classes(), which sorts by (order, element list).
struct SubgroupClass {
  std::size_t id = 0;
  std::vector<Element> elements;
  std::vector<Element> generators;
  std::size_t order = 0;
  std::size_t index = 0;
  std::size_t normalizer_order = 0;
  std::size_t class_size = 0;

  bool contains(Element g) const;
};

namespace detail {
struct SubgroupCache;
}

inline constexpr std::size_t kDefaultSubgroupBound = 48;

/// Finite group given by its multiplication table. Elements are indices
/// 0..order-1; multiply(a, b) composes as functions (apply b first) when the
/// group comes from permutations.
class FiniteGroup {
 public:
  /// Validates closure, identity, inverses and associativity.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table, std::vector<Element> generators = {});
  /// Closure of permutation generators acting on {0..degree-1}.
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators, std::size_t degree);

  std::size_t order() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element conjugate(Element g, Element x) const { return multiply(multiply(g, x), inverse(g)); }
  Element power(Element a, long k) const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  /// Generator indices; for permutation groups these are the input generators.
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::vector<Element>>& table() const { return table_; }
  const std::vector<Permutation>& permutations() const { return permutations_; }

  /// Classes ordered by (element order, class size, smallest index); the
  /// identity class comes first.
  const std::vector<std::vector<Element>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(Element g) const { return class_index_[g]; }

  /// Sorted elements of the subgroup generated by `gens`.
  std::vector<Element> generated_subgroup(const std::vector<Element>& gens) const;

  /// All subgroups up to conjugacy in canonical order. Throws
  /// Error(GroupTooLarge) when order() exceeds `bound` (at most 64).
  const std::vector<SubgroupClass>& subgroup_classes(std::size_t bound = kDefaultSubgroupBound) const;

  /// Group on the elements of a subgroup, indices following the sorted order
  /// of `elements`; generators are taken from `generators` when given.
  FiniteGroup subgroup(const std::vector<Element>& elements, const std::vector<Element>& generators = {}) const;

  std::string describe() const;

 private:
  FiniteGroup() = default;
  void finish(std::vector<Element> generators);

  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::vector<Element> generators_;
  std::vector<Permutation> permutations_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::size_t> class_index_;
  std::shared_ptr<detail::SubgroupCache> subgroup_cache_;
};

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, std::size_t bound = kDefaultSubgroupBound);
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

/// All Sylow subgroups cyclic.
bool is_metacyclic(const FiniteGroup& g, std::size_t bound = kDefaultSubgroupBound);

// Small groups used by fixtures and tests.
FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group4();
FiniteGroup klein_four_group();
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace torusbt
