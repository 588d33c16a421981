#pragma once

#include "torusbt/finite_group.hpp"
#include "torusbt/int_matrix.hpp"

#include <memory>
#include <vector>

namespace torusbt {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// Free Z-module of finite rank with a G-action, stored as one matrix per
/// group element (acting on column vectors).
class GLattice {
 public:
  GLattice() = default;

  /// Expands generator matrices (one per entry of group->generators()) to
  /// the whole group and validates. Throws NotUnimodular / NotHomomorphism.
  static GLattice from_generators(GroupPtr group, std::size_t rank, const std::vector<IntMatrix>& generator_action);
  /// Takes the per-element action as given; call validate() before trusting it.
  static GLattice from_elements_unchecked(GroupPtr group, std::size_t rank, std::vector<IntMatrix> action);
  static GLattice trivial(GroupPtr group, std::size_t rank = 1);

  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& action(Element g) const { return action_[g]; }
  const std::vector<IntMatrix>& actions() const { return action_; }

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> action_;
};

/// Throws NotUnimodular or NotHomomorphism naming the offending element(s).
void validate(const GLattice& x);

/// Z[G/H] with G permuting left cosets; the coset H itself is basis vector 0.
GLattice permutation_lattice(const GroupPtr& group, const std::vector<Element>& subgroup);
GLattice permutation_lattice(const GroupPtr& group, const SubgroupClass& h);

/// Left coset representatives of H in G: the identity first, then the
/// remaining cosets ordered by their smallest element.
std::vector<Element> coset_representatives(const FiniteGroup& g, const std::vector<Element>& subgroup);

GLattice direct_sum(const GLattice& x, const GLattice& y);
GLattice direct_sum(const std::vector<GLattice>& parts, const GroupPtr& group);
GLattice dual(const GLattice& x);

/// Lattice over the subgroup group built from `subgroup` (see FiniteGroup::subgroup).
GLattice restrict(const GLattice& x, const std::vector<Element>& subgroup, const std::vector<Element>& generators = {});
GLattice restrict(const GLattice& x, const SubgroupClass& h);

struct InvariantsCoinvariants {
  IntMatrix invariant_basis;  // columns, column Hermite form
  FinAbGroup coinvariants;
};

/// X^H and X_H for H generated by `generators`.
InvariantsCoinvariants invariants_and_coinvariants(const GLattice& x, const std::vector<Element>& generators);
InvariantsCoinvariants invariants_and_coinvariants(const GLattice& x, const SubgroupClass& h);

/// Trace of the action on each conjugacy class (class order of the group).
std::vector<Integer> lattice_character(const GLattice& x);

/// Action matrices of Q on a G-stable sublattice with basis `inclusion`
/// (columns), i.e. the unique integer matrices with inclusion * A_g = X_g * inclusion.
GLattice sublattice(const GLattice& x, const IntMatrix& inclusion);

// Basic building blocks.
GLattice sign_lattice(const GroupPtr& group, const std::vector<int>& signs);  // rank 1, g -> signs[g]
/// Augmentation ideal ker(Z[G] -> Z); the cocharacter lattice of the norm-one torus.
GLattice augmentation_ideal(const GroupPtr& group);
/// Z[G] / Z*N; the cocharacter lattice of the dual of the norm-one torus.
GLattice norm_quotient(const GroupPtr& group);
/// Sum-zero vectors in Z[G/H].
GLattice permutation_augmentation(const GroupPtr& group, const std::vector<Element>& subgroup);

}  // namespace torusbt
