#include "torusbt/lattice.hpp"

#include "torusbt/error.hpp"

#include <algorithm>

namespace torusbt {

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return;
  if (!a || !b || a->table() != b->table() || a->generators() != b->generators())
    throw Error(ErrorCode::GroupMismatch, "lattices are defined over different groups");
}

std::string pair_label(Element g, Element h) { return "(" + std::to_string(g) + ", " + std::to_string(h) + ")"; }

}  // namespace

GLattice GLattice::from_generators(GroupPtr group, std::size_t rank, const std::vector<IntMatrix>& generator_action) {
  const auto& gens = group->generators();
  if (generator_action.size() != gens.size())
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(gens.size()) + " generator matrices, got " +
                                              std::to_string(generator_action.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const IntMatrix& m = generator_action[i];
    if (m.rows() != rank || m.cols() != rank)
      throw Error(ErrorCode::ShapeMismatch, "generator " + std::to_string(i) + " matrix is not " +
                                                std::to_string(rank) + "x" + std::to_string(rank));
    if (abs(determinant(m)) != 1)
      throw Error(ErrorCode::NotUnimodular, "generator " + std::to_string(i) + " acts by " + m.to_string());
  }
  const std::size_t n = group->order();
  std::vector<IntMatrix> action(n);
  std::vector<bool> known(n, false);
  action[group->identity()] = IntMatrix::identity(rank);
  known[group->identity()] = true;
  std::vector<Element> queue{group->identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = group->multiply(x, gens[i]);
      IntMatrix m = action[x] * generator_action[i];
      if (!known[y]) {
        action[y] = std::move(m);
        known[y] = true;
        queue.push_back(y);
      } else if (action[y] != m) {
        throw Error(ErrorCode::NotHomomorphism,
                    "generator matrices violate a group relation at " + pair_label(x, gens[i]));
      }
    }
  }
  GLattice lat;
  lat.group_ = std::move(group);
  lat.rank_ = rank;
  lat.action_ = std::move(action);
  validate(lat);
  return lat;
}

GLattice GLattice::from_elements_unchecked(GroupPtr group, std::size_t rank, std::vector<IntMatrix> action) {
  if (action.size() != group->order()) throw Error(ErrorCode::ShapeMismatch, "one action matrix per element required");
  GLattice lat;
  lat.group_ = std::move(group);
  lat.rank_ = rank;
  lat.action_ = std::move(action);
  return lat;
}

GLattice GLattice::trivial(GroupPtr group, std::size_t rank) {
  std::vector<IntMatrix> action(group->order(), IntMatrix::identity(rank));
  return from_elements_unchecked(std::move(group), rank, std::move(action));
}

void validate(const GLattice& x) {
  const auto& g = *x.group();
  for (Element a = 0; a < g.order(); ++a) {
    const IntMatrix& m = x.action(a);
    if (m.rows() != x.rank() || m.cols() != x.rank())
      throw Error(ErrorCode::ShapeMismatch, "action of element " + std::to_string(a) + " has wrong shape");
    if (abs(determinant(m)) != 1)
      throw Error(ErrorCode::NotUnimodular, "element " + std::to_string(a) + " acts by " + m.to_string());
  }
  if (!x.action(g.identity()).is_identity())
    throw Error(ErrorCode::NotHomomorphism, "identity does not act trivially");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (x.action(a) * x.action(b) != x.action(g.multiply(a, b)))
        throw Error(ErrorCode::NotHomomorphism, "action(g)action(h) != action(gh) for pair " + pair_label(a, b));
}

std::vector<Element> coset_representatives(const FiniteGroup& g, const std::vector<Element>& subgroup) {
  std::vector<bool> covered(g.order(), false);
  std::vector<Element> reps{g.identity()};
  for (Element h : subgroup) covered[h] = true;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Element h : subgroup) covered[g.multiply(x, h)] = true;
  }
  return reps;
}

GLattice permutation_lattice(const GroupPtr& group, const std::vector<Element>& subgroup) {
  const FiniteGroup& g = *group;
  std::vector<Element> reps = coset_representatives(g, subgroup);
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (Element h : subgroup) coset_of[g.multiply(reps[c], h)] = c;
  std::vector<IntMatrix> action;
  action.reserve(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    IntMatrix m(reps.size(), reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) m(coset_of[g.multiply(a, reps[c])], c) = 1;
    action.push_back(std::move(m));
  }
  return GLattice::from_elements_unchecked(group, reps.size(), std::move(action));
}

GLattice permutation_lattice(const GroupPtr& group, const SubgroupClass& h) {
  return permutation_lattice(group, h.elements);
}

GLattice direct_sum(const GLattice& x, const GLattice& y) {
  require_same_group(x.group(), y.group());
  std::vector<IntMatrix> action;
  action.reserve(x.actions().size());
  for (Element a = 0; a < x.actions().size(); ++a) action.push_back(block_diagonal(x.action(a), y.action(a)));
  return GLattice::from_elements_unchecked(x.group(), x.rank() + y.rank(), std::move(action));
}

GLattice direct_sum(const std::vector<GLattice>& parts, const GroupPtr& group) {
  GLattice out = GLattice::trivial(group, 0);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

GLattice dual(const GLattice& x) {
  const FiniteGroup& g = *x.group();
  std::vector<IntMatrix> action;
  action.reserve(g.order());
  for (Element a = 0; a < g.order(); ++a) action.push_back(x.action(g.inverse(a)).transpose());
  return GLattice::from_elements_unchecked(x.group(), x.rank(), std::move(action));
}

GLattice restrict(const GLattice& x, const std::vector<Element>& subgroup, const std::vector<Element>& generators) {
  auto sub = make_group(x.group()->subgroup(subgroup, generators));
  std::vector<Element> sorted = subgroup;
  std::sort(sorted.begin(), sorted.end());
  std::vector<IntMatrix> action;
  action.reserve(sorted.size());
  for (Element h : sorted) action.push_back(x.action(h));
  return GLattice::from_elements_unchecked(std::move(sub), x.rank(), std::move(action));
}

GLattice restrict(const GLattice& x, const SubgroupClass& h) { return restrict(x, h.elements, h.generators); }

InvariantsCoinvariants invariants_and_coinvariants(const GLattice& x, const std::vector<Element>& generators) {
  const std::size_t r = x.rank();
  std::vector<IntMatrix> blocks;
  for (Element h : generators) blocks.push_back(x.action(h) - IntMatrix::identity(r));
  IntMatrix stacked = vstack(blocks, r);
  IntMatrix side_by_side = hstack(blocks, r);
  return {kernel_basis(stacked), cokernel_structure(side_by_side)};
}

InvariantsCoinvariants invariants_and_coinvariants(const GLattice& x, const SubgroupClass& h) {
  return invariants_and_coinvariants(x, h.generators);
}

std::vector<Integer> lattice_character(const GLattice& x) {
  std::vector<Integer> values;
  for (const auto& cls : x.group()->conjugacy_classes()) {
    const IntMatrix& m = x.action(cls.front());
    Integer tr = 0;
    for (std::size_t i = 0; i < x.rank(); ++i) tr += m(i, i);
    values.push_back(tr);
  }
  return values;
}

GLattice sublattice(const GLattice& x, const IntMatrix& inclusion) {
  if (inclusion.rows() != x.rank()) throw Error(ErrorCode::ShapeMismatch, "inclusion rows must equal lattice rank");
  std::vector<IntMatrix> action;
  action.reserve(x.actions().size());
  for (const IntMatrix& m : x.actions()) {
    auto a = solve_integer(inclusion, m * inclusion);
    if (!a) throw Error(ErrorCode::InvalidArgument, "sublattice is not stable under the group action");
    action.push_back(std::move(*a));
  }
  GLattice sub = GLattice::from_elements_unchecked(x.group(), inclusion.cols(), std::move(action));
  validate(sub);
  return sub;
}

GLattice sign_lattice(const GroupPtr& group, const std::vector<int>& signs) {
  if (signs.size() != group->order()) throw Error(ErrorCode::ShapeMismatch, "one sign per element required");
  std::vector<IntMatrix> action;
  for (int s : signs) action.push_back(IntMatrix::from_rows({{s}}));
  GLattice lat = GLattice::from_elements_unchecked(group, 1, std::move(action));
  validate(lat);
  return lat;
}

GLattice permutation_augmentation(const GroupPtr& group, const std::vector<Element>& subgroup) {
  GLattice perm = permutation_lattice(group, subgroup);
  const std::size_t n = perm.rank();
  IntMatrix inclusion(n, n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    inclusion(i, i - 1) = 1;
    inclusion(0, i - 1) = -1;
  }
  return sublattice(perm, inclusion);
}

GLattice augmentation_ideal(const GroupPtr& group) {
  return permutation_augmentation(group, std::vector<Element>{group->identity()});
}

GLattice norm_quotient(const GroupPtr& group) {
  GLattice regular = permutation_lattice(group, std::vector<Element>{group->identity()});
  const std::size_t n = regular.rank();
  // Basis: images of e_1, ..., e_{n-1}; e_0 = -(e_1 + ... + e_{n-1}) modulo N.
  std::vector<IntMatrix> action;
  for (Element a = 0; a < group->order(); ++a) {
    const IntMatrix& m = regular.action(a);
    IntMatrix q(n - 1, n - 1);
    for (std::size_t c = 1; c < n; ++c) {
      std::size_t target = 0;
      for (std::size_t r = 0; r < n; ++r)
        if (m(r, c) == 1) target = r;
      if (target == 0) {
        for (std::size_t r = 1; r < n; ++r) q(r - 1, c - 1) = -1;
      } else {
        q(target - 1, c - 1) = 1;
      }
    }
    action.push_back(std::move(q));
  }
  GLattice lat = GLattice::from_elements_unchecked(group, n - 1, std::move(action));
  validate(lat);
  return lat;
}

}  // namespace torusbt
