#include "doctest.h"

#include "test_support.hpp"
#include "torusbt/error.hpp"

using namespace torusbt;
using support::class_of_order;

namespace {

std::vector<long> character(const GLattice& x) {
  std::vector<long> out;
  for (const auto& v : lattice_character(x)) out.push_back(v.get_si());
  return out;
}

}  // namespace

TEST_CASE("validation") {
  auto c2 = make_group(cyclic_group(2));
  CHECK_NOTHROW(GLattice::trivial(c2));
  CHECK_THROWS_AS(GLattice::from_generators(c2, 1, {IntMatrix::from_rows({{2}})}), Error);
  try {
    GLattice::from_generators(c2, 1, {IntMatrix::from_rows({{2}})});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnimodular);
  }
  auto zm = GLattice::from_generators(c2, 1, {IntMatrix::from_rows({{-1}})});
  CHECK(character(zm) == std::vector<long>{1, -1});
  // Order 3 matrix for an order 2 generator.
  auto c3mat = IntMatrix::from_rows({{0, -1}, {1, -1}});
  try {
    GLattice::from_generators(c2, 2, {c3mat});
    FAIL("expected NotHomomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHomomorphism);
  }
  CHECK_THROWS_AS(GLattice::from_generators(c2, 2, {IntMatrix::identity(3)}), Error);
}

TEST_CASE("permutation lattices") {
  auto c2 = make_group(cyclic_group(2));
  auto reg = support::regular(c2);
  CHECK(reg.rank() == 2);
  CHECK(reg.action(1) == IntMatrix::from_rows({{0, 1}, {1, 0}}));
  auto s3 = make_group(symmetric_group(3));
  CHECK(permutation_lattice(s3, s3->subgroup_classes().back()).rank() == 1);
  auto x = permutation_lattice(s3, class_of_order(s3, 2));
  CHECK(x.rank() == 3);
  CHECK(character(x) == std::vector<long>{3, 1, 0});
  auto reps = coset_representatives(*s3, class_of_order(s3, 2).elements);
  CHECK(reps.size() == 3);
  CHECK(reps[0] == s3->identity());
}

TEST_CASE("direct sums and duals") {
  auto c2 = make_group(cyclic_group(2));
  auto z = GLattice::trivial(c2);
  auto zm = sign_lattice(c2, {1, -1});
  auto s = direct_sum(z, zm);
  CHECK(s.rank() == 2);
  CHECK(s.action(1) == IntMatrix::from_rows({{1, 0}, {0, -1}}));
  CHECK(direct_sum(z, GLattice::trivial(c2, 0)).actions() == z.actions());
  auto reg = support::regular(c2);
  auto rr = direct_sum(reg, reg);
  CHECK(rr.rank() == 4);
  CHECK(rr.action(1).is_permutation_matrix());
  CHECK(character(dual(reg)) == character(reg));
  auto a4 = make_group(alternating_group4());
  auto aug = permutation_augmentation(a4, class_of_order(a4, 3).elements);
  CHECK(aug.rank() == 3);
  for (Element g = 0; g < a4->order(); ++g) CHECK(dual(aug).action(g) == aug.action(a4->inverse(g)).transpose());
}

TEST_CASE("restriction") {
  auto s3 = make_group(symmetric_group(3));
  auto x = permutation_lattice(s3, class_of_order(s3, 2));
  auto triv = restrict(x, s3->subgroup_classes().front());
  CHECK(triv.group()->order() == 1);
  CHECK(triv.rank() == 3);
  auto to_c3 = restrict(x, class_of_order(s3, 3));
  CHECK(to_c3.group()->order() == 3);
  CHECK(character(to_c3) == std::vector<long>{3, 0, 0});
}

TEST_CASE("invariants and coinvariants") {
  auto c2 = make_group(cyclic_group(2));
  auto full = c2->subgroup_classes().back();
  auto zm = invariants_and_coinvariants(sign_lattice(c2, {1, -1}), full);
  CHECK(zm.invariant_basis.cols() == 0);
  CHECK(zm.coinvariants == FinAbGroup({2}, 0));
  auto reg = invariants_and_coinvariants(support::regular(c2), full);
  REQUIRE(reg.invariant_basis.cols() == 1);
  CHECK(reg.invariant_basis.column(0) == std::vector<Integer>{1, 1});
  CHECK(reg.coinvariants == FinAbGroup({}, 1));
  auto s3 = make_group(symmetric_group(3));
  auto z = invariants_and_coinvariants(GLattice::trivial(s3), class_of_order(s3, 2));
  CHECK(z.invariant_basis.cols() == 1);
  CHECK(z.coinvariants == FinAbGroup({}, 1));
}

TEST_CASE("characters") {
  auto s3 = make_group(symmetric_group(3));
  CHECK(character(GLattice::trivial(s3, 3)) == std::vector<long>{3, 3, 3});
  CHECK(character(augmentation_ideal(s3)) == std::vector<long>{5, -1, -1});
  CHECK(character(norm_quotient(s3)) == std::vector<long>{5, -1, -1});
}

TEST_CASE("sublattices") {
  auto c2 = make_group(cyclic_group(2));
  auto reg = support::regular(c2);
  auto norm = sublattice(reg, IntMatrix::from_rows({{1}, {1}}));
  CHECK(character(norm) == std::vector<long>{1, 1});
  auto anti = sublattice(reg, IntMatrix::from_rows({{1}, {-1}}));
  CHECK(character(anti) == std::vector<long>{1, -1});
  CHECK_THROWS_AS(sublattice(reg, IntMatrix::from_rows({{1}, {0}})), Error);
}

TEST_CASE("random basis changes keep characters and validity") {
  std::mt19937 rng(3);
  for (const auto& g : support::test_groups()) {
    for (int i = 0; i < 5; ++i) {
      auto x = support::random_lattice(g, rng, 5);
      CHECK_NOTHROW(validate(x));
      auto y = oracle::change_basis(x, oracle::random_unimodular(x.rank(), rng));
      CHECK(lattice_character(x) == lattice_character(y));
      CHECK(lattice_character(dual(dual(x))) == lattice_character(x));
    }
  }
}
