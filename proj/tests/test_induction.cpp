#include "doctest.h"

#include "test_support.hpp"
#include "torusbt/induction.hpp"

using namespace torusbt;
using support::class_of_order;

namespace {

std::vector<long> coefficients(const InductionDecomposition& d) {
  std::vector<long> out;
  for (const auto& c : d.coefficients) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("permutation characters") {
  auto s3 = make_group(symmetric_group(3));
  auto chi = permutation_character(s3, class_of_order(s3, 2));
  CHECK(chi.values == std::vector<Rational>{3, 1, 0});
  CHECK(chi == character_of(permutation_lattice(s3, class_of_order(s3, 2))));
}

TEST_CASE("artin induction examples") {
  auto s3 = make_group(symmetric_group(3));
  auto d = artin_induction(character_of(permutation_lattice(s3, class_of_order(s3, 2))));
  CHECK(d.m == 1);
  CHECK(coefficients(d) == std::vector<long>{0, 1, 0, 0});
  auto c2 = make_group(cyclic_group(2));
  auto sign = artin_induction(character_of(sign_lattice(c2, {1, -1})));
  CHECK(sign.m == 1);
  CHECK(coefficients(sign) == std::vector<long>{1, -1});
  ClassFunction standard{s3, {2, 0, -1}};
  auto st = artin_induction(standard);
  CHECK(check_induction(standard, st));
}

TEST_CASE("artin induction needs m > 1 for Q8") {
  auto q8 = make_group(quaternion_group());
  // The 2-dimensional character is not rational; twice it is.
  ClassFunction chi{q8, std::vector<Rational>(q8->conjugacy_classes().size(), 0)};
  chi = character_of(support::regular(q8));
  auto d = artin_induction(chi);
  CHECK(check_induction(chi, d));
  for (const auto& [name, x] : support::catalog_lattices()) {
    CAPTURE(name);
    auto c = character_of(x);
    auto dec = artin_induction(c);
    CHECK(dec.m >= 1);
    CHECK(check_induction(c, dec));
  }
}

TEST_CASE("ono decompositions") {
  auto c2 = make_group(cyclic_group(2));
  auto z = ono_decomposition(GLattice::trivial(c2));
  CHECK(z.m == 1);
  CHECK(z.p_spec.empty());
  CHECK(z.q_spec == std::vector<std::size_t>{1});
  auto zm = ono_decomposition(sign_lattice(c2, {1, -1}));
  CHECK(zm.m == 1);
  CHECK(zm.p_spec == std::vector<std::size_t>{1});
  CHECK(zm.q_spec == std::vector<std::size_t>{0});
  auto reg = ono_decomposition(support::regular(c2));
  CHECK(reg.p_spec.empty());
  CHECK(reg.q_spec == std::vector<std::size_t>{0});
  CHECK(ono_identity_string(zm).find("zeta_{M_0}(-1)") != std::string::npos);
}

TEST_CASE("ono identity m chi_X + chi_P = chi_Q on every catalog lattice") {
  for (const auto& [name, x] : support::catalog_lattices()) {
    CAPTURE(name);
    auto d = ono_decomposition(x);
    auto g = x.group();
    auto lhs = Rational(d.m) * character_of(x);
    for (auto id : d.p_spec) lhs = lhs + permutation_character(g, g->subgroup_classes()[id]);
    ClassFunction rhs{g, std::vector<Rational>(g->conjugacy_classes().size(), 0)};
    for (auto id : d.q_spec) rhs = rhs + permutation_character(g, g->subgroup_classes()[id]);
    CHECK(lhs == rhs);
  }
}
