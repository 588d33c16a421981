#include "doctest.h"

#include "test_support.hpp"
#include "torusbt/dirichlet.hpp"
#include "torusbt/error.hpp"
#include "torusbt/realization.hpp"
#include "torusbt/units.hpp"

using namespace torusbt;

namespace {

// Realization of Q(sqrt d) inside Q(zeta_d) for a fundamental discriminant d > 0.
AbelianRealization quadratic_realization(long d) {
  auto c2 = make_group(cyclic_group(2));
  std::map<Integer, Element> images;
  for (long a = 1; a < d; ++a)
    if (std::gcd(a, d) == 1) images[a] = oracle::kronecker(d, a) == 1 ? 0 : 1;
  return AbelianRealization::create(c2, d, images);
}

DirichletCharacter quadratic_mod(const std::vector<DirichletCharacter>& chars) {
  for (const auto& c : chars)
    if (c.order() == 2) return c;
  throw std::runtime_error("no quadratic character");
}

}  // namespace

TEST_CASE("unit group structure") {
  CHECK(unit_group_structure(1).order() == 1);
  CHECK(unit_group_structure(5).orders == std::vector<Integer>{4});
  CHECK(unit_group_structure(8).order() == 4);
  CHECK(unit_group_structure(40).order() == 16);
  for (long f : {1, 2, 4, 8, 9, 12, 15, 16, 40, 63}) {
    auto u = unit_group_structure(f);
    CHECK(u.order() == euler_phi(f));
    auto logs = unit_log_table(u);
    long units = 0;
    for (long a = 0; a < f; ++a) units += logs[a].has_value();
    CHECK(units == euler_phi(f));
  }
  CHECK(factorize(360) == std::vector<std::pair<Integer, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(next_prime(13) == 17);
  CHECK(mod_inverse(3, 7) == 5);
}

TEST_CASE("characters mod f") {
  CHECK(characters_mod(1).size() == 1);
  std::vector<unsigned> orders;
  for (const auto& c : characters_mod(5)) orders.push_back(c.order());
  CHECK(orders == std::vector<unsigned>{1, 4, 2, 4});
  auto mod8 = characters_mod(8);
  CHECK(mod8.size() == 4);
  for (const auto& c : mod8) CHECK(c.order() <= 2);
}

TEST_CASE("characters are homomorphisms") {
  for (long f : {5, 8, 12, 15, 16, 21}) {
    for (const auto& chi : characters_mod(f)) {
      for (long a = 1; a < f; ++a)
        for (long b = 1; b < f; ++b) {
          if (std::gcd(a, f) != 1 || std::gcd(b, f) != 1) continue;
          CHECK(chi.value(a) * chi.value(b) == chi.value(a * b % f));
        }
      CHECK(chi.exponent(f) == -1);
    }
  }
}

TEST_CASE("conductors") {
  auto triv = characters_mod(12).front();
  auto p = conductor_primitive(triv);
  CHECK(p.conductor == 1);
  CHECK(p.character.is_trivial());
  const auto q5 = quadratic_mod(characters_mod(5));
  CHECK(conductor_primitive(q5).conductor == 5);
  CHECK(conductor_primitive(q5).character == q5);
  bool found = false;
  for (const auto& chi : characters_mod(15)) {
    if (chi.order() != 2) continue;
    auto prim = conductor_primitive(chi);
    if (prim.conductor != 5) continue;
    found = true;
    CHECK(prim.character == q5);
  }
  CHECK(found);
}

TEST_CASE("generalized Bernoulli numbers and L(chi, -1)") {
  auto triv = characters_mod(1).front();
  CHECK(bernoulli2_chi(triv).rational_value() == make_rational(1, 6));
  CHECK(L_minus_one(triv).rational_value() == make_rational(-1, 12));
  const auto q5 = quadratic_mod(characters_mod(5));
  CHECK(bernoulli2_chi(q5).rational_value() == make_rational(4, 5));
  CHECK(L_minus_one(q5).rational_value() == make_rational(-2, 5));
  // Exactly one of the three quadratic characters mod 8 is even.
  int even = 0;
  for (const auto& c : characters_mod(8))
    if (c.order() == 2 && c.is_even()) {
      ++even;
      CHECK(bernoulli2_chi(c).rational_value() == 2);
      CHECK(L_minus_one(c).rational_value() == -1);
    }
  CHECK(even == 1);
  // Odd characters have B_{2,chi} = 0.
  for (long f : {5, 7, 8, 12, 13})
    for (const auto& c : characters_mod(f))
      if (!c.is_even() && conductor_primitive(c).conductor == f) CHECK(bernoulli2_chi(c).is_zero());
}

TEST_CASE("B_{2,chi} for quadratic characters matches the Bernoulli polynomial oracle") {
  for (long d : {5, 8, 12, 13, 17, 21, 24, 28, 29, 33}) {
    CAPTURE(d);
    auto r = quadratic_realization(d);
    CHECK(r.totally_real());
    auto chars = characters_of_group(r);
    REQUIRE(chars.size() == 2);
    for (const auto& chi : chars) {
      if (chi.is_trivial()) continue;
      Rational expected = 0;
      for (long a = 1; a <= d; ++a)
        expected += oracle::kronecker(d, a) * oracle::bernoulli_poly2(make_rational(a, d));
      expected *= d;
      CHECK(bernoulli2_chi(chi).rational_value() == expected);
    }
  }
}

TEST_CASE("zeta values of real quadratic fields agree with Siegel's formula") {
  for (long d : {5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 40, 41}) {
    CAPTURE(d);
    auto r = quadratic_realization(d);
    auto trivial_subgroup = std::vector<Element>{r.group()->identity()};
    Rational z = zeta_minus_one(trivial_subgroup, r);
    CHECK(z == oracle::real_quadratic_zeta_siegel(d));
    CHECK(z == oracle::real_quadratic_zeta_bernoulli(d));
  }
}

TEST_CASE("zeta values over fixtures") {
  const auto& r5 = *fixture("res_sqrt5").realization;
  CHECK(zeta_minus_one(r5.group()->subgroup_classes().back(), r5) == make_rational(-1, 12));
  CHECK(zeta_minus_one(r5.group()->subgroup_classes().front(), r5) == make_rational(1, 30));
  const auto& r8 = *fixture("res_sqrt2").realization;
  CHECK(zeta_minus_one(r8.group()->subgroup_classes().front(), r8) == make_rational(1, 12));
}

TEST_CASE("artin L-values") {
  const auto& r5 = *fixture("res_sqrt5").realization;
  auto c2 = r5.group();
  CHECK(artin_L_minus_one(GLattice::trivial(c2), r5).value == make_rational(-1, 12));
  CHECK(artin_L_minus_one(support::regular(c2), r5).value == make_rational(1, 30));
  auto zm = artin_L_minus_one(sign_lattice(c2, {1, -1}), r5);
  CHECK(zm.value == make_rational(-2, 5));
  std::size_t used = 0;
  for (const auto& c : zm.table)
    if (c.multiplicity != 0) {
      ++used;
      CHECK(c.conductor == 5);
      CHECK(c.multiplicity == 1);
    }
  CHECK(used == 1);
}

TEST_CASE("ono root route agrees with the character product on catalog fixtures") {
  for (const auto& fx : fixture_catalog()) {
    if (!fx.realization) continue;
    CAPTURE(fx.name);
    auto l = artin_L_minus_one(fx.lattice, *fx.realization);
    CHECK(rational_nth_root(l.ono_product, l.ono.m.get_ui()) == l.abs_value);
    CHECK(l.abs_value == abs(l.value));
  }
}

TEST_CASE("realization validation") {
  auto c2 = make_group(cyclic_group(2));
  auto c4 = make_group(cyclic_group(4));
  CHECK(AbelianRealization::create(c2, 5, {{2, 1}}).totally_real());
  CHECK(AbelianRealization::create(c2, 8, {{7, 0}, {5, 1}}).totally_real());
  auto imag = AbelianRealization::create(c4, 5, {{2, 1}});
  CHECK_FALSE(imag.totally_real());
  try {
    require_totally_real(imag);
    FAIL("expected NotTotallyReal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTotallyReal);
  }
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::OracleMismatch;
  };
  CHECK(code_of([&] { AbelianRealization::create(c2, 5, {{5, 1}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { AbelianRealization::create(c4, 5, {{4, 1}}); }) == ErrorCode::NotHomomorphism);
  CHECK(code_of([&] { AbelianRealization::create(c2, 8, {{3, 1}}); }) == ErrorCode::IncompleteRealization);
  CHECK(code_of([&] { AbelianRealization::create(c4, 8, {{3, 2}, {5, 2}}); }) == ErrorCode::NotSurjective);
  CHECK(code_of([&] { AbelianRealization::create(make_group(symmetric_group(3)), 7, {{3, 1}}); }) ==
        ErrorCode::NonAbelianRealization);
}
