#include "doctest.h"

#include "oracles.hpp"
#include "torusbt/cyclotomic.hpp"
#include "torusbt/error.hpp"
#include "torusbt/int_matrix.hpp"

#include <random>

using namespace torusbt;

TEST_CASE("rationals are canonical and round-trip through strings") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("rational_nth_root") {
  CHECK(rational_nth_root(make_rational(1, 900), 2) == make_rational(1, 30));
  CHECK(rational_nth_root(Rational(8), 3) == Rational(2));
  CHECK_FALSE(rational_nth_root(Rational(2), 2).has_value());
  CHECK(rational_nth_root(make_rational(16, 81), 4) == make_rational(2, 3));
  CHECK_THROWS_AS(rational_nth_root(Rational(-1), 3), Error);
}

TEST_CASE("valuations and prime-to-p parts") {
  CHECK(valuation(Integer(48), 2) == 4);
  CHECK(prime_to_part(make_rational(12, 10), 2) == make_rational(3, 5));
  CHECK(lcm(Integer(4), Integer(6)) == 12);
}

TEST_CASE("smith normal form examples") {
  auto check_form = [](const IntMatrix& m, const std::vector<long>& expected) {
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.V * s.V_inv == IntMatrix::identity(s.V.rows()));
    auto d = s.diagonal();
    REQUIRE(d.size() == expected.size());
    for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == expected[i]);
  };
  check_form(IntMatrix::identity(3), {1, 1, 1});
  check_form(IntMatrix::from_rows({{2, 4}, {6, 8}}), {2, 4});
  check_form(IntMatrix(2, 3), {0, 0});
}

TEST_CASE("cokernel structure examples") {
  CHECK(cokernel_structure(IntMatrix::from_rows({{2}})) == FinAbGroup({2}, 0));
  CHECK(cokernel_structure(IntMatrix(2, 0)) == FinAbGroup({}, 2));
  CHECK(cokernel_structure(IntMatrix::from_rows({{2, 4}, {6, 8}})) == FinAbGroup({2, 4}, 0));
  CHECK(FinAbGroup::from_cyclic_orders({4, 6}).to_string() == "Z/2 x Z/12");
  CHECK(FinAbGroup({}, 0).to_string() == "0");
}

TEST_CASE("smith form agrees with the determinantal divisor oracle on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = trial % 3 == 0 ? entry(rng) % 2 * 2 : entry(rng);
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
    CHECK(oracle::same_group(cokernel_structure(m), oracle::cokernel_by_minors(m)));
    if (r == c) {
      std::vector<std::vector<Integer>> rows = m.to_rows();
      CHECK(determinant(m) == oracle::det(rows));
      if (determinant(m) != 0) CHECK(cokernel_structure(m).order() == abs(determinant(m)));
    }
  }
}

TEST_CASE("kernel, hermite form and integer solving") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = entry(rng);
    IntMatrix k = kernel_basis(m);
    CHECK((m * k).is_zero());
    // The kernel is saturated: coker of its basis is free.
    CHECK(cokernel_structure(k).invariant_factors().empty());
    IntMatrix h = hermite_normal_form(m);
    CHECK(h.rows() <= 3);
    // Same row space: each row of h solves against m^T and vice versa.
    CHECK(solve_integer(m.transpose(), h.transpose()).has_value());
    CHECK(solve_integer(h.transpose(), m.transpose()).has_value());
    std::vector<Integer> x{entry(rng), entry(rng), entry(rng), entry(rng)};
    auto b = m * x;
    auto y = solve_integer(m, b);
    REQUIRE(y.has_value());
    CHECK(m * *y == b);
  }
  CHECK_FALSE(solve_integer(IntMatrix::from_rows({{2}}), std::vector<Integer>{1}).has_value());
  IntMatrix u = IntMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(u * unimodular_inverse(u) == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows({{2}})), Error);
}

TEST_CASE("torsion counts modulo n") {
  // ker of [2] on Z/4 is {0, 2}; coker of [2] on Z/4 is Z/2.
  CHECK(kernel_order_mod(IntMatrix::from_rows({{2}}), 4) == 2);
  CHECK(cokernel_order_mod(IntMatrix::from_rows({{2}}), 4) == 2);
  CHECK(kernel_order_mod(IntMatrix(0, 2), 3) == 9);
  CHECK(kernel_order_mod(IntMatrix::from_rows({{3, 0}, {0, 1}}), 9) == 3);
}

TEST_CASE("cyclotomic polynomials") {
  auto as_longs = [](unsigned n) {
    std::vector<long> v;
    for (const auto& c : cyclotomic_polynomial(n)) v.push_back(c.get_si());
    return v;
  };
  CHECK(as_longs(1) == std::vector<long>{-1, 1});
  CHECK(as_longs(4) == std::vector<long>{1, 0, 1});
  CHECK(as_longs(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(as_longs(15).size() == 9);
  CHECK(euler_phi(40) == 16);
}

TEST_CASE("cyclotomic arithmetic") {
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 8u, 12u, 15u}) {
    CHECK(CyclotomicNumber::root_power(n, 1).pow(n) == CyclotomicNumber::from_rational(n, 1));
    CHECK(CyclotomicNumber::from_rational(n, make_rational(3, 2)).trace() == Rational(euler_phi(n)) * make_rational(3, 2));
  }
  // N(1 - zeta_p) = p, Tr(zeta_p) = -1.
  auto one = CyclotomicNumber::from_rational(7, 1);
  CHECK((one - CyclotomicNumber::root_power(7, 1)).norm() == 7);
  CHECK(CyclotomicNumber::root_power(7, 1).trace() == -1);
  // zeta + zeta^-1 for n = 5 satisfies x^2 + x - 1 = 0.
  auto w = CyclotomicNumber::root_power(5, 1) + CyclotomicNumber::root_power(5, -1);
  CHECK((w * w + w - CyclotomicNumber::from_rational(5, 1)).is_zero());
  CHECK_FALSE(w.is_rational());
  CHECK_THROWS_AS(w.rational_value(), Error);
  // Galois orbit product is rational.
  auto prod = CyclotomicNumber::from_rational(5, 1);
  for (long j = 1; j < 5; ++j) prod *= (CyclotomicNumber::from_rational(5, 2) - CyclotomicNumber::root_power(5, j));
  CHECK(prod.is_rational());
  CHECK(prod.rational_value() == 31);  // Phi_5(2)
  CHECK(CyclotomicNumber::root_power(4, 1).complex_conjugate() == CyclotomicNumber::root_power(4, 3));
  CHECK(CyclotomicNumber::root_power(3, 1).lift(6) == CyclotomicNumber::root_power(6, 2));
  CHECK(CyclotomicNumber::root_power(2, 1) == CyclotomicNumber::from_rational(1, -1));
}
