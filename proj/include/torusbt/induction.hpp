#pragma once

#include "torusbt/lattice.hpp"
#include "torusbt/rational.hpp"

#include <string>
#include <vector>

namespace torusbt {

/// Rational class function, one value per conjugacy class (group class order).
struct ClassFunction {
  GroupPtr group;
  std::vector<Rational> values;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; }
};

ClassFunction character_of(const GLattice& x);
/// Character of Z[G/H]: chi(g) = #{x : x^-1 g x in H} / |H|.
ClassFunction permutation_character(const GroupPtr& group, const SubgroupClass& h);

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(const Rational& s, const ClassFunction& a);

/// m * chi = sum_H a_H chi_{Z[G/H]}, coefficients indexed by subgroup class id.
struct InductionDecomposition {
  Integer m = 1;
  std::vector<Integer> coefficients;
};

InductionDecomposition artin_induction(const ClassFunction& chi, std::size_t subgroup_bound = kDefaultSubgroupBound);

/// True when m * chi == sum a_H chi_{Z[G/H]} on every class.
bool check_induction(const ClassFunction& chi, const InductionDecomposition& d,
                     std::size_t subgroup_bound = kDefaultSubgroupBound);

struct OnoFactor {
  std::size_t subgroup_id;
  Integer exponent;
};

/// m chi_X + chi_P = chi_Q with P, Q permutation; factors carry the symbolic
/// identity L(X,-1)^m = prod zeta_{M_H}(-1)^{a_H}.
struct OnoDecomposition {
  Integer m = 1;
  std::vector<std::size_t> p_spec;
  std::vector<std::size_t> q_spec;
  std::vector<OnoFactor> factors;
};

OnoDecomposition ono_decomposition(const GLattice& x, std::size_t subgroup_bound = kDefaultSubgroupBound);

/// "L(X,-1)^2 = zeta_{M_0}(-1)^1 * zeta_{M_3}(-1)^-1"
std::string ono_identity_string(const OnoDecomposition& d);

}  // namespace torusbt
