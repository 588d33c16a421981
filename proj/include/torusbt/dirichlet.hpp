#pragma once

#include "torusbt/cyclotomic.hpp"
#include "torusbt/induction.hpp"
#include "torusbt/realization.hpp"

#include <optional>
#include <vector>

namespace torusbt {

/// chi(a) = zeta_order^values[a mod f]; values[a] = -1 when gcd(a, f) > 1.
class DirichletCharacter {
 public:
  DirichletCharacter(Integer modulus, unsigned order, std::vector<long> values);

  const Integer& modulus() const { return modulus_; }
  unsigned order() const { return order_; }
  /// Exponent of zeta_order at a, or -1 for non-units.
  long exponent(const Integer& a) const;
  CyclotomicNumber value(const Integer& a) const;
  bool is_trivial() const { return order_ == 1; }
  /// chi(-1) = 1.
  bool is_even() const;
  /// chi^j.
  DirichletCharacter power(long j) const;

  friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;

 private:
  Integer modulus_;
  unsigned order_;
  std::vector<long> values_;
};

/// All phi(f) characters, in lexicographic order of their exponent vectors on
/// the canonical generators of (Z/f)*.
std::vector<DirichletCharacter> characters_mod(const Integer& f);

struct PrimitiveCharacter {
  Integer conductor;
  DirichletCharacter character;
};

PrimitiveCharacter conductor_primitive(const DirichletCharacter& chi);

/// B_{2,chi} = f sum_{a=1}^{f} chi(a) B_2(a/f) for primitive chi of conductor f.
CyclotomicNumber bernoulli2_chi(const DirichletCharacter& chi);
/// L(chi, -1) = -B_{2,chi}/2.
CyclotomicNumber L_minus_one(const DirichletCharacter& chi);

/// Characters mod f that factor through the realization, i.e. characters of G.
std::vector<DirichletCharacter> characters_of_group(const AbelianRealization& r);

/// zeta_M(-1) for M the fixed field of H, as the product of L(chi,-1) over
/// the characters of G trivial on H.
Rational zeta_minus_one(const std::vector<Element>& subgroup, const AbelianRealization& r);
Rational zeta_minus_one(const SubgroupClass& h, const AbelianRealization& r);

struct CharacterContribution {
  Integer conductor;
  unsigned order = 1;
  Integer multiplicity;
  CyclotomicNumber value;  // L(chi_primitive, -1)
};

struct ArtinLValue {
  Rational value;
  Rational abs_value;
  std::vector<CharacterContribution> table;
  OnoDecomposition ono;
  /// prod |zeta_{M_H}(-1)|^{a_H}, the m-th power of abs_value.
  Rational ono_product;
};

/// L(X,-1) = prod_chi L(chi,-1)^{m_chi}; cross-checked against the Ono route.
/// Throws NonAbelianRealization, NotTotallyReal, MultiplicityNotInteger.
ArtinLValue artin_L_minus_one(const GLattice& x, const AbelianRealization& r,
                              std::size_t subgroup_bound = kDefaultSubgroupBound);

}  // namespace torusbt
