#pragma once

#include "torusbt/cohomology.hpp"
#include "torusbt/dirichlet.hpp"
#include "torusbt/galois_invariants.hpp"
#include "torusbt/induction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusbt {

struct EngineOptions {
  StabilizationOptions stabilization;
  CertificateSearchLimits search;
  std::size_t subgroup_bound = kDefaultSubgroupBound;
  unsigned prime_cap = 30;  // largest ell in local tables
};

struct BTCReport {
  bool totally_real = false;
  MotivicCheck motivic;
  OnoDecomposition ono;
  std::optional<ArtinLValue> lvalue;
  std::optional<WGroupResult> w;
  std::optional<Rational> predicted;
  std::optional<Rational> predicted_odd_part;
  std::size_t two_defect_rank = 0;
  std::vector<std::string> warnings;
};

/// |L(X,-1)| * |W^T| together with the motivic verdict and the Ono identity.
/// Without an abelian totally real realization only the symbolic parts are filled.
BTCReport btc_predict(const GLattice& x, const std::optional<AbelianRealization>& r, const EngineOptions& opts = {},
                      const std::optional<InvertibilityCertificate>& certificate = std::nullopt,
                      const std::optional<PermutationPresentation>& presentation = std::nullopt);

Rational odd_part(const Rational& q);

struct IsogenyCheck {
  Rational predicted_first;
  Rational predicted_second;
  Rational ratio;
  bool pass = false;  // ratio = +-2^k
  long two_exponent = 0;
  bool odd_parts_equal = false;
};

/// Throws CharacterMismatch when the lattices are not isogenous.
IsogenyCheck isogeny_invariance_check(const GLattice& x1, const GLattice& x2, const AbelianRealization& r,
                                      const EngineOptions& opts = {});

struct WeilRestrictionCheck {
  std::size_t subgroup_id = 0;
  Rational predicted;  // via Z[G/H]
  Rational zeta;       // zeta_M(-1)
  Integer w2;          // w_2(M)
  Rational classical;  // |zeta_M(-1)| * w_2(M)
  bool pass = false;
};

WeilRestrictionCheck weil_restriction_check(const SubgroupClass& h, const AbelianRealization& r,
                                            const EngineOptions& opts = {});

struct LocalCount {
  Integer ell;
  Integer count;
};

/// Point counts for primes ell <= cap not dividing f.
std::vector<LocalCount> local_table(const GLattice& x, const AbelianRealization& r, unsigned cap);

struct Fixture {
  std::string name;
  std::string description;
  GroupPtr group;
  GLattice lattice;
  std::optional<AbelianRealization> realization;
  std::optional<PermutationPresentation> presentation;
};

const std::vector<Fixture>& fixture_catalog();
/// Throws InvalidArgument for unknown names.
const Fixture& fixture(const std::string& name);

}  // namespace torusbt
