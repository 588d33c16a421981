#pragma once

#include "torusbt/realization.hpp"

#include <optional>
#include <vector>

namespace torusbt {

struct PrimePart {
  Integer prime;
  Integer part;
  unsigned depth = 0;  // k at which o_k = o_{k+1}
};

struct WGroupResult {
  Integer total = 1;
  std::vector<PrimePart> parts;
};

struct StabilizationOptions {
  unsigned cap = 30;
  /// Also checks o_{k+2} and that the next three primes outside the
  /// candidate set contribute nothing; throws OracleMismatch otherwise.
  bool debug_oracles = false;
};

/// Units generating the preimage of H under (Z/N)* -> (Z/f)* -> G, N a multiple of f.
std::vector<Integer> acting_units(const AbelianRealization& r, const Integer& level, const std::vector<Element>& subgroup);

/// |(X/p^k X)(twist)^{pi^-1(H)}| (coinvariants = false) or the order of the
/// coinvariants, where a unit a acts by a^twist rho(pi(a)).
Integer twisted_order(const GLattice& x, const AbelianRealization& r, const std::vector<Element>& subgroup,
                      unsigned twist, bool coinvariants, const Integer& p, unsigned k);

/// Stabilized p-part of the twisted invariants or coinvariants.
PrimePart stabilized_part(const GLattice& x, const AbelianRealization& r, const std::vector<Element>& subgroup,
                          unsigned twist, bool coinvariants, const Integer& p, const StabilizationOptions& opts = {});

/// |W^T(Q)| = |H^0(Q, X (x) Q/Z(2))|; primes {2, 3} and the prime divisors of f.
WGroupResult w_group_order(const GLattice& x, const AbelianRealization& r, const StabilizationOptions& opts = {});

/// w_2 of the fixed field of H: W of G_m over that field.
WGroupResult w_group_order_subfield(const std::vector<Element>& subgroup, const AbelianRealization& r,
                                    const StabilizationOptions& opts = {});

/// Order of X(1) coinvariants; primes 2 and the prime divisors of f.
WGroupResult global_coinvariants_order(const GLattice& x, const AbelianRealization& r,
                                       const StabilizationOptions& opts = {});

/// #T(F_ell) = |det(ell rho(Frob_ell) - I)| for ell prime to f.
Integer local_point_count(const GLattice& x, const AbelianRealization& r, const Integer& ell);

}  // namespace torusbt
