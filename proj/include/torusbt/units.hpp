#pragma once

#include "torusbt/rational.hpp"

#include <optional>
#include <vector>

namespace torusbt {

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n);
bool is_prime(const Integer& n);
/// Smallest prime strictly greater than n.
Integer next_prime(const Integer& n);

/// (Z/f)* as a product of cyclic groups, one or two per prime power of f,
/// each generator lifted by CRT to be 1 at the other prime powers.
struct UnitGroupStructure {
  Integer modulus;
  std::vector<Integer> generators;
  std::vector<Integer> orders;

  Integer order() const;
};

UnitGroupStructure unit_group_structure(const Integer& f);

/// a mod f in [0, f), also for negative a.
Integer mod_reduce(const Integer& a, const Integer& f);
Integer mod_inverse(const Integer& a, const Integer& f);

/// Discrete logarithms on the canonical generators, indexed by residue;
/// nullopt for non-units.
std::vector<std::optional<std::vector<unsigned long>>> unit_log_table(const UnitGroupStructure& u);

}  // namespace torusbt
