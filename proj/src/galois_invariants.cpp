#include "torusbt/galois_invariants.hpp"

#include "torusbt/error.hpp"

#include <algorithm>

namespace torusbt {

std::vector<Integer> acting_units(const AbelianRealization& r, const Integer& level, const std::vector<Element>& subgroup) {
  if (level % r.modulus() != 0) throw Error(ErrorCode::InvalidArgument, "level must be a multiple of the modulus");
  const FiniteGroup& g = *r.group();
  UnitGroupStructure u = unit_group_structure(level);

  // Schreier generators for the kernel of (Z/N)* -> G/H.
  auto reps = coset_representatives(g, subgroup);
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (Element h : subgroup) coset_of[g.multiply(reps[c], h)] = c;
  auto coset = [&](const Integer& a) { return coset_of[r.image(mod_reduce(a, r.modulus()))]; };

  std::vector<std::optional<Integer>> transversal(reps.size());
  transversal[coset(1)] = Integer(1);
  std::vector<std::size_t> queue{coset(1)};
  std::vector<Integer> out;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t c = queue[head];
    for (const Integer& s : u.generators) {
      Integer t = mod_reduce(*transversal[c] * s, level);
      std::size_t d = coset(t);
      if (!transversal[d]) {
        transversal[d] = t;
        queue.push_back(d);
      } else {
        Integer schreier = mod_reduce(t * mod_inverse(*transversal[d], level), level);
        if (schreier != 1 && std::find(out.begin(), out.end(), schreier) == out.end()) out.push_back(schreier);
      }
    }
  }
  if (queue.size() != reps.size()) throw Error(ErrorCode::NotSurjective, "realization does not reach every coset");
  return out;
}

Integer twisted_order(const GLattice& x, const AbelianRealization& r, const std::vector<Element>& subgroup,
                      unsigned twist, bool coinvariants, const Integer& p, unsigned k) {
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  const Integer level = r.modulus() * pk;
  const std::size_t n = x.rank();
  std::vector<IntMatrix> blocks;
  for (const Integer& a : acting_units(r, level, subgroup)) {
    Integer scalar;
    mpz_powm_ui(scalar.get_mpz_t(), a.get_mpz_t(), twist, pk.get_mpz_t());
    IntMatrix m = x.action(r.image(mod_reduce(a, r.modulus())));
    m *= scalar;
    m -= IntMatrix::identity(n);
    blocks.push_back(m.mod(pk));
  }
  if (coinvariants) return cokernel_order_mod(hstack(blocks, n), pk);
  return kernel_order_mod(vstack(blocks, n), pk);
}

PrimePart stabilized_part(const GLattice& x, const AbelianRealization& r, const std::vector<Element>& subgroup,
                          unsigned twist, bool coinvariants, const Integer& p, const StabilizationOptions& opts) {
  Integer prev = twisted_order(x, r, subgroup, twist, coinvariants, p, 1);
  for (unsigned k = 1; k < opts.cap; ++k) {
    Integer next = twisted_order(x, r, subgroup, twist, coinvariants, p, k + 1);
    if (next == prev) {
      if (opts.debug_oracles) {
        Integer after = twisted_order(x, r, subgroup, twist, coinvariants, p, k + 2);
        if (after != prev)
          throw Error(ErrorCode::OracleMismatch, "p = " + p.get_str() + " grew again at k + 2 = " + std::to_string(k + 2));
      }
      return {p, prev, k};
    }
    prev = next;
  }
  throw Error(ErrorCode::StabilizationBoundExceeded,
              "p = " + p.get_str() + " did not stabilize below k = " + std::to_string(opts.cap));
}

namespace {

WGroupResult stabilized_total(const GLattice& x, const AbelianRealization& r, const std::vector<Element>& subgroup,
                              unsigned twist, bool coinvariants, std::vector<Integer> primes,
                              const StabilizationOptions& opts) {
  for (const auto& [p, _] : factorize(r.modulus())) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  WGroupResult out;
  for (const Integer& p : primes) {
    PrimePart part = stabilized_part(x, r, subgroup, twist, coinvariants, p, opts);
    out.total *= part.part;
    out.parts.push_back(part);
  }
  if (opts.debug_oracles) {
    Integer q = std::max(primes.back(), Integer(3));
    for (int found = 0; found < 3;) {
      q = next_prime(q);
      if (std::binary_search(primes.begin(), primes.end(), q)) continue;
      ++found;
      if (twisted_order(x, r, subgroup, twist, coinvariants, q, 1) != 1)
        throw Error(ErrorCode::OracleMismatch, "prime " + q.get_str() + " outside the candidate set contributes");
    }
  }
  return out;
}

std::vector<Element> all_elements(const FiniteGroup& g) {
  std::vector<Element> v(g.order());
  for (Element e = 0; e < g.order(); ++e) v[e] = e;
  return v;
}

}  // namespace

WGroupResult w_group_order(const GLattice& x, const AbelianRealization& r, const StabilizationOptions& opts) {
  return stabilized_total(x, r, all_elements(*r.group()), 2, false, {2, 3}, opts);
}

WGroupResult w_group_order_subfield(const std::vector<Element>& subgroup, const AbelianRealization& r,
                                    const StabilizationOptions& opts) {
  return stabilized_total(GLattice::trivial(r.group()), r, subgroup, 2, false, {2, 3}, opts);
}

WGroupResult global_coinvariants_order(const GLattice& x, const AbelianRealization& r,
                                       const StabilizationOptions& opts) {
  return stabilized_total(x, r, all_elements(*r.group()), 1, true, {2}, opts);
}

Integer local_point_count(const GLattice& x, const AbelianRealization& r, const Integer& ell) {
  if (!is_prime(ell)) throw Error(ErrorCode::InvalidArgument, ell.get_str() + " is not prime");
  if (r.modulus() % ell == 0)
    throw Error(ErrorCode::BadReduction, ell.get_str() + " divides the modulus " + r.modulus().get_str());
  IntMatrix m = x.action(r.image(ell));
  m *= ell;
  m -= IntMatrix::identity(x.rank());
  return abs(determinant(m));
}

}  // namespace torusbt
