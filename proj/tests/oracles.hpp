#pragma once
// Independent reference computations for the tests. None of these call the
// library's Smith form, kernel, character or W-group code.

#include "torusbt/engine.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using torusbt::Integer;
using torusbt::IntMatrix;
using torusbt::Rational;

// Determinant of a small square matrix by cofactor expansion.
inline Integer det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Integer term = m[0][j] * det(minor);
    out += (j % 2 == 0) ? term : Integer(-term);
  }
  return out;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Invariant factors (including zeros for the free part, excluding ones) of
// coker(m) from determinantal divisors d_k = gcd of k x k minors.
struct Cokernel {
  std::vector<Integer> torsion;  // > 1, divisibility chain
  std::size_t free_rank = 0;
};

inline Cokernel cokernel_by_minors(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Integer> d{1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(r, k, rs);
    subsets(c, k, cs);
    Integer g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m(ri[a], ci[b]);
        Integer v = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      }
    if (g == 0) break;
    d.push_back(g);
  }
  Cokernel out;
  const std::size_t rank = d.size() - 1;
  out.free_rank = r - rank;
  for (std::size_t k = 1; k <= rank; ++k) {
    Integer f = d[k] / d[k - 1];
    if (f != 1) out.torsion.push_back(f);
  }
  return out;
}

inline bool same_group(const torusbt::FinAbGroup& g, const Cokernel& c) {
  if (g.free_rank() != c.free_rank || g.invariant_factors().size() != c.torsion.size()) return false;
  for (std::size_t i = 0; i < c.torsion.size(); ++i)
    if (g.invariant_factors()[i] != c.torsion[i]) return false;
  return true;
}

// H^1(<s>, X) = ker N / im(s - 1). Because ker N is saturated and has the
// same rank as im(s - 1), this is the torsion of coker(s - 1).
inline Cokernel cyclic_h1(const IntMatrix& s) {
  IntMatrix m = s - IntMatrix::identity(s.rows());
  Cokernel c = cokernel_by_minors(m);
  c.free_rank = 0;
  return c;
}

// Bernoulli numbers from sum_{k=0}^{n} C(n+1, k) B_k = 0.
inline std::vector<Rational> bernoulli_numbers(unsigned n) {
  std::vector<Rational> b{Rational(1)};
  for (unsigned m = 1; m <= n; ++m) {
    Rational s = 0;
    for (unsigned k = 0; k < m; ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
      s += Rational(binom) * b[k];
    }
    b.push_back(-s / Rational(m + 1));
  }
  return b;
}

// B_2(x) = sum_k C(2,k) B_k x^(2-k).
inline Rational bernoulli_poly2(const Rational& x) {
  auto b = bernoulli_numbers(2);
  return b[0] * x * x + 2 * b[1] * x + b[2];
}

// Kronecker symbol (D/n) for a fundamental discriminant D, by quadratic
// reciprocity (Jacobi symbol plus the 2-adic rule).
inline int kronecker(long d, long n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (d % 2 == 0) return 0;
    long r = ((d % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi (d/n), n odd positive.
  long a = ((d % n) + n) % n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// zeta_{Q(sqrt D)}(-1) = zeta(-1) * L(chi_D, -1) with B_{2,chi} from B_2(x).
inline Rational real_quadratic_zeta_bernoulli(long d) {
  Rational b2chi = 0;
  for (long a = 1; a <= d; ++a) b2chi += kronecker(d, a) * bernoulli_poly2(torusbt::make_rational(a, d));
  b2chi *= d;
  Rational zeta = -bernoulli_numbers(2)[2] / 2;
  return zeta * (-b2chi / 2);
}

// Siegel's formula: zeta_K(-1) = (1/60) sum_{b^2 < D, b = D mod 2} sigma_1((D - b^2)/4).
inline Rational real_quadratic_zeta_siegel(long d) {
  auto sigma = [](long n) {
    long s = 0;
    for (long k = 1; k <= n; ++k)
      if (n % k == 0) s += k;
    return s;
  };
  long total = 0;
  for (long b = -d; b <= d; ++b)
    if (b * b < d && ((b - d) % 2 == 0)) total += sigma((d - b * b) / 4);
  return torusbt::make_rational(total, 60);
}

// Largest N with eps(a) a^2 = 1 (mod N) for every a prime to lcm(N, f) whose
// image pi(a mod f) lies in `allowed`. The admissible N are closed under
// divisors and lcm, so it is the lcm of the admissible prime powers.
inline Integer w2_congruence(const torusbt::AbelianRealization& r, const std::vector<torusbt::Element>& allowed,
                             const std::function<int(torusbt::Element)>& eps, long prime_limit = 60) {
  const long f = r.modulus().get_si();
  std::vector<bool> ok_elem(r.group()->order(), false);
  for (auto e : allowed) ok_elem[e] = true;
  auto admissible = [&](long n) {
    long level = std::lcm(n, f);
    for (long a = 1; a < level + (level == 1); ++a) {
      if (std::gcd(a, level) != 1) continue;
      auto g = r.image(Integer(a % f));
      if (!ok_elem[g]) continue;
      long v = (eps(g) * ((a % n) * (a % n) % n) - 1) % n;
      if (v != 0) return false;
    }
    return true;
  };
  Integer out = 1;
  for (long p = 2; p <= prime_limit; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    long pk = 1;
    while (pk * p <= 4096 && admissible(pk * p)) pk *= p;
    out *= pk;
  }
  return out;
}

// Number of v in (Z/n)^r with a^t rho(pi(a)) v = v for every unit a mod lcm(n, f).
inline Integer fixed_vectors(const torusbt::GLattice& x, const torusbt::AbelianRealization& r, long n, unsigned t) {
  const long f = r.modulus().get_si();
  const long level = std::lcm(n, f);
  const std::size_t rank = x.rank();
  std::vector<std::pair<long, torusbt::Element>> units;
  for (long a = 1; a < level + (level == 1); ++a)
    if (std::gcd(a, level) == 1) units.emplace_back(a % n, r.image(Integer(a % f)));
  std::vector<long> v(rank, 0);
  long count = 0;
  for (;;) {
    bool fixed = true;
    for (const auto& [a, g] : units) {
      long scalar = 1;
      for (unsigned i = 0; i < t; ++i) scalar = scalar * a % n;
      const IntMatrix& m = x.action(g);
      for (std::size_t i = 0; i < rank && fixed; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < rank; ++j) s += m(i, j).get_si() * v[j];
        if (((scalar * (s % n) - v[i]) % n + n) % n != 0) fixed = false;
      }
      if (!fixed) break;
    }
    if (fixed) ++count;
    std::size_t i = 0;
    while (i < rank && ++v[i] == n) v[i++] = 0;
    if (i == rank) break;
  }
  return count;
}

// Random unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = 6) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

// Same lattice in the basis given by the columns of u.
inline torusbt::GLattice change_basis(const torusbt::GLattice& x, const IntMatrix& u) {
  IntMatrix inv = torusbt::unimodular_inverse(u);
  std::vector<IntMatrix> action;
  for (const auto& m : x.actions()) action.push_back(inv * m * u);
  auto out = torusbt::GLattice::from_elements_unchecked(x.group(), x.rank(), std::move(action));
  torusbt::validate(out);
  return out;
}

}  // namespace oracle
