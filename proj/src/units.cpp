#include "torusbt/units.hpp"

#include "torusbt/error.hpp"

namespace torusbt {

std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize needs n >= 1, got " + n.get_str());
  std::vector<std::pair<Integer, unsigned>> out;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(const Integer& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Integer next_prime(const Integer& n) {
  Integer out;
  mpz_nextprime(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

Integer UnitGroupStructure::order() const {
  Integer n = 1;
  for (const auto& o : orders) n *= o;
  return n;
}

Integer mod_reduce(const Integer& a, const Integer& f) {
  Integer r = a % f;
  if (r < 0) r += f;
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& f) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), f.get_mpz_t()) == 0) {
    if (f == 1) return 0;
    throw Error(ErrorCode::InvalidArgument, a.get_str() + " is not a unit mod " + f.get_str());
  }
  return inv;
}

namespace {

Integer powm(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer primitive_root_prime_power(const Integer& p, unsigned e) {
  auto factors = factorize(p - 1);
  Integer g = 2;
  for (;; ++g) {
    bool ok = true;
    for (const auto& [q, _] : factors)
      if (powm(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) break;
  }
  if (e >= 2 && powm(g, p - 1, p * p) == 1) g += p;
  return g;
}

// x = a mod m, x = 1 mod rest (coprime).
Integer crt_lift(const Integer& a, const Integer& m, const Integer& rest) {
  if (rest == 1) return mod_reduce(a, m);
  Integer n = m * rest;
  // x = 1 + rest * t, rest * t = a - 1 (mod m)
  Integer t = mod_reduce((a - 1) * mod_inverse(rest % m, m), m);
  return mod_reduce(1 + rest * t, n);
}

}  // namespace

UnitGroupStructure unit_group_structure(const Integer& f) {
  UnitGroupStructure u;
  u.modulus = f;
  for (const auto& [p, e] : factorize(f)) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    Integer rest = f / pe;
    if (p == 2) {
      if (e >= 2) {
        u.generators.push_back(crt_lift(pe - 1, pe, rest));
        u.orders.push_back(2);
      }
      if (e >= 3) {
        u.generators.push_back(crt_lift(5, pe, rest));
        Integer ord;
        mpz_ui_pow_ui(ord.get_mpz_t(), 2, e - 2);
        u.orders.push_back(ord);
      }
    } else {
      u.generators.push_back(crt_lift(primitive_root_prime_power(p, e), pe, rest));
      u.orders.push_back(pe / p * (p - 1));
    }
  }
  return u;
}

std::vector<std::optional<std::vector<unsigned long>>> unit_log_table(const UnitGroupStructure& u) {
  const unsigned long f = u.modulus.get_ui();
  std::vector<std::optional<std::vector<unsigned long>>> table(f);
  const std::size_t k = u.generators.size();
  std::vector<unsigned long> exps(k, 0);
  std::vector<unsigned long> orders;
  for (const auto& o : u.orders) orders.push_back(o.get_ui());
  for (;;) {
    Integer a = 1;
    for (std::size_t i = 0; i < k; ++i) a = a * powm(u.generators[i], exps[i], u.modulus) % u.modulus;
    table[mod_reduce(a, u.modulus).get_ui()] = exps;
    if (k == 0) break;
    std::size_t i = k;
    while (i-- > 0) {
      if (++exps[i] < orders[i]) break;
      exps[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return table;
}

}  // namespace torusbt
