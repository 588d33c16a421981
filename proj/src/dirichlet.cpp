#include "torusbt/dirichlet.hpp"

#include "torusbt/error.hpp"

#include <numeric>
#include <set>

namespace torusbt {

DirichletCharacter::DirichletCharacter(Integer modulus, unsigned order, std::vector<long> values)
    : modulus_(std::move(modulus)), order_(order), values_(std::move(values)) {}

long DirichletCharacter::exponent(const Integer& a) const { return values_.at(mod_reduce(a, modulus_).get_ui()); }

CyclotomicNumber DirichletCharacter::value(const Integer& a) const {
  long e = exponent(a);
  if (e < 0) return CyclotomicNumber(order_);
  return CyclotomicNumber::root_power(order_, e);
}

bool DirichletCharacter::is_even() const { return exponent(modulus_ - 1) == 0; }

namespace {

// Rebuilds a character from exponents of zeta_n, reducing to the exact order.
DirichletCharacter normalized(const Integer& f, unsigned n, std::vector<long> values) {
  unsigned long g = n;
  for (long v : values)
    if (v >= 0) g = std::gcd(g, static_cast<unsigned long>(v));
  if (g == 0) g = n;
  for (long& v : values)
    if (v >= 0) v /= static_cast<long>(g);
  return DirichletCharacter(f, static_cast<unsigned>(n / g), std::move(values));
}

}  // namespace

DirichletCharacter DirichletCharacter::power(long j) const {
  std::vector<long> v = values_;
  long n = order_;
  for (long& x : v)
    if (x >= 0) x = ((x * j) % n + n) % n;
  return normalized(modulus_, order_, std::move(v));
}

std::vector<DirichletCharacter> characters_mod(const Integer& f) {
  if (f < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  UnitGroupStructure u = unit_group_structure(f);
  auto logs = unit_log_table(u);
  const std::size_t k = u.orders.size();
  std::vector<unsigned long> orders;
  unsigned long n = 1;
  for (const auto& o : u.orders) {
    orders.push_back(o.get_ui());
    n = std::lcm(n, orders.back());
  }

  std::vector<DirichletCharacter> out;
  std::vector<unsigned long> e(k, 0);
  for (;;) {
    std::vector<long> values(f.get_ui(), -1);
    for (std::size_t a = 0; a < values.size(); ++a) {
      if (!logs[a]) continue;
      unsigned long s = 0;
      for (std::size_t i = 0; i < k; ++i) s = (s + e[i] * (*logs[a])[i] % orders[i] * (n / orders[i])) % n;
      values[a] = static_cast<long>(s);
    }
    out.push_back(normalized(f, static_cast<unsigned>(n), std::move(values)));
    std::size_t i = k;
    while (i-- > 0) {
      if (++e[i] < orders[i]) break;
      e[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

PrimitiveCharacter conductor_primitive(const DirichletCharacter& chi) {
  const Integer& f = chi.modulus();
  for (Integer d = 1; d <= f; ++d) {
    if (f % d != 0) continue;
    bool factors = true;
    for (Integer a = 1; a < f + (f == 1 ? 1 : 0) && factors; a += d) {
      if (chi.exponent(a) != 0 && chi.exponent(a) != -1) factors = false;
    }
    if (!factors) continue;
    std::vector<long> values(d.get_ui(), -1);
    for (Integer b = 0; b < d; ++b) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
      if (g != 1) continue;
      for (Integer a = b;; a += d) {
        long e = chi.exponent(a);
        if (e >= 0) {
          values[b.get_ui()] = e;
          break;
        }
      }
    }
    return {d, normalized(d, chi.order(), std::move(values))};
  }
  throw Error(ErrorCode::OracleMismatch, "no conductor found");
}

CyclotomicNumber bernoulli2_chi(const DirichletCharacter& chi) {
  const Integer& f = chi.modulus();
  const Rational fq(f);
  std::vector<Rational> coeffs(chi.order());
  for (Integer a = 1; a <= f; ++a) {
    long e = chi.exponent(a);
    if (e < 0) continue;
    Rational aq(a);
    coeffs[e] += aq * aq / fq - aq + fq / 6;
  }
  return CyclotomicNumber::from_power_coefficients(chi.order(), std::move(coeffs));
}

CyclotomicNumber L_minus_one(const DirichletCharacter& chi) { return bernoulli2_chi(chi) * Rational(-1, 2); }

std::vector<DirichletCharacter> characters_of_group(const AbelianRealization& r) {
  const Integer& f = r.modulus();
  const FiniteGroup& g = *r.group();
  std::vector<DirichletCharacter> out;
  for (auto& chi : characters_mod(f)) {
    bool factors = true;
    for (Integer a = 0; a < f && factors; ++a) {
      long e = chi.exponent(a);
      if (e >= 0 && e != 0 && r.image(a) == g.identity()) factors = false;
    }
    if (factors) out.push_back(std::move(chi));
  }
  if (out.size() != g.order())
    throw Error(ErrorCode::OracleMismatch, "found " + std::to_string(out.size()) + " characters of a group of order " +
                                               std::to_string(g.order()));
  return out;
}

namespace {

// Values chi(g) for every g in G, as exponents of zeta_order.
std::vector<long> group_values(const DirichletCharacter& chi, const AbelianRealization& r) {
  const FiniteGroup& g = *r.group();
  std::vector<long> v(g.order(), -1);
  for (Integer a = 0; a < r.modulus() || (r.modulus() == 1 && a == 0); ++a) {
    long e = chi.exponent(a);
    if (e < 0) continue;
    v[r.image(a)] = e;
    if (r.modulus() == 1) break;
  }
  return v;
}

// Product of L(psi,-1) over psi in the Galois orbit of chi; rational.
Rational orbit_product(const DirichletCharacter& chi) {
  CyclotomicNumber prod = CyclotomicNumber::from_rational(chi.order(), 1);
  for (long j = 1; j <= static_cast<long>(chi.order()); ++j) {
    if (std::gcd(j, static_cast<long>(chi.order())) != 1) continue;
    prod *= L_minus_one(conductor_primitive(chi.power(j)).character).lift(chi.order());
  }
  if (!prod.is_rational())
    throw Error(ErrorCode::NotRational, "Galois orbit product of L-values is not rational: " + prod.to_string());
  return prod.rational_value();
}

Rational power(const Rational& q, const Integer& e) {
  Rational base = e < 0 ? Rational(1) / q : q;
  Integer n = abs(e);
  Rational out = 1;
  for (Integer i = 0; i < n; ++i) out *= base;
  return out;
}

}  // namespace

Rational zeta_minus_one(const std::vector<Element>& subgroup, const AbelianRealization& r) {
  std::set<std::size_t> done;
  auto chars = characters_of_group(r);
  Rational out = 1;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (done.count(i)) continue;
    auto values = group_values(chars[i], r);
    bool trivial_on_h = true;
    for (Element h : subgroup)
      if (values[h] != 0) trivial_on_h = false;
    if (!trivial_on_h) continue;
    for (long j = 1; j <= static_cast<long>(chars[i].order()); ++j) {
      if (std::gcd(j, static_cast<long>(chars[i].order())) != 1) continue;
      auto conj = chars[i].power(j);
      for (std::size_t k = 0; k < chars.size(); ++k)
        if (chars[k] == conj) done.insert(k);
    }
    out *= orbit_product(chars[i]);
  }
  return out;
}

Rational zeta_minus_one(const SubgroupClass& h, const AbelianRealization& r) { return zeta_minus_one(h.elements, r); }

ArtinLValue artin_L_minus_one(const GLattice& x, const AbelianRealization& r, std::size_t subgroup_bound) {
  const FiniteGroup& g = *x.group();
  if (!g.is_abelian()) throw Error(ErrorCode::NonAbelianRealization, "L-values need an abelian Galois group");
  if (x.group() != r.group() && x.group()->table() != r.group()->table())
    throw Error(ErrorCode::GroupMismatch, "lattice and realization use different groups");
  require_totally_real(r);

  ArtinLValue out;
  out.value = 1;
  std::set<std::size_t> done;
  auto chars = characters_of_group(r);
  Integer total_multiplicity = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto& chi = chars[i];
    auto values = group_values(chi, r);
    CyclotomicNumber sum(chi.order());
    for (Element e = 0; e < g.order(); ++e) {
      Integer tr = 0;
      for (std::size_t k = 0; k < x.rank(); ++k) tr += x.action(e)(k, k);
      sum += CyclotomicNumber::root_power(chi.order(), -values[e]) * Rational(tr);
    }
    sum *= Rational(1, static_cast<unsigned long>(g.order()));
    if (!sum.is_rational() || sum.rational_value().get_den() != 1 || sum.rational_value() < 0)
      throw Error(ErrorCode::MultiplicityNotInteger, "multiplicity of a character is " + sum.to_string());
    Integer m = sum.rational_value().get_num();
    total_multiplicity += m;
    PrimitiveCharacter prim = conductor_primitive(chi);
    out.table.push_back({prim.conductor, chi.order(), m, L_minus_one(prim.character)});
    if (m == 0 || done.count(i)) continue;

    for (long j = 1; j <= static_cast<long>(chi.order()); ++j) {
      if (std::gcd(j, static_cast<long>(chi.order())) != 1) continue;
      auto conj = chi.power(j);
      for (std::size_t k = 0; k < chars.size(); ++k)
        if (chars[k] == conj) done.insert(k);
    }
    out.value *= power(orbit_product(chi), m);
  }
  if (total_multiplicity != Integer(x.rank()))
    throw Error(ErrorCode::MultiplicityNotInteger, "multiplicities do not add up to the rank");
  if (out.value == 0) throw Error(ErrorCode::OracleMismatch, "L(X,-1) vanished for a totally real realization");
  out.abs_value = abs(out.value);

  out.ono = ono_decomposition(x, subgroup_bound);
  const auto& classes = g.subgroup_classes(subgroup_bound);
  out.ono_product = 1;
  for (const auto& f : out.ono.factors) out.ono_product *= power(abs(zeta_minus_one(classes[f.subgroup_id], r)), f.exponent);
  auto root = rational_nth_root(out.ono_product, out.ono.m.get_ui());
  if (!root || *root != out.abs_value)
    throw Error(ErrorCode::OracleMismatch, "Ono cross-check failed: |L|^m = " + to_string(power(out.abs_value, out.ono.m)) +
                                               " but the subfield product is " + to_string(out.ono_product));
  return out;
}

}  // namespace torusbt
