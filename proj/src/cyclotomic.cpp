#include "torusbt/cyclotomic.hpp"

#include "torusbt/error.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace torusbt {

namespace {

std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer t = num[i];
    quot[i - dn] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= t * den[j];
  }
  return quot;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Integer> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicNumber::CyclotomicNumber(unsigned order) : order_(order) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order 0");
  coeffs_.assign(euler_phi(order), Rational(0));
}

CyclotomicNumber CyclotomicNumber::from_rational(unsigned order, const Rational& value) {
  CyclotomicNumber x(order);
  x.coeffs_[0] = value;
  return x;
}

CyclotomicNumber CyclotomicNumber::root_power(unsigned order, long k) {
  long n = static_cast<long>(order);
  long e = ((k % n) + n) % n;
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
  raw[static_cast<std::size_t>(e)] = 1;
  return from_power_coefficients(order, std::move(raw));
}

CyclotomicNumber CyclotomicNumber::from_power_coefficients(unsigned order, std::vector<Rational> coeffs) {
  CyclotomicNumber x(order);
  x.reduce(std::move(coeffs));
  return x;
}

void CyclotomicNumber::reduce(std::vector<Rational> raw) {
  const auto& phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = raw.size(); i-- > deg;) {
    if (raw[i] == 0) continue;
    Rational t = raw[i];
    for (std::size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= t * phi[j];
  }
  raw.resize(deg, Rational(0));
  coeffs_ = std::move(raw);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::NotRational, to_string() + " is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lift(unsigned m) const {
  if (m % order_ != 0) throw Error(ErrorCode::InvalidArgument, "lift target must be a multiple of the order");
  if (m == order_) return *this;
  const std::size_t step = m / order_;
  std::vector<Rational> raw(coeffs_.size() * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return from_power_coefficients(m, std::move(raw));
}

CyclotomicNumber CyclotomicNumber::galois_conjugate(long j) const {
  long n = static_cast<long>(order_);
  long e = ((j % n) + n) % n;
  if (std::gcd(e, n) != 1 && n > 1) throw Error(ErrorCode::InvalidArgument, "conjugation exponent not coprime to order");
  std::vector<Rational> raw(order_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[(i * static_cast<std::size_t>(e)) % order_] += coeffs_[i];
  return from_power_coefficients(order_, std::move(raw));
}

Rational CyclotomicNumber::trace() const {
  CyclotomicNumber sum(order_);
  for (unsigned j = 1; j <= order_; ++j)
    if (std::gcd(j, order_) == 1) sum += galois_conjugate(j);
  return sum.rational_value();
}

Rational CyclotomicNumber::norm() const {
  CyclotomicNumber prod = from_rational(order_, 1);
  for (unsigned j = 1; j <= order_; ++j)
    if (std::gcd(j, order_) == 1) prod *= galois_conjugate(j);
  return prod.rational_value();
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other) {
  if (other.order_ != order_) {
    unsigned m = std::lcm(order_, other.order_);
    *this = lift(m);
    return *this += other.lift(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other) { return *this += -other; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& other) {
  if (other.order_ != order_) {
    unsigned m = std::lcm(order_, other.order_);
    *this = lift(m);
    return *this *= other.lift(m);
  }
  std::vector<Rational> raw(2 * coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) raw[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  reduce(std::move(raw));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

CyclotomicNumber CyclotomicNumber::pow(unsigned long e) const {
  CyclotomicNumber result = from_rational(order_, 1);
  CyclotomicNumber base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  unsigned m = std::lcm(a.order_, b.order_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::string CyclotomicNumber::to_string() const {
  if (is_rational()) return torusbt::to_string(coeffs_[0]);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = torusbt::to_string(abs(c));
    } else {
      if (abs(c) != 1) term = torusbt::to_string(abs(Rational(c))) + "*";
      term += "z" + std::to_string(order_) + (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace torusbt
