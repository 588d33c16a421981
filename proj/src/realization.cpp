#include "torusbt/realization.hpp"

#include "torusbt/error.hpp"

#include <limits>

namespace torusbt {

namespace {
constexpr Element kUnset = std::numeric_limits<Element>::max();
}

AbelianRealization AbelianRealization::create(GroupPtr group, const Integer& modulus,
                                              const std::map<Integer, Element>& images) {
  if (modulus < 1 || modulus > 1000000)
    throw Error(ErrorCode::InvalidArgument, "modulus must lie in [1, 10^6], got " + modulus.get_str());
  const FiniteGroup& g = *group;
  if (!g.is_abelian())
    throw Error(ErrorCode::NonAbelianRealization, "a realization inside Q(zeta_f) needs an abelian group");
  const unsigned long f = modulus.get_ui();

  AbelianRealization r;
  r.group_ = group;
  r.modulus_ = modulus;
  r.table_.assign(f, kUnset);
  std::vector<std::pair<unsigned long, Element>> gens;
  for (const auto& [unit, elem] : images) {
    Integer a = mod_reduce(unit, modulus);
    Integer d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    if (d != 1) throw Error(ErrorCode::InvalidArgument, unit.get_str() + " is not a unit mod " + modulus.get_str());
    if (elem >= g.order())
      throw Error(ErrorCode::InvalidArgument, "image " + std::to_string(elem) + " is not a group element");
    r.given_[a] = elem;
    gens.emplace_back(a.get_ui(), elem);
  }

  const unsigned long one = f == 1 ? 0 : 1;
  r.table_[one] = g.identity();
  std::vector<unsigned long> queue{one};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    unsigned long a = queue[head];
    for (const auto& [s, img] : gens) {
      unsigned long b = static_cast<unsigned long>((static_cast<unsigned __int128>(a) * s) % f);
      Element value = g.multiply(r.table_[a], img);
      if (r.table_[b] == kUnset) {
        r.table_[b] = value;
        queue.push_back(b);
      } else if (r.table_[b] != value) {
        throw Error(ErrorCode::NotHomomorphism,
                    "images are inconsistent: two products give different values at " + std::to_string(b));
      }
    }
  }
  const Integer phi = unit_group_structure(modulus).order();
  if (Integer(queue.size()) != phi)
    throw Error(ErrorCode::IncompleteRealization, "the given units generate a subgroup of order " +
                                                      std::to_string(queue.size()) + " of (Z/" + modulus.get_str() +
                                                      ")*, which has order " + phi.get_str());
  std::vector<bool> hit(g.order(), false);
  for (unsigned long a : queue) hit[r.table_[a]] = true;
  for (Element e = 0; e < g.order(); ++e)
    if (!hit[e]) throw Error(ErrorCode::NotSurjective, "element " + std::to_string(e) + " is not in the image");
  return r;
}

Element AbelianRealization::image(const Integer& a) const {
  Element e = table_.at(mod_reduce(a, modulus_).get_ui());
  if (e == kUnset) throw Error(ErrorCode::InvalidArgument, a.get_str() + " is not a unit mod " + modulus_.get_str());
  return e;
}

bool AbelianRealization::totally_real() const { return complex_conjugation() == group_->identity(); }

void require_totally_real(const AbelianRealization& r) {
  if (!r.totally_real())
    throw Error(ErrorCode::NotTotallyReal,
                "-1 maps to element " + std::to_string(r.complex_conjugation()) + ", not the identity");
}

}  // namespace torusbt
