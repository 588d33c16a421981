#pragma once

#include "torusbt/lattice.hpp"
#include "torusbt/units.hpp"

#include <map>
#include <vector>

namespace torusbt {

/// Surjection pi: (Z/f)* -> G presenting the splitting field inside Q(zeta_f).
class AbelianRealization {
 public:
  /// Extends the images of the given units multiplicatively and validates.
  /// Throws InvalidArgument, IncompleteRealization, NotHomomorphism, NotSurjective.
  static AbelianRealization create(GroupPtr group, const Integer& modulus, const std::map<Integer, Element>& images);

  const GroupPtr& group() const { return group_; }
  const Integer& modulus() const { return modulus_; }
  const std::map<Integer, Element>& given_images() const { return given_; }
  /// pi(a mod f); a must be coprime to f.
  Element image(const Integer& a) const;
  Element complex_conjugation() const { return image(modulus_ - 1); }
  bool totally_real() const;

 private:
  GroupPtr group_;
  Integer modulus_;
  std::map<Integer, Element> given_;
  std::vector<Element> table_;  // indexed by residue; unused entries for non-units
};

/// Throws NotTotallyReal when complex conjugation acts nontrivially.
void require_totally_real(const AbelianRealization& r);

}  // namespace torusbt
