#pragma once

#include "torusbt/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusbt {

/// H^1(H, X) for H generated by `generators`, computed from cocycles on the
/// generators subject to the relations read off the Cayley graph of H.
FinAbGroup h1(const GLattice& x, const std::vector<Element>& generators);
FinAbGroup h1(const GLattice& x, const SubgroupClass& h);

/// Tate H^0(H, X) = X^H / N_H X.
FinAbGroup tate_h0(const GLattice& x, const std::vector<Element>& elements, const std::vector<Element>& generators);
FinAbGroup tate_h0(const GLattice& x, const SubgroupClass& h);

struct FlasqueWitness {
  std::size_t subgroup_id;
  FinAbGroup h1;
};

struct FlasqueCheck {
  bool flasque = true;
  std::vector<FlasqueWitness> witnesses;
};

FlasqueCheck is_flasque(const GLattice& x, std::size_t subgroup_bound = kDefaultSubgroupBound);

/// Direct sum of Z[G/H_i], H_i the representative of subgroup class spec[i].
GLattice permutation_lattice_from_spec(const GroupPtr& group, const std::vector<std::size_t>& spec,
                                       std::size_t subgroup_bound = kDefaultSubgroupBound);

/// 0 -> Q -> P -> X -> 0 with P a permutation lattice and Q flasque.
struct FlasqueResolution {
  std::vector<std::size_t> p_spec;
  GLattice P;
  IntMatrix surjection;  // rank(X) x rank(P)
  GLattice Q;
  IntMatrix inclusion;   // rank(P) x rank(Q), columns a basis of ker(surjection)
  bool identity = false; // X already permutation: P ~ X, Q = 0
};

FlasqueResolution flasque_resolution(const GLattice& x, std::size_t subgroup_bound = kDefaultSubgroupBound);

/// Empty when the sequence is exact, equivariant and Q is flasque; otherwise
/// one message per violated condition.
std::vector<std::string> check_resolution(const GLattice& x, const FlasqueResolution& res,
                                          std::size_t subgroup_bound = kDefaultSubgroupBound);

/// Q (+) complement is isomorphic to the permutation lattice `target_spec` via `iso`.
struct InvertibilityCertificate {
  GLattice complement;
  IntMatrix iso;
  std::vector<std::size_t> target_spec;
};

bool verify_invertibility(const GLattice& q, const InvertibilityCertificate& cert,
                          std::size_t subgroup_bound = kDefaultSubgroupBound);

/// 0 -> Q' -> P' -> X -> 0 with both Q' and P' permutation lattices, e.g.
/// 0 -> Z -> Z[G] -> Z[G]/N -> 0.
struct PermutationPresentation {
  std::vector<std::size_t> p_spec;
  IntMatrix surjection;  // rank(X) x rank(P')
  std::vector<std::size_t> q_spec;
  IntMatrix inclusion;   // rank(P') x rank(Q')
};

/// Certificate Q (+) P' ~ Q' (+) P obtained by comparing the flasque
/// resolution with a permutation presentation of the same lattice.
InvertibilityCertificate certificate_from_presentation(const GLattice& x, const FlasqueResolution& res,
                                                       const PermutationPresentation& presentation,
                                                       std::size_t subgroup_bound = kDefaultSubgroupBound);

struct CertificateSearchLimits {
  std::size_t complement_rank = 4;
  long coefficient_bound = 2;
  std::size_t max_candidates = 20000;
};

/// Bounded search for a certificate: complements and targets are permutation
/// lattices whose characters match, isomorphisms are small combinations of a
/// basis of equivariant maps.
std::optional<InvertibilityCertificate> search_invertibility_certificate(
    const GLattice& q, const CertificateSearchLimits& limits = {},
    std::size_t subgroup_bound = kDefaultSubgroupBound);

enum class MotivicVerdict { YesMetaCyclic, YesInvertibleCertificate, Unknown };

std::string to_string(MotivicVerdict v);

struct MotivicCheck {
  MotivicVerdict verdict = MotivicVerdict::Unknown;
  std::optional<FlasqueResolution> resolution;
  std::optional<InvertibilityCertificate> certificate;
  std::string certificate_source;  // "supplied", "presentation", "search"
};

MotivicCheck check_motivic_interpretation(const GLattice& x,
                                          const std::optional<InvertibilityCertificate>& certificate = std::nullopt,
                                          const std::optional<PermutationPresentation>& presentation = std::nullopt,
                                          const CertificateSearchLimits& limits = {},
                                          std::size_t subgroup_bound = kDefaultSubgroupBound);

/// Multiplicities of Z, Z^- and Z[C2] in X viewed as a C2-lattice via `conj`.
struct RealDecomposition {
  std::size_t trivial = 0;  // copies of Z   (G_m)
  std::size_t sign = 0;     // copies of Z^- (norm-one torus of C/R)
  std::size_t induced = 0;  // copies of Z[C2] (Res_{C/R} G_m)
  FinAbGroup real_torsion;  // (Z/2)^trivial
  /// 0 -> K^T(R)/n -> H^2(R, T[n] (x) mu_n) -> H^3(R, X (x) Z(2)) for even n.
  FinAbGroup k_mod_n;
  FinAbGroup h2;
  FinAbGroup h3;
};

RealDecomposition real_decomposition(const GLattice& x, Element conj);

}  // namespace torusbt
