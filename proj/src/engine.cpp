#include "torusbt/engine.hpp"

#include "torusbt/error.hpp"

#include <mutex>

namespace torusbt {

Rational odd_part(const Rational& q) { return prime_to_part(q, 2); }

BTCReport btc_predict(const GLattice& x, const std::optional<AbelianRealization>& r, const EngineOptions& opts,
                      const std::optional<InvertibilityCertificate>& certificate,
                      const std::optional<PermutationPresentation>& presentation) {
  BTCReport rep;
  rep.motivic = check_motivic_interpretation(x, certificate, presentation, opts.search, opts.subgroup_bound);
  rep.ono = ono_decomposition(x, opts.subgroup_bound);
  if (rep.motivic.verdict == MotivicVerdict::Unknown)
    rep.warnings.push_back("no motivic interpretation established; the conjecture's hypothesis is unverified");
  if (!r) {
    rep.warnings.push_back("no abelian realization: only the symbolic Ono identity is available");
    return rep;
  }
  rep.totally_real = r->totally_real();
  if (!rep.totally_real) {
    rep.warnings.push_back("NotTotallyReal: complex conjugation acts nontrivially, no prediction made");
    return rep;
  }
  rep.two_defect_rank = real_decomposition(x, r->complex_conjugation()).trivial;
  rep.lvalue = artin_L_minus_one(x, *r, opts.subgroup_bound);
  rep.w = w_group_order(x, *r, opts.stabilization);
  rep.predicted = rep.lvalue->abs_value * Rational(rep.w->total);
  rep.predicted_odd_part = odd_part(*rep.predicted);
  if (rep.predicted->get_den() != 1)
    rep.warnings.push_back("predicted order " + to_string(*rep.predicted) + " is not an integer");
  if (rep.two_defect_rank > 0)
    rep.warnings.push_back("equality is asserted up to a power of 2 bounded by 2^" +
                           std::to_string(rep.two_defect_rank));
  return rep;
}

IsogenyCheck isogeny_invariance_check(const GLattice& x1, const GLattice& x2, const AbelianRealization& r,
                                      const EngineOptions& opts) {
  if (lattice_character(x1) != lattice_character(x2))
    throw Error(ErrorCode::CharacterMismatch, "lattice characters differ, the tori are not isogenous");
  auto predict = [&](const GLattice& x) -> Rational {
    require_totally_real(r);
    Rational l = artin_L_minus_one(x, r, opts.subgroup_bound).abs_value;
    return l * Rational(w_group_order(x, r, opts.stabilization).total);
  };
  IsogenyCheck c;
  c.predicted_first = predict(x1);
  c.predicted_second = predict(x2);
  c.ratio = c.predicted_first / c.predicted_second;
  Rational odd = odd_part(c.ratio);
  c.pass = abs(odd) == 1;
  if (c.pass) {
    Integer num = c.ratio.get_num(), den = c.ratio.get_den();
    c.two_exponent = static_cast<long>(valuation(num, 2)) - static_cast<long>(valuation(den, 2));
  }
  c.odd_parts_equal = odd_part(c.predicted_first) == odd_part(c.predicted_second);
  return c;
}

WeilRestrictionCheck weil_restriction_check(const SubgroupClass& h, const AbelianRealization& r,
                                            const EngineOptions& opts) {
  require_totally_real(r);
  WeilRestrictionCheck c;
  c.subgroup_id = h.id;
  GLattice induced = permutation_lattice(r.group(), h);
  c.predicted = artin_L_minus_one(induced, r, opts.subgroup_bound).abs_value *
                Rational(w_group_order(induced, r, opts.stabilization).total);
  c.zeta = zeta_minus_one(h, r);
  c.w2 = w_group_order_subfield(h.elements, r, opts.stabilization).total;
  c.classical = abs(c.zeta) * Rational(c.w2);
  c.pass = c.predicted == c.classical;
  return c;
}

std::vector<LocalCount> local_table(const GLattice& x, const AbelianRealization& r, unsigned cap) {
  std::vector<LocalCount> out;
  for (Integer ell = 2; ell <= cap; ell = next_prime(ell)) {
    if (r.modulus() % ell == 0) continue;
    out.push_back({ell, local_point_count(x, r, ell)});
  }
  return out;
}

namespace {

std::size_t class_id_of_order(const FiniteGroup& g, std::size_t order) {
  for (const auto& c : g.subgroup_classes())
    if (c.order == order) return c.id;
  throw Error(ErrorCode::InvalidArgument, "no subgroup of order " + std::to_string(order));
}

// 0 -> Z -> Z[G] -> Z[G]/N -> 0 in the bases used by norm_quotient.
PermutationPresentation norm_quotient_presentation(const GroupPtr& group) {
  const std::size_t n = group->order();
  PermutationPresentation p;
  p.p_spec = {class_id_of_order(*group, 1)};
  p.q_spec = {class_id_of_order(*group, n)};
  p.surjection = IntMatrix(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    p.surjection(i, 0) = -1;
    p.surjection(i, i + 1) = 1;
  }
  p.inclusion = IntMatrix(n, 1);
  for (std::size_t i = 0; i < n; ++i) p.inclusion(i, 0) = 1;
  return p;
}

GLattice regular(const GroupPtr& g) { return permutation_lattice(g, std::vector<Element>{g->identity()}); }

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> out;
  auto triv = make_group(trivial_group());
  auto c2 = make_group(cyclic_group(2));
  auto v4 = make_group(klein_four_group());
  auto c3 = make_group(cyclic_group(3));
  auto c4 = make_group(cyclic_group(4));
  auto c6 = make_group(cyclic_group(6));
  auto s3 = make_group(symmetric_group(3));

  out.push_back({"gm_q", "G_m over Q", triv, GLattice::trivial(triv), AbelianRealization::create(triv, 1, {}), {}});
  out.push_back({"res_sqrt5", "Res_{Q(sqrt5)/Q} G_m", c2, regular(c2), AbelianRealization::create(c2, 5, {{2, 1}}), {}});
  out.push_back({"normone_5", "norm-one torus of Q(sqrt5)/Q", c2, sign_lattice(c2, {1, -1}),
                 AbelianRealization::create(c2, 5, {{2, 1}}), {}});
  out.push_back({"res_sqrt2", "Res_{Q(sqrt2)/Q} G_m", c2, regular(c2),
                 AbelianRealization::create(c2, 8, {{7, 0}, {5, 1}}), {}});
  out.push_back({"dual_normone_v4", "dual of the norm-one torus of Q(sqrt2, sqrt5)/Q", v4, norm_quotient(v4),
                 AbelianRealization::create(v4, 40, {{31, 0}, {21, 1}, {17, 2}}), norm_quotient_presentation(v4)});
  out.push_back({"normone_v4", "norm-one torus of Q(sqrt2, sqrt5)/Q", v4, augmentation_ideal(v4),
                 AbelianRealization::create(v4, 40, {{31, 0}, {21, 1}, {17, 2}}), {}});
  out.push_back({"s3_standard", "rank-2 sum-zero sublattice of Z[S3/C2]", s3,
                 permutation_augmentation(s3, s3->subgroup_classes()[class_id_of_order(*s3, 2)].elements),
                 std::nullopt, {}});
  out.push_back({"res_cubic7", "Res G_m for the cubic subfield of Q(zeta7)", c3, regular(c3),
                 AbelianRealization::create(c3, 7, {{3, 1}}), {}});
  out.push_back({"res_quartic16", "Res G_m for the real subfield of Q(zeta16)", c4, regular(c4),
                 AbelianRealization::create(c4, 16, {{15, 0}, {5, 1}}), {}});
  out.push_back({"res_sextic13", "Res G_m for the real subfield of Q(zeta13)", c6, regular(c6),
                 AbelianRealization::create(c6, 13, {{2, 1}}), {}});
  return out;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return f;
  throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

}  // namespace torusbt
