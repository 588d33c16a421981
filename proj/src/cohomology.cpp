#include "torusbt/cohomology.hpp"

#include "torusbt/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace torusbt {

namespace {

IntMatrix columns_to_matrix(const std::vector<std::vector<Integer>>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

bool in_span(const std::vector<std::vector<Integer>>& gens, const std::vector<Integer>& v) {
  if (gens.empty()) return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
  return solve_integer(columns_to_matrix(gens, v.size()), v).has_value();
}

// Image of basis vector b under a permutation matrix.
std::size_t permuted_index(const IntMatrix& m, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, b) != 0) return i;
  throw Error(ErrorCode::InvalidArgument, "not a permutation matrix");
}

bool all_permutation_matrices(const GLattice& x) {
  return std::all_of(x.actions().begin(), x.actions().end(),
                     [](const IntMatrix& m) { return m.is_permutation_matrix(); });
}

std::vector<std::size_t> summand_offsets(const std::vector<SubgroupClass>& classes,
                                         const std::vector<std::size_t>& spec) {
  std::vector<std::size_t> offsets;
  std::size_t at = 0;
  for (std::size_t id : spec) {
    offsets.push_back(at);
    at += classes.at(id).index;
  }
  offsets.push_back(at);
  return offsets;
}

// Equivariant map out of the permutation lattice `spec`, determined by the
// image y_j (fixed by H_j) of the identity coset of each summand.
IntMatrix extend_from_spec(const FiniteGroup& g, const std::vector<SubgroupClass>& classes,
                           const std::vector<std::size_t>& spec, const std::vector<std::vector<Integer>>& images,
                           const GLattice& target) {
  auto offsets = summand_offsets(classes, spec);
  IntMatrix m(target.rank(), offsets.back());
  for (std::size_t j = 0; j < spec.size(); ++j) {
    auto reps = coset_representatives(g, classes[spec[j]].elements);
    for (std::size_t c = 0; c < reps.size(); ++c) {
      auto col = target.action(reps[c]) * images[j];
      for (std::size_t i = 0; i < target.rank(); ++i) m(i, offsets[j] + c) = col[i];
    }
  }
  return m;
}

// p in source^H (source a permutation-matrix lattice) with map * p == x.
std::vector<Integer> invariant_lift(const GLattice& source, const IntMatrix& map, const std::vector<Integer>& x,
                                    const std::vector<Element>& subgroup) {
  const std::size_t n = source.rank();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Integer>> orbit_sums;
  for (std::size_t b = 0; b < n; ++b) {
    if (seen[b]) continue;
    std::vector<Integer> sum(n);
    for (Element h : subgroup) {
      std::size_t t = permuted_index(source.action(h), b);
      if (!seen[t]) {
        seen[t] = true;
        sum[t] = 1;
      }
    }
    orbit_sums.push_back(std::move(sum));
  }
  IntMatrix basis = columns_to_matrix(orbit_sums, n);
  auto y = solve_integer(map * basis, x);
  if (!y) throw Error(ErrorCode::NoSolution, "no invariant lift: fixed points do not surject");
  return basis * *y;
}

struct OrbitSummands {
  std::vector<std::size_t> spec;
  std::vector<std::vector<Integer>> images;
};

// Decomposes a lattice whose elements act by permutation matrices into
// Z[G/H] summands, one per orbit of basis vectors.
OrbitSummands orbit_summands(const GLattice& x, const std::vector<SubgroupClass>& classes) {
  const FiniteGroup& g = *x.group();
  OrbitSummands out;
  std::vector<bool> seen(x.rank(), false);
  for (std::size_t v = 0; v < x.rank(); ++v) {
    if (seen[v]) continue;
    std::vector<Element> stabilizer;
    for (Element a = 0; a < g.order(); ++a) {
      std::size_t t = permuted_index(x.action(a), v);
      seen[t] = true;
      if (t == v) stabilizer.push_back(a);
    }
    bool found = false;
    for (const auto& cls : classes) {
      if (cls.order != stabilizer.size()) continue;
      for (Element t = 0; t < g.order() && !found; ++t) {
        std::vector<Element> conj;
        for (Element s : stabilizer) conj.push_back(g.conjugate(t, s));
        std::sort(conj.begin(), conj.end());
        if (conj != cls.elements) continue;
        std::vector<Integer> w(x.rank());
        w[permuted_index(x.action(t), v)] = 1;
        out.spec.push_back(cls.id);
        out.images.push_back(std::move(w));
        found = true;
      }
      if (found) break;
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "stabilizer not found among subgroup classes");
  }
  return out;
}

}  // namespace

FinAbGroup h1(const GLattice& x, const std::vector<Element>& generators) {
  const FiniteGroup& g = *x.group();
  const std::size_t r = x.rank();
  const std::size_t k = generators.size();
  const std::size_t unknowns = k * r;

  // f(y) = F[y] * u, where u stacks the values of the cocycle on the generators.
  std::vector<std::optional<IntMatrix>> F(g.order());
  F[g.identity()] = IntMatrix(r, unknowns);
  std::vector<IntMatrix> relations;
  std::vector<Element> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element a = queue[head];
    for (std::size_t i = 0; i < k; ++i) {
      Element b = g.multiply(a, generators[i]);
      IntMatrix candidate = *F[a];
      const IntMatrix& act = x.action(a);
      for (std::size_t row = 0; row < r; ++row)
        for (std::size_t col = 0; col < r; ++col) candidate(row, i * r + col) += act(row, col);
      if (!F[b]) {
        F[b] = std::move(candidate);
        queue.push_back(b);
      } else {
        IntMatrix rel = candidate - *F[b];
        if (!rel.is_zero()) relations.push_back(std::move(rel));
      }
    }
  }
  IntMatrix constraints = vstack(relations, unknowns);
  if (constraints.rows() > 0) constraints = hermite_normal_form(constraints);
  IntMatrix cocycles = kernel_basis(constraints);

  std::vector<IntMatrix> blocks;
  for (Element s : generators) blocks.push_back(x.action(s) - IntMatrix::identity(r));
  IntMatrix coboundaries = vstack(blocks, r);

  auto coords = solve_integer(cocycles, coboundaries);
  if (!coords) throw Error(ErrorCode::OracleMismatch, "coboundaries are not cocycles");
  return cokernel_structure(*coords);
}

FinAbGroup h1(const GLattice& x, const SubgroupClass& h) { return h1(x, h.generators); }

FinAbGroup tate_h0(const GLattice& x, const std::vector<Element>& elements, const std::vector<Element>& generators) {
  IntMatrix norm(x.rank(), x.rank());
  for (Element h : elements) norm += x.action(h);
  IntMatrix fixed = invariants_and_coinvariants(x, generators).invariant_basis;
  auto coords = solve_integer(fixed, norm);
  if (!coords) throw Error(ErrorCode::OracleMismatch, "norm image is not invariant");
  return cokernel_structure(*coords);
}

FinAbGroup tate_h0(const GLattice& x, const SubgroupClass& h) { return tate_h0(x, h.elements, h.generators); }

FlasqueCheck is_flasque(const GLattice& x, std::size_t subgroup_bound) {
  FlasqueCheck check;
  for (const auto& cls : x.group()->subgroup_classes(subgroup_bound)) {
    FinAbGroup h = h1(x, cls);
    if (!h.is_trivial()) {
      check.flasque = false;
      check.witnesses.push_back({cls.id, h});
    }
  }
  return check;
}

GLattice permutation_lattice_from_spec(const GroupPtr& group, const std::vector<std::size_t>& spec,
                                       std::size_t subgroup_bound) {
  const auto& classes = group->subgroup_classes(subgroup_bound);
  GLattice out = GLattice::trivial(group, 0);
  for (std::size_t id : spec) {
    if (id >= classes.size()) throw Error(ErrorCode::InvalidArgument, "unknown subgroup class id " + std::to_string(id));
    out = direct_sum(out, permutation_lattice(group, classes[id]));
  }
  return out;
}

FlasqueResolution flasque_resolution(const GLattice& x, std::size_t subgroup_bound) {
  const GroupPtr& group = x.group();
  const FiniteGroup& g = *group;
  const auto& classes = g.subgroup_classes(subgroup_bound);
  FlasqueResolution res;

  if (all_permutation_matrices(x)) {
    OrbitSummands orbits = orbit_summands(x, classes);
    res.p_spec = orbits.spec;
    res.P = permutation_lattice_from_spec(group, res.p_spec, subgroup_bound);
    res.surjection = extend_from_spec(g, classes, res.p_spec, orbits.images, x);
    res.inclusion = IntMatrix(res.P.rank(), 0);
    res.Q = GLattice::trivial(group, 0);
    res.identity = true;
  } else {
    // Largest subgroups first; a new summand Z[G/H] -> X is added for each
    // X^H basis vector not already reached from P^H.
    std::vector<std::vector<Integer>> images;
    for (std::size_t idx = classes.size(); idx-- > 0;) {
      const SubgroupClass& h = classes[idx];
      IntMatrix fixed = invariants_and_coinvariants(x, h).invariant_basis;
      if (fixed.cols() == 0) continue;
      std::vector<std::vector<Integer>> reached;
      for (std::size_t s = 0; s < res.p_spec.size(); ++s) {
        const SubgroupClass& k = classes[res.p_spec[s]];
        auto reps = coset_representatives(g, k.elements);
        std::vector<std::size_t> coset_of(g.order());
        for (std::size_t c = 0; c < reps.size(); ++c)
          for (Element e : k.elements) coset_of[g.multiply(reps[c], e)] = c;
        std::vector<bool> seen(reps.size(), false);
        for (std::size_t c = 0; c < reps.size(); ++c) {
          if (seen[c]) continue;
          std::vector<Integer> sum(x.rank());
          for (Element e : h.elements) {
            std::size_t t = coset_of[g.multiply(e, reps[c])];
            if (seen[t]) continue;
            seen[t] = true;
            auto v = x.action(reps[t]) * images[s];
            for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
          }
          reached.push_back(std::move(sum));
        }
      }
      for (std::size_t j = 0; j < fixed.cols(); ++j) {
        std::vector<Integer> v = fixed.column(j);
        if (in_span(reached, v)) continue;
        res.p_spec.push_back(h.id);
        images.push_back(v);
        reached.push_back(std::move(v));
      }
    }
    res.P = permutation_lattice_from_spec(group, res.p_spec, subgroup_bound);
    res.surjection = extend_from_spec(g, classes, res.p_spec, images, x);
    res.inclusion = kernel_basis(res.surjection);
    res.Q = sublattice(res.P, res.inclusion);
  }

  auto problems = check_resolution(x, res, subgroup_bound);
  if (!problems.empty()) throw Error(ErrorCode::OracleMismatch, "flasque resolution postcondition: " + problems.front());
  return res;
}

std::vector<std::string> check_resolution(const GLattice& x, const FlasqueResolution& res,
                                          std::size_t subgroup_bound) {
  std::vector<std::string> problems;
  const FiniteGroup& g = *x.group();
  if (res.surjection.rows() != x.rank() || res.surjection.cols() != res.P.rank() ||
      res.inclusion.rows() != res.P.rank() || res.inclusion.cols() != res.Q.rank()) {
    problems.push_back("map shapes do not match the lattices");
    return problems;
  }
  if (res.P.rank() != res.Q.rank() + x.rank()) problems.push_back("rank(P) != rank(Q) + rank(X)");
  if (!(res.surjection * res.inclusion).is_zero()) problems.push_back("surjection o inclusion != 0");
  if (!cokernel_structure(res.surjection).is_trivial()) problems.push_back("P -> X is not surjective over Z");
  FinAbGroup incl_coker = cokernel_structure(res.inclusion);
  if (!incl_coker.invariant_factors().empty() || incl_coker.free_rank() != x.rank())
    problems.push_back("inclusion is not a basis of the kernel");
  for (Element s : g.generators()) {
    if (res.surjection * res.P.action(s) != x.action(s) * res.surjection)
      problems.push_back("surjection is not equivariant at generator " + std::to_string(s));
    if (res.P.action(s) * res.inclusion != res.inclusion * res.Q.action(s))
      problems.push_back("inclusion is not equivariant at generator " + std::to_string(s));
  }
  if (!is_flasque(res.Q, subgroup_bound).flasque) problems.push_back("Q is not flasque");
  return problems;
}

bool verify_invertibility(const GLattice& q, const InvertibilityCertificate& cert, std::size_t subgroup_bound) {
  GLattice source = direct_sum(q, cert.complement);
  GLattice target = permutation_lattice_from_spec(q.group(), cert.target_spec, subgroup_bound);
  if (source.rank() != target.rank() || cert.iso.rows() != target.rank() || cert.iso.cols() != source.rank())
    throw Error(ErrorCode::ShapeMismatch, "certificate shapes do not match: source rank " +
                                              std::to_string(source.rank()) + ", target rank " +
                                              std::to_string(target.rank()));
  if (abs(determinant(cert.iso)) != 1) return false;
  for (Element s : q.group()->generators())
    if (cert.iso * source.action(s) != target.action(s) * cert.iso) return false;
  return true;
}

InvertibilityCertificate certificate_from_presentation(const GLattice& x, const FlasqueResolution& res,
                                                       const PermutationPresentation& presentation,
                                                       std::size_t subgroup_bound) {
  const GroupPtr& group = x.group();
  const FiniteGroup& g = *group;
  const auto& classes = g.subgroup_classes(subgroup_bound);
  GLattice p_alt = permutation_lattice_from_spec(group, presentation.p_spec, subgroup_bound);
  GLattice q_alt = permutation_lattice_from_spec(group, presentation.q_spec, subgroup_bound);
  if (presentation.surjection.rows() != x.rank() || presentation.surjection.cols() != p_alt.rank() ||
      presentation.inclusion.rows() != p_alt.rank() || presentation.inclusion.cols() != q_alt.rank())
    throw Error(ErrorCode::ShapeMismatch, "presentation maps do not match the permutation specs");

  // lambda: P' -> P and mu: P -> P', equivariant lifts through X.
  auto lift_all = [&](const std::vector<std::size_t>& spec, const IntMatrix& spec_map, const GLattice& through,
                      const IntMatrix& through_map) {
    auto offsets = summand_offsets(classes, spec);
    std::vector<std::vector<Integer>> images;
    for (std::size_t j = 0; j < spec.size(); ++j)
      images.push_back(invariant_lift(through, through_map, spec_map.column(offsets[j]), classes[spec[j]].elements));
    return extend_from_spec(g, classes, spec, images, through);
  };
  IntMatrix lambda = lift_all(presentation.p_spec, presentation.surjection, res.P, res.surjection);
  IntMatrix mu = lift_all(res.p_spec, res.surjection, p_alt, presentation.surjection);

  const IntMatrix& incl = res.inclusion;
  IntMatrix top_rhs = hstack({IntMatrix(mu * incl) * Integer(-1), IntMatrix::identity(p_alt.rank()) - mu * lambda},
                             p_alt.rank());
  auto top = solve_integer(presentation.inclusion, top_rhs);
  if (!top) throw Error(ErrorCode::NoSolution, "presentation kernel does not contain the comparison map");
  IntMatrix bottom = hstack({incl, lambda}, res.P.rank());

  InvertibilityCertificate cert;
  cert.complement = p_alt;
  cert.iso = vstack({*top, bottom}, incl.cols() + lambda.cols());
  cert.target_spec = presentation.q_spec;
  cert.target_spec.insert(cert.target_spec.end(), res.p_spec.begin(), res.p_spec.end());
  return cert;
}

namespace {

// Calls visit(combination) for coefficient vectors with entries in
// [-bound, bound], by increasing support size; stops when visit returns true
// or the budget runs out.
bool enumerate_combinations(std::size_t dim, long bound, std::size_t& budget,
                            const std::function<bool(const std::vector<long>&)>& visit) {
  std::vector<long> coeffs(dim, 0);
  for (std::size_t support = 1; support <= dim; ++support) {
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) -> bool {
      if (left == 0) {
        if (budget == 0) return true;
        --budget;
        return visit(coeffs);
      }
      for (std::size_t i = start; i + left <= dim; ++i) {
        for (long c = -bound; c <= bound; ++c) {
          if (c == 0) continue;
          coeffs[i] = c;
          if (rec(i + 1, left - 1)) return true;
          if (budget == 0) {
            coeffs[i] = 0;
            return true;
          }
        }
        coeffs[i] = 0;
      }
      return false;
    };
    if (rec(0, support)) return budget > 0 || true;
  }
  return false;
}

// Z-basis of Hom_G(source, target) as flattened target.rank() x source.rank() matrices.
std::vector<IntMatrix> equivariant_hom_basis(const GLattice& source, const GLattice& target) {
  const std::size_t m = target.rank(), n = source.rank();
  std::vector<IntMatrix> rows;
  for (Element s : source.group()->generators()) {
    const IntMatrix& a = target.action(s);
    const IntMatrix& b = source.action(s);
    IntMatrix eq(m * n, m * n);
    // (a M - M b)[i][j] = sum_k a[i][k] M[k][j] - sum_k M[i][k] b[k][j]
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) eq(i * n + j, k * n + j) += a(i, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) eq(i * n + j, i * n + k) -= b(k, j);
    rows.push_back(std::move(eq));
  }
  IntMatrix basis = kernel_basis(vstack(rows, m * n));
  std::vector<IntMatrix> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    IntMatrix h(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = basis(i * n + j, c);
    out.push_back(std::move(h));
  }
  return out;
}

// Multisets of class ids (non-decreasing) with total index `rank`.
void multisets_of_rank(const std::vector<SubgroupClass>& classes, std::size_t rank, std::size_t start,
                       std::vector<std::size_t>& current, std::vector<std::vector<std::size_t>>& out) {
  if (rank == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t id = start; id < classes.size(); ++id) {
    if (classes[id].index > rank) continue;
    current.push_back(id);
    multisets_of_rank(classes, rank - classes[id].index, id, current, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<InvertibilityCertificate> search_invertibility_certificate(const GLattice& q,
                                                                         const CertificateSearchLimits& limits,
                                                                         std::size_t subgroup_bound) {
  const GroupPtr& group = q.group();
  const FiniteGroup& g = *group;
  const auto& classes = g.subgroup_classes(subgroup_bound);

  if (all_permutation_matrices(q)) {
    OrbitSummands orbits = orbit_summands(q, classes);
    IntMatrix to_q = extend_from_spec(g, classes, orbits.spec, orbits.images, q);
    InvertibilityCertificate cert{GLattice::trivial(group, 0), to_q.transpose(), orbits.spec};
    if (verify_invertibility(q, cert, subgroup_bound)) return cert;
  }

  std::vector<std::vector<Integer>> perm_chars;
  for (const auto& cls : classes) perm_chars.push_back(lattice_character(permutation_lattice(group, cls)));
  auto char_of = [&](const std::vector<std::size_t>& spec) {
    std::vector<Integer> chi(g.conjugacy_classes().size());
    for (std::size_t id : spec)
      for (std::size_t c = 0; c < chi.size(); ++c) chi[c] += perm_chars[id][c];
    return chi;
  };
  const std::vector<Integer> chi_q = lattice_character(q);

  std::size_t budget = limits.max_candidates;
  for (std::size_t extra = 0; extra <= limits.complement_rank; ++extra) {
    std::vector<std::vector<std::size_t>> complements;
    std::vector<std::size_t> scratch;
    multisets_of_rank(classes, extra, 0, scratch, complements);
    for (const auto& comp : complements) {
      auto chi_c = char_of(comp);
      std::vector<Integer> wanted = chi_q;
      for (std::size_t c = 0; c < wanted.size(); ++c) wanted[c] += chi_c[c];
      std::vector<std::vector<std::size_t>> targets;
      multisets_of_rank(classes, q.rank() + extra, 0, scratch, targets);
      for (const auto& target_spec : targets) {
        if (char_of(target_spec) != wanted) continue;
        GLattice complement = permutation_lattice_from_spec(group, comp, subgroup_bound);
        GLattice source = direct_sum(q, complement);
        GLattice target = permutation_lattice_from_spec(group, target_spec, subgroup_bound);
        auto basis = equivariant_hom_basis(source, target);
        std::optional<IntMatrix> found;
        enumerate_combinations(basis.size(), limits.coefficient_bound, budget, [&](const std::vector<long>& c) {
          IntMatrix m(target.rank(), source.rank());
          for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) m += basis[i] * Integer(c[i]);
          if (abs(determinant(m)) != 1) return false;
          found = std::move(m);
          return true;
        });
        if (found) {
          InvertibilityCertificate cert{complement, *found, target_spec};
          if (verify_invertibility(q, cert, subgroup_bound)) return cert;
        }
        if (budget == 0) return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

std::string to_string(MotivicVerdict v) {
  switch (v) {
    case MotivicVerdict::YesMetaCyclic: return "YesMetaCyclic";
    case MotivicVerdict::YesInvertibleCertificate: return "YesInvertibleCertificate";
    case MotivicVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

MotivicCheck check_motivic_interpretation(const GLattice& x, const std::optional<InvertibilityCertificate>& certificate,
                                          const std::optional<PermutationPresentation>& presentation,
                                          const CertificateSearchLimits& limits, std::size_t subgroup_bound) {
  MotivicCheck out;
  if (is_metacyclic(*x.group(), subgroup_bound)) {
    out.verdict = MotivicVerdict::YesMetaCyclic;
    return out;
  }
  out.resolution = flasque_resolution(x, subgroup_bound);
  const GLattice& q = out.resolution->Q;
  if (certificate && verify_invertibility(q, *certificate, subgroup_bound)) {
    out.verdict = MotivicVerdict::YesInvertibleCertificate;
    out.certificate = certificate;
    out.certificate_source = "supplied";
    return out;
  }
  if (presentation) {
    auto cert = certificate_from_presentation(x, *out.resolution, *presentation, subgroup_bound);
    if (verify_invertibility(q, cert, subgroup_bound)) {
      out.verdict = MotivicVerdict::YesInvertibleCertificate;
      out.certificate = std::move(cert);
      out.certificate_source = "presentation";
      return out;
    }
  }
  if (auto cert = search_invertibility_certificate(q, limits, subgroup_bound)) {
    out.verdict = MotivicVerdict::YesInvertibleCertificate;
    out.certificate = std::move(cert);
    out.certificate_source = "search";
    return out;
  }
  out.verdict = MotivicVerdict::Unknown;
  return out;
}

RealDecomposition real_decomposition(const GLattice& x, Element conj) {
  const FiniteGroup& g = *x.group();
  if (g.multiply(conj, conj) != g.identity())
    throw Error(ErrorCode::InvalidArgument, "complex conjugation must have order at most 2");
  const std::size_t r = x.rank();
  const IntMatrix& s = x.action(conj);
  const IntMatrix id = IntMatrix::identity(r);

  // Cyclic formulas for C2 acting through s: H^0 = ker(s-1)/im(1+s), H^1 = ker(1+s)/im(s-1).
  auto quotient = [](const IntMatrix& kernel_of, const IntMatrix& image_of) {
    IntMatrix basis = kernel_basis(kernel_of);
    auto coords = solve_integer(basis, image_of);
    if (!coords) throw Error(ErrorCode::OracleMismatch, "image not contained in kernel");
    return cokernel_structure(*coords);
  };
  FinAbGroup h0 = quotient(s - id, s + id);
  FinAbGroup h1_group = quotient(s + id, s - id);
  for (const FinAbGroup* grp : {&h0, &h1_group})
    for (const auto& d : grp->invariant_factors())
      if (d != 2) throw Error(ErrorCode::OracleMismatch, "C2 cohomology must be killed by 2");

  RealDecomposition out;
  out.trivial = h0.invariant_factors().size();
  out.sign = h1_group.invariant_factors().size();
  if (out.trivial + out.sign > r || (r - out.trivial - out.sign) % 2 != 0)
    throw Error(ErrorCode::InconsistentRank, "rank minus a minus b is odd or negative");
  out.induced = (r - out.trivial - out.sign) / 2;
  auto twos = [](std::size_t k) { return FinAbGroup::from_cyclic_orders(std::vector<Integer>(k, Integer(2))); };
  out.real_torsion = twos(out.trivial);
  out.k_mod_n = twos(out.trivial);
  out.h2 = twos(out.trivial + out.sign);
  out.h3 = twos(out.sign);
  return out;
}

}  // namespace torusbt
