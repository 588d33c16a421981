#include "torusbt/induction.hpp"

#include "torusbt/error.hpp"

namespace torusbt {

ClassFunction character_of(const GLattice& x) {
  ClassFunction chi{x.group(), {}};
  for (const Integer& v : lattice_character(x)) chi.values.emplace_back(v);
  return chi;
}

ClassFunction permutation_character(const GroupPtr& group, const SubgroupClass& h) {
  const FiniteGroup& g = *group;
  ClassFunction chi{group, {}};
  for (const auto& cls : g.conjugacy_classes()) {
    Element rep = cls.front();
    std::size_t count = 0;
    for (Element x = 0; x < g.order(); ++x)
      if (h.contains(g.conjugate(g.inverse(x), rep))) ++count;
    chi.values.push_back(make_rational(count, h.order));
  }
  return chi;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (a.values.size() != b.values.size()) throw Error(ErrorCode::ShapeMismatch, "class functions of different groups");
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

ClassFunction operator*(const Rational& s, const ClassFunction& a) {
  ClassFunction out = a;
  for (auto& v : out.values) v *= s;
  return out;
}

InductionDecomposition artin_induction(const ClassFunction& chi, std::size_t subgroup_bound) {
  const auto& classes = chi.group->subgroup_classes(subgroup_bound);
  const std::size_t rows = chi.values.size();
  const std::size_t n = classes.size();
  if (rows != chi.group->conjugacy_classes().size())
    throw Error(ErrorCode::ShapeMismatch, "class function length does not match the class count");

  // Column j of the system is the permutation character of class n-1-j, so
  // pivots land on large subgroups first.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    ClassFunction p = permutation_character(chi.group, classes[n - 1 - j]);
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = p.values[i];
  }
  for (std::size_t i = 0; i < rows; ++i) a[i][n] = chi.values[i];

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k <= n; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][n] != 0) throw Error(ErrorCode::NoSolution, "not a virtual permutation character");

  std::vector<Rational> sol(n);
  for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = a[i][n];
  InductionDecomposition d;
  d.m = 1;
  for (const auto& s : sol) d.m = lcm(d.m, Integer(s.get_den()));
  d.coefficients.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Rational scaled = sol[j] * Rational(d.m);
    d.coefficients[n - 1 - j] = scaled.get_num();
  }
  if (!check_induction(chi, d, subgroup_bound))
    throw Error(ErrorCode::OracleMismatch, "induction identity failed after solving");
  return d;
}

bool check_induction(const ClassFunction& chi, const InductionDecomposition& d, std::size_t subgroup_bound) {
  const auto& classes = chi.group->subgroup_classes(subgroup_bound);
  if (d.coefficients.size() != classes.size()) return false;
  std::vector<Rational> rhs(chi.values.size());
  for (std::size_t j = 0; j < classes.size(); ++j) {
    if (d.coefficients[j] == 0) continue;
    ClassFunction p = permutation_character(chi.group, classes[j]);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += Rational(d.coefficients[j]) * p.values[i];
  }
  for (std::size_t i = 0; i < rhs.size(); ++i)
    if (rhs[i] != Rational(d.m) * chi.values[i]) return false;
  return true;
}

OnoDecomposition ono_decomposition(const GLattice& x, std::size_t subgroup_bound) {
  ClassFunction chi = character_of(x);
  InductionDecomposition d = artin_induction(chi, subgroup_bound);
  OnoDecomposition out;
  out.m = d.m;
  for (std::size_t id = 0; id < d.coefficients.size(); ++id) {
    const Integer& a = d.coefficients[id];
    if (a == 0) continue;
    out.factors.push_back({id, a});
    auto& spec = a > 0 ? out.q_spec : out.p_spec;
    for (Integer k = abs(a); k > 0; --k) spec.push_back(id);
  }

  const auto& classes = x.group()->subgroup_classes(subgroup_bound);
  ClassFunction lhs = Rational(out.m) * chi;
  ClassFunction rhs{x.group(), std::vector<Rational>(chi.values.size())};
  for (std::size_t id : out.p_spec) lhs = lhs + permutation_character(x.group(), classes[id]);
  for (std::size_t id : out.q_spec) rhs = rhs + permutation_character(x.group(), classes[id]);
  if (!(lhs == rhs)) throw Error(ErrorCode::OracleMismatch, "Ono identity m chi_X + chi_P = chi_Q failed");
  return out;
}

std::string ono_identity_string(const OnoDecomposition& d) {
  std::string s = "L(X,-1)";
  if (d.m != 1) s += "^" + d.m.get_str();
  s += " =";
  if (d.factors.empty()) return s + " 1";
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    s += i == 0 ? " " : " * ";
    s += "zeta_{M_" + std::to_string(d.factors[i].subgroup_id) + "}(-1)";
    if (d.factors[i].exponent != 1) s += "^" + d.factors[i].exponent.get_str();
  }
  return s;
}

}  // namespace torusbt
