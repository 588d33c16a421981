#include "torusbt/finite_group.hpp"

#include "torusbt/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

namespace torusbt {

namespace detail {
struct SubgroupCache {
  std::once_flag once;
  std::vector<SubgroupClass> classes;
};
}  // namespace detail

bool SubgroupClass::contains(Element g) const { return std::binary_search(elements.begin(), elements.end(), g); }

namespace {

using Mask = std::uint64_t;

std::vector<Element> mask_elements(Mask m) {
  std::vector<Element> out;
  while (m) {
    out.push_back(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask closure_mask(const FiniteGroup& g, const std::vector<Element>& gens) {
  Mask seen = Mask{1} << g.identity();
  std::vector<Element> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : gens) {
      Element y = g.multiply(queue[head], s);
      if (!(seen & (Mask{1} << y))) {
        seen |= Mask{1} << y;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

// Ascending greedy generating set.
std::vector<Element> greedy_generators(const FiniteGroup& g, const std::vector<Element>& elements) {
  std::vector<Element> gens;
  std::vector<Element> span = g.generated_subgroup(gens);
  for (Element x : elements) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = g.generated_subgroup(gens);
  }
  return gens;
}

bool subgroup_key_less(const std::vector<Element>& a, const std::vector<Element>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<SubgroupClass> enumerate_subgroup_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  // Cyclic subgroups first, then repeated joins with cyclic subgroups.
  std::map<Mask, std::vector<Element>> gens_of;
  std::vector<Mask> cyclic;
  for (Element x = 0; x < n; ++x) {
    Mask m = closure_mask(g, {x});
    if (gens_of.emplace(m, x == g.identity() ? std::vector<Element>{} : std::vector<Element>{x}).second)
      cyclic.push_back(m);
  }
  std::vector<Mask> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask h : frontier) {
      for (Mask c : cyclic) {
        if ((c & ~h) == 0) continue;
        std::vector<Element> gens = gens_of.at(h);
        const auto& cg = gens_of.at(c);
        gens.insert(gens.end(), cg.begin(), cg.end());
        Mask k = closure_mask(g, gens);
        if (gens_of.emplace(k, gens).second) next.push_back(k);
      }
    }
    frontier = std::move(next);
  }

  std::set<Mask> assigned;
  struct Pending {
    std::vector<Element> rep;
    std::size_t class_size;
  };
  std::vector<Pending> pending;
  for (const auto& [mask, unused] : gens_of) {
    if (assigned.count(mask)) continue;
    std::set<Mask> conjugates;
    for (Element x = 0; x < n; ++x) {
      Mask c = 0;
      for (Element h : mask_elements(mask)) c |= Mask{1} << g.conjugate(x, h);
      conjugates.insert(c);
    }
    std::vector<Element> rep;
    for (Mask c : conjugates) {
      assigned.insert(c);
      auto elems = mask_elements(c);
      if (rep.empty() || subgroup_key_less(elems, rep)) rep = std::move(elems);
    }
    pending.push_back({std::move(rep), conjugates.size()});
  }
  std::sort(pending.begin(), pending.end(),
            [](const Pending& a, const Pending& b) { return subgroup_key_less(a.rep, b.rep); });

  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    SubgroupClass s;
    s.id = i;
    s.elements = pending[i].rep;
    s.generators = greedy_generators(g, s.elements);
    s.order = s.elements.size();
    s.index = n / s.order;
    s.class_size = pending[i].class_size;
    s.normalizer_order = n / s.class_size;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table, std::vector<Element> generators) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::InvalidGroup, "multiplication table is not square");
    for (Element x : row)
      if (x >= n) throw Error(ErrorCode::InvalidGroup, "table entry out of range");
  }
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::InvalidGroup, "no identity element");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::InvalidGroup, "multiplication is not associative");
  for (Element g : generators)
    if (g >= n) throw Error(ErrorCode::InvalidGroup, "generator index out of range");

  FiniteGroup grp;
  grp.table_ = std::move(table);
  grp.identity_ = *identity;
  grp.inverse_.assign(n, n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (grp.table_[a][b] == grp.identity_) grp.inverse_[a] = b;
  for (Element a = 0; a < n; ++a)
    if (grp.inverse_[a] == n) throw Error(ErrorCode::InvalidGroup, "element without inverse");
  grp.finish(std::move(generators));
  if (grp.generated_subgroup(grp.generators_).size() != n)
    throw Error(ErrorCode::InvalidGroup, "listed generators do not generate the group");
  return grp;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators, std::size_t degree) {
  for (const auto& p : generators) {
    if (p.size() != degree) throw Error(ErrorCode::NonPermutation, "permutation of wrong degree");
    std::vector<bool> hit(degree, false);
    for (std::size_t x : p) {
      if (x >= degree || hit[x]) throw Error(ErrorCode::NonPermutation, "generator is not a bijection");
      hit[x] = true;
    }
  }
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;

  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Permutation y = compose(elements[head], s);
      if (index.emplace(y, elements.size()).second) elements.push_back(std::move(y));
    }
  }
  const std::size_t n = elements.size();
  FiniteGroup grp;
  grp.table_.assign(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) grp.table_[a][b] = index.at(compose(elements[a], elements[b]));
  grp.identity_ = 0;
  grp.inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (grp.table_[a][b] == 0) grp.inverse_[a] = b;
  std::vector<Element> gens;
  for (const auto& s : generators) gens.push_back(index.at(s));
  grp.permutations_ = std::move(elements);
  grp.finish(std::move(gens));
  return grp;
}

void FiniteGroup::finish(std::vector<Element> generators) {
  const std::size_t n = order();
  subgroup_cache_ = std::make_shared<detail::SubgroupCache>();
  if (generators.empty() && n > 1) {
    std::vector<Element> all(n);
    for (Element i = 0; i < n; ++i) all[i] = i;
    generators_ = greedy_generators(*this, all);
  } else {
    generators_ = std::move(generators);
  }

  class_index_.assign(n, n);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (class_index_[x] != n) continue;
    std::set<Element> orbit;
    for (Element g = 0; g < n; ++g) orbit.insert(conjugate(g, x));
    for (Element y : orbit) class_index_[y] = classes.size();
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(classes.begin(), classes.end(), [this](const auto& a, const auto& b) {
    auto key = [this](const std::vector<Element>& c) { return std::tuple(element_order(c.front()), c.size(), c.front()); };
    return key(a) < key(b);
  });
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Element y : classes[c]) class_index_[y] = c;
  classes_ = std::move(classes);
}

Element FiniteGroup::power(Element a, long k) const {
  if (k < 0) return power(inverse(a), -k);
  Element r = identity_;
  for (long i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = 0; b < a; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::vector<Element> FiniteGroup::generated_subgroup(const std::vector<Element>& gens) const {
  std::vector<bool> seen(order(), false);
  std::vector<Element> queue{identity_};
  seen[identity_] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : gens) {
      Element y = multiply(queue[head], s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

const std::vector<SubgroupClass>& FiniteGroup::subgroup_classes(std::size_t bound) const {
  if (bound > 64) throw Error(ErrorCode::InvalidArgument, "subgroup enumeration bound is limited to 64");
  if (order() > bound)
    throw Error(ErrorCode::GroupTooLarge,
                "group of order " + std::to_string(order()) + " exceeds subgroup bound " + std::to_string(bound));
  std::call_once(subgroup_cache_->once, [this] { subgroup_cache_->classes = enumerate_subgroup_classes(*this); });
  return subgroup_cache_->classes;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<Element>& elements, const std::vector<Element>& generators) const {
  std::vector<Element> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  std::unordered_map<Element, Element> local;
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = i;
  std::vector<std::vector<Element>> table(sorted.size(), std::vector<Element>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      auto it = local.find(multiply(sorted[i], sorted[j]));
      if (it == local.end()) throw Error(ErrorCode::InvalidGroup, "element list is not closed under multiplication");
      table[i][j] = it->second;
    }
  }
  std::vector<Element> gens;
  for (Element g : generators) gens.push_back(local.at(g));
  return from_table(std::move(table), std::move(gens));
}

std::string FiniteGroup::describe() const {
  std::string out = "group of order " + std::to_string(order());
  if (!permutations_.empty() && !generators_.empty()) {
    out += " generated by";
    for (Element g : generators_) {
      out += " [";
      for (std::size_t i = 0; i < permutations_[g].size(); ++i)
        out += (i ? "," : "") + std::to_string(permutations_[g][i]);
      out += "]";
    }
  }
  return out;
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, std::size_t bound) {
  return g.subgroup_classes(bound);
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) { return g.conjugacy_classes(); }

bool is_metacyclic(const FiniteGroup& g, std::size_t bound) {
  std::size_t n = g.order();
  const auto& classes = g.subgroup_classes(bound);
  for (std::size_t p = 2; n > 1; ++p) {
    if (n % p != 0) continue;
    std::size_t sylow_order = 1;
    while (n % p == 0) {
      n /= p;
      sylow_order *= p;
    }
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const SubgroupClass& s) { return s.order == sylow_order; });
    bool cyclic = std::any_of(it->elements.begin(), it->elements.end(),
                              [&](Element x) { return g.element_order(x) == sylow_order; });
    if (!cyclic) return false;
  }
  return true;
}

FiniteGroup trivial_group() { return FiniteGroup::from_permutations({}, 1); }

FiniteGroup cyclic_group(std::size_t n) {
  if (n <= 1) return trivial_group();
  Permutation rot(n);
  for (std::size_t i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return FiniteGroup::from_permutations({rot}, n);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "dihedral_group needs n >= 3");
  Permutation rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutations({rot, refl}, n);
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n <= 1) return trivial_group();
  Permutation cyc(n), swap(n);
  for (std::size_t i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    swap[i] = i;
  }
  std::swap(swap[0], swap[1]);
  if (n == 2) return FiniteGroup::from_permutations({swap}, n);
  return FiniteGroup::from_permutations({cyc, swap}, n);
}

FiniteGroup alternating_group4() { return FiniteGroup::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4); }

FiniteGroup klein_four_group() { return FiniteGroup::from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}}, 4); }

FiniteGroup quaternion_group() {
  // Element 2u + s stands for (-1)^s * unit[u], units 1, i, j, k.
  // unit_product[u][v] = (sign, unit) of unit[u] * unit[v].
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const std::size_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto left_mult = [&](std::size_t u) {
    Permutation p(8);
    for (std::size_t x = 0; x < 8; ++x) {
      std::size_t v = x / 2, s = x % 2;
      p[x] = 2 * unit[u][v] + ((s + static_cast<std::size_t>(sign[u][v])) % 2);
    }
    return p;
  };
  return FiniteGroup::from_permutations({left_mult(1), left_mult(2)}, 8);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<Element>> table(na * nb, std::vector<Element>(na * nb));
  for (Element x = 0; x < na * nb; ++x)
    for (Element y = 0; y < na * nb; ++y)
      table[x][y] = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
  std::vector<Element> gens;
  for (Element g : a.generators()) gens.push_back(g * nb + b.identity());
  for (Element g : b.generators()) gens.push_back(a.identity() * nb + g);
  return FiniteGroup::from_table(std::move(table), std::move(gens));
}

}  // namespace torusbt
