#include "glocsur/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace glocsur {

namespace {

std::vector<std::size_t> closure_from(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> out{0};
  seen[0] = 1;
  for (std::size_t at = 0; at < out.size(); ++at) {
    for (std::size_t s : gens) {
      const std::size_t x = g.mul(out[at], s);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> greedy_generators(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{0};
  for (std::size_t e : elements) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    span = closure_from(g, gens);
  }
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup() : FiniteGroup(cyclic(1)) {}

FiniteGroup FiniteGroup::from_validated(std::size_t n, std::vector<std::size_t> table,
                                        std::vector<std::size_t> gens) {
  auto d = std::make_shared<Data>();
  d->order = n;
  d->table = std::move(table);
  d->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d->table[a * n + b] == 0) d->inverse[a] = b;
  d->generators = std::move(gens);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_cayley(const Table& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  std::vector<std::size_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw InputError("group table row " + std::to_string(a) + " has length " + std::to_string(table[a].size()));
    std::vector<char> seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x = table[a][b];
      if (x >= n) throw InputError("group table entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (seen[x]) throw InputError("group table row " + std::to_string(a) + " is not a permutation");
      seen[x] = 1;
      flat[a * n + b] = x;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[flat[a * n + b]]) throw InputError("group table column " + std::to_string(b) + " is not a permutation");
      seen[flat[a * n + b]] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (flat[a] != a || flat[a * n] != a) throw InputError("element 0 is not the identity of the group table");

  // Light's test: associativity against a generating set suffices.
  auto mul = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };
  std::vector<std::size_t> gens;
  std::vector<char> span(n, 0);
  span[0] = 1;
  for (std::size_t e = 1; e < n; ++e) {
    if (span[e]) continue;
    gens.push_back(e);
    std::fill(span.begin(), span.end(), 0);
    span[0] = 1;
    std::vector<std::size_t> members{0};
    for (std::size_t at = 0; at < members.size(); ++at)
      for (std::size_t s : gens) {
        const std::size_t x = mul(members[at], s);
        if (!span[x]) {
          span[x] = 1;
          members.push_back(x);
        }
      }
  }
  for (std::size_t s : gens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (mul(mul(x, y), s) != mul(x, mul(y, s)))
          throw InputError("group table is not associative at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                           std::to_string(s) + ")");
  return from_validated(n, std::move(flat), std::move(gens));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators, std::size_t max_order) {
  std::size_t degree = 0;
  if (!generators.empty()) degree = generators.front().size();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& p = generators[k];
    if (p.size() != degree) throw InputError("permutation generator " + std::to_string(k) + " has inconsistent degree");
    std::vector<char> seen(degree, 0);
    for (std::size_t x : p) {
      if (x >= degree || seen[x]) throw InputError("permutation generator " + std::to_string(k) + " is not a permutation");
      seen[x] = 1;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  // g*h acts as x -> g(h(x)); new elements are e*s.
  auto compose = [&](const Permutation& g, const Permutation& h) {
    Permutation r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = g[h[x]];
    return r;
  };
  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (const auto& s : generators) {
      Permutation p = compose(elems[at], s);
      if (index.count(p)) continue;
      if (elems.size() >= max_order)
        throw InputError("permutation group closure exceeds the order cap " + std::to_string(max_order));
      index.emplace(p, elems.size());
      elems.push_back(std::move(p));
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::size_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::size_t> gens;
  for (const auto& s : generators) gens.push_back(index.at(s));
  return from_validated(n, std::move(flat), std::move(gens));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<std::size_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = (a + b) % n;
  std::vector<std::size_t> gens;
  if (n > 1) gens.push_back(1);
  return from_validated(n, std::move(flat), std::move(gens));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::size_t> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      flat[x * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  std::vector<std::size_t> gens;
  for (std::size_t g : a.input_generators()) gens.push_back(g * nb);
  for (std::size_t g : b.input_generators()) gens.push_back(g);
  return from_validated(n, std::move(flat), std::move(gens));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n < 3) throw InputError("dihedral group needs n >= 3");
  Permutation r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return from_permutations({r, s});
}

FiniteGroup FiniteGroup::symmetric3() { return from_permutations({{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup FiniteGroup::quaternion() {
  // Units +-1, +-i, +-j, +-k as (sign, basis) with basis 0..3 = 1, i, j, k.
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto encode = [](int s, int b) { return static_cast<std::size_t>(2 * b + (s < 0 ? 1 : 0)); };
  Table t(8, std::vector<std::size_t>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int bx = x / 2, by = y / 2;
      const int s = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sign[bx][by];
      t[x][y] = encode(s, basis[bx][by]);
    }
  return from_cayley(t);
}

std::size_t FiniteGroup::power(std::size_t a, std::size_t k) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup::Table FiniteGroup::cayley_table() const {
  Table t(order(), std::vector<std::size_t>(order()));
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b) t[a][b] = mul(a, b);
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteGroup::spanning_tree(const std::vector<std::size_t>& gens,
                                                                            std::vector<std::size_t>* order_out) const {
  const std::size_t n = order();
  std::vector<std::pair<std::size_t, std::size_t>> parent(n, {0, 0});
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> bfs{0};
  seen[0] = 1;
  for (std::size_t at = 0; at < bfs.size(); ++at) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t x = mul(bfs[at], gens[k]);
      if (seen[x]) continue;
      seen[x] = 1;
      parent[x] = {bfs[at], k};
      bfs.push_back(x);
    }
  }
  if (bfs.size() != n) throw InputError("the given elements do not generate the group");
  if (order_out) *order_out = std::move(bfs);
  return parent;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.data_ == b.data_ || (a.data_->order == b.data_->order && a.data_->table == b.data_->table);
}

SubgroupOfG::SubgroupOfG(FiniteGroup group, std::vector<std::size_t> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (std::size_t e : elements_)
    if (e >= group_.order())
      throw InputError("subgroup element " + std::to_string(e) + " is out of range for a group of order " +
                       std::to_string(group_.order()));
  if (elements_.empty() || elements_.front() != 0) throw InputError("subgroup does not contain the identity");
  for (std::size_t a : elements_) {
    if (!contains(group_.inverse(a)))
      throw InputError("subgroup is not closed under inverses at element " + std::to_string(a));
    for (std::size_t b : elements_)
      if (!contains(group_.mul(a, b)))
        throw InputError("subgroup is not closed: " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                         std::to_string(group_.mul(a, b)) + " is missing");
  }
}

SubgroupOfG SubgroupOfG::generated(const FiniteGroup& group, const std::vector<std::size_t>& gens) {
  for (std::size_t g : gens)
    if (g >= group.order()) throw InputError("generator " + std::to_string(g) + " is out of range");
  return SubgroupOfG(group, closure_from(group, gens));
}

SubgroupOfG SubgroupOfG::trivial(const FiniteGroup& group) { return SubgroupOfG(group, {0}); }

SubgroupOfG SubgroupOfG::whole(const FiniteGroup& group) {
  std::vector<std::size_t> all(group.order());
  std::iota(all.begin(), all.end(), 0);
  return SubgroupOfG(group, std::move(all));
}

bool SubgroupOfG::contains(std::size_t g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }

bool SubgroupOfG::is_subgroup_of(const SubgroupOfG& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

SubgroupOfG SubgroupOfG::conjugate(std::size_t g) const {
  std::vector<std::size_t> out;
  out.reserve(elements_.size());
  const std::size_t gi = group_.inverse(g);
  for (std::size_t h : elements_) out.push_back(group_.mul(group_.mul(g, h), gi));
  return SubgroupOfG(group_, std::move(out));
}

std::vector<std::size_t> SubgroupOfG::generators() const { return greedy_generators(group_, elements_); }

bool SubgroupOfG::is_cyclic() const {
  for (std::size_t e : elements_)
    if (group_.element_order(e) == order()) return true;
  return false;
}

std::vector<SubgroupOfG> cyclic_subgroups(const FiniteGroup& group) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<SubgroupOfG> out;
  for (std::size_t g = 0; g < group.order(); ++g) {
    auto h = SubgroupOfG::generated(group, {g});
    if (seen.insert(h.elements()).second) out.push_back(h);
  }
  return out;
}

std::vector<SubgroupOfG> all_subgroups(const FiniteGroup& group) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<SubgroupOfG> out;
  for (const auto& c : cyclic_subgroups(group)) {
    seen.insert(c.elements());
    out.push_back(c);
  }
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      std::vector<std::size_t> gens = out[a].elements();
      gens.insert(gens.end(), out[b].elements().begin(), out[b].elements().end());
      auto j = SubgroupOfG::generated(group, gens);
      if (seen.insert(j.elements()).second) out.push_back(j);
    }
  }
  std::sort(out.begin(), out.end(), [](const SubgroupOfG& x, const SubgroupOfG& y) {
    return std::make_pair(x.order(), x.elements()) < std::make_pair(y.order(), y.elements());
  });
  return out;
}

std::vector<SubgroupOfG> cyclic_subgroup_classes(const FiniteGroup& group) {
  std::set<std::vector<std::size_t>> reps;
  for (const auto& c : cyclic_subgroups(group)) {
    std::vector<std::size_t> best = c.elements();
    for (std::size_t g = 0; g < group.order(); ++g) best = std::min(best, c.conjugate(g).elements());
    reps.insert(best);
  }
  std::vector<SubgroupOfG> out;
  for (const auto& r : reps) out.emplace_back(group, r);
  std::sort(out.begin(), out.end(), [](const SubgroupOfG& x, const SubgroupOfG& y) {
    return std::make_pair(x.order(), x.elements()) < std::make_pair(y.order(), y.elements());
  });
  return out;
}

bool are_conjugate(const SubgroupOfG& a, const SubgroupOfG& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t g = 0; g < a.group().order(); ++g)
    if (a.conjugate(g) == b) return true;
  return false;
}

std::size_t abelianization_order(const FiniteGroup& group) {
  std::vector<std::size_t> commutators;
  for (std::size_t a = 0; a < group.order(); ++a)
    for (std::size_t b = 0; b < group.order(); ++b)
      commutators.push_back(group.mul(group.mul(a, b), group.mul(group.inverse(a), group.inverse(b))));
  return group.order() / SubgroupOfG::generated(group, commutators).order();
}

}  // namespace glocsur
