#include "glocsur/gmodule.hpp"

#include <algorithm>

namespace glocsur {

namespace {

const char* kind_name(ActionViolation::Kind k) {
  switch (k) {
    case ActionViolation::Kind::shape: return "shape";
    case ActionViolation::Kind::identity: return "identity";
    case ActionViolation::Kind::composition: return "composition";
    case ActionViolation::Kind::relation: return "relation";
  }
  return "?";
}

bool congruent(const FgAbGroup& carrier, const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!carrier.is_zero(a.column(c) - b.column(c))) return false;
  return true;
}

}  // namespace

std::vector<ActionViolation> validate_action(const FiniteGroup& group, const FgAbGroup& carrier,
                                             const std::vector<IntMatrix>& action) {
  using K = ActionViolation::Kind;
  std::vector<ActionViolation> out;
  const std::size_t n = carrier.ambient_rank();
  if (action.size() != group.order()) {
    out.push_back({K::shape, 0, 0, 0,
                   "action lists " + std::to_string(action.size()) + " matrices for a group of order " +
                       std::to_string(group.order())});
    return out;
  }
  for (std::size_t g = 0; g < action.size(); ++g)
    if (action[g].rows() != n || action[g].cols() != n)
      out.push_back({K::shape, g, 0, 0, "action of element " + std::to_string(g) + " is not " + std::to_string(n) + "x" +
                                            std::to_string(n)});
  if (!out.empty()) return out;

  if (!congruent(carrier, action[0], IntMatrix::identity(n)))
    out.push_back({K::identity, 0, 0, 0, "identity element does not act trivially"});
  const IntMatrix& rel = carrier.relations();
  for (std::size_t g = 0; g < action.size(); ++g) {
    const IntMatrix image = action[g] * rel;
    for (std::size_t c = 0; c < image.cols(); ++c)
      if (!carrier.is_zero(image.column(c)))
        out.push_back({K::relation, g, 0, c,
                       "action of element " + std::to_string(g) + " moves relation column " + std::to_string(c) +
                           " out of the relation span"});
  }
  for (std::size_t g = 0; g < action.size(); ++g)
    for (std::size_t h = 0; h < action.size(); ++h)
      if (!congruent(carrier, action[g] * action[h], action[group.mul(g, h)]))
        out.push_back({K::composition, g, h, 0,
                       "action(" + std::to_string(g) + ")*action(" + std::to_string(h) + ") != action(" +
                           std::to_string(group.mul(g, h)) + ")"});
  return out;
}

GModule::GModule(FiniteGroup group, FgAbGroup carrier, std::vector<IntMatrix> action) {
  auto bad = validate_action(group, carrier, action);
  if (!bad.empty())
    throw InputError(std::string("invalid group action (") + kind_name(bad.front().kind) + "): " + bad.front().message);
  data_ = std::make_shared<Data>(Data{std::move(group), std::move(carrier), std::move(action)});
}

GModule GModule::trivial_action(FiniteGroup group, FgAbGroup carrier) {
  std::vector<IntMatrix> action(group.order(), IntMatrix::identity(carrier.ambient_rank()));
  return GModule(std::move(group), std::move(carrier), std::move(action));
}

GModule GModule::from_generator_action(FiniteGroup group, FgAbGroup carrier, const std::vector<std::size_t>& generators,
                                       const std::vector<IntMatrix>& matrices) {
  if (generators.size() != matrices.size())
    throw InputError("generator action lists " + std::to_string(matrices.size()) + " matrices for " +
                     std::to_string(generators.size()) + " generators");
  const std::size_t n = carrier.ambient_rank();
  for (std::size_t k = 0; k < matrices.size(); ++k)
    if (matrices[k].rows() != n || matrices[k].cols() != n)
      throw InputError("generator action matrix " + std::to_string(k) + " has the wrong shape");
  std::vector<std::size_t> bfs;
  auto parent = group.spanning_tree(generators, &bfs);
  std::vector<IntMatrix> action(group.order());
  action[0] = IntMatrix::identity(n);
  for (std::size_t at = 1; at < bfs.size(); ++at) {
    const std::size_t e = bfs[at];
    action[e] = action[parent[e].first] * matrices[parent[e].second];
  }
  return GModule(std::move(group), std::move(carrier), std::move(action));
}

IntMatrix augmentation_relations(const GModule& m, const std::vector<std::size_t>& elements) {
  const std::size_t n = m.rank();
  IntMatrix out(n, 0);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t g : elements) {
    if (g == 0) continue;
    out = hstack(out, m.action(g) - id);
  }
  return out;
}

CoinvariantData coinvariants(const GModule& m, const SubgroupOfG& h, RelationSet rs) {
  if (!(h.group() == m.group())) throw InputError("subgroup belongs to a different group");
  const auto elems = rs == RelationSet::generators ? h.generators() : h.elements();
  const IntMatrix rel = hstack(m.carrier().relations(), augmentation_relations(m, elems));
  FgAbGroup q(m.rank(), rel);
  Homomorphism proj(m.carrier(), q, IntMatrix::identity(m.rank()));
  auto [tf, tf_proj] = tf_quotient(q);
  return CoinvariantData{q, proj, torsion_subgroup(q), tf, tf_proj};
}

Homomorphism induced_map(const CoinvariantData& from, const CoinvariantData& to) {
  return Homomorphism(from.quotient, to.quotient, IntMatrix::identity(from.quotient.ambient_rank()));
}

Homomorphism induced_map_on_coinvariants(const GModule& m, const SubgroupOfG& h, const SubgroupOfG& k) {
  if (!h.is_subgroup_of(k)) throw InputError("induced map needs H contained in K");
  return induced_map(coinvariants(m, h), coinvariants(m, k));
}

Subgroup torsion_image(const CoinvariantData& from, const CoinvariantData& to) {
  return induced_map(from, to).image_of(from.torsion_part);
}

TateResult tate_h_minus_1(const GModule& m, const SubgroupOfG& h) {
  const std::size_t n = m.rank();
  IntMatrix norm(n, n);
  for (std::size_t g : h.elements()) norm = norm + m.action(g);
  const Subgroup ker = Homomorphism(m.carrier(), m.carrier(), norm).kernel();
  const Subgroup aug(m.carrier(), augmentation_relations(m, h.generators()));
  Subquotient sq = subquotient(ker, aug);
  CoinvariantData mh = coinvariants(m, h);
  Homomorphism emb(sq.group, mh.quotient, sq.lift);
  return TateResult{sq.group, emb, norm};
}

IntMatrix bar_boundary_1(const GModule& m, const SubgroupOfG& h) {
  const std::size_t n = m.rank(), s = h.order();
  const FiniteGroup& g = m.group();
  IntMatrix d1(n, s * n);
  for (std::size_t a = 0; a < s; ++a) {
    const IntMatrix& act = m.action(g.inverse(h.elements()[a]));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d1(r, a * n + c) = act(r, c) - (r == c ? 1 : 0);
  }
  return d1;
}

IntMatrix bar_boundary_2(const GModule& m, const SubgroupOfG& h, Execution exec) {
  const std::size_t n = m.rank(), s = h.order();
  const FiniteGroup& g = m.group();
  const auto& el = h.elements();
  auto local = [&](std::size_t x) {
    return static_cast<std::size_t>(std::lower_bound(el.begin(), el.end(), x) - el.begin());
  };
  // m (x) [a|b] -> a^-1 m (x) [b] - m (x) [ab] + m (x) [a]
  IntMatrix d2(s * n, s * s * n);
  for_each_index(s * s, exec, [&](std::size_t pair) {
    const std::size_t a = pair / s, b = pair % s;
    const std::size_t ab = local(g.mul(el[a], el[b]));
    const IntMatrix& act = m.action(g.inverse(el[a]));
    const std::size_t col0 = pair * n;
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) d2(b * n + r, col0 + c) += act(r, c);
      d2(ab * n + c, col0 + c) -= 1;
      d2(a * n + c, col0 + c) += 1;
    }
  });
  return d2;
}

FgAbGroup h1_bar_complex(const GModule& m, const SubgroupOfG& h, Execution exec) {
  const std::size_t n = m.rank(), s = h.order();
  const IntMatrix& rel = m.carrier().relations();
  IntMatrix rel1(s * n, 0);
  for (std::size_t a = 0; a < s; ++a) {
    IntMatrix block(s * n, rel.cols());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < rel.cols(); ++c) block(a * n + r, c) = rel(r, c);
    rel1 = hstack(rel1, block);
  }
  FgAbGroup c1(s * n, rel1);
  const Subgroup cycles = Homomorphism(c1, m.carrier(), bar_boundary_1(m, h)).kernel();
  const Subgroup boundaries(c1, bar_boundary_2(m, h, exec));
  return subquotient(cycles, boundaries).group;
}

SubmoduleData submodule(const GModule& m, const IntMatrix& generators) {
  const std::size_t n = m.rank();
  if (generators.rows() != n) throw InputError("submodule generators have the wrong length");
  IntMatrix span = m.carrier().relations();
  for (const auto& a : m.actions()) span = hstack(span, a * generators);
  const Lattice lat = span.cols() == 0 ? Lattice(n) : Lattice(span);
  const IntMatrix& basis = lat.basis();
  const std::size_t k = basis.cols();
  auto coords = [&](const IntMatrix& cols) {
    IntMatrix out(k, cols.cols());
    for (std::size_t c = 0; c < cols.cols(); ++c) {
      auto x = lat.coordinates(cols.column(c));
      if (!x) throw InvariantViolation("submodule lattice is not stable");
      for (std::size_t r = 0; r < k; ++r) out(r, c) = (*x)[r];
    }
    return out;
  };
  FgAbGroup sub_carrier(k, coords(m.carrier().relations()));
  std::vector<IntMatrix> sub_action;
  for (const auto& a : m.actions()) sub_action.push_back(coords(a * basis));
  GModule sub(m.group(), sub_carrier, std::move(sub_action));
  GModule quot(m.group(), FgAbGroup(n, basis), m.actions());
  return SubmoduleData{sub, basis, quot};
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (!(a.group() == b.group())) throw InputError("direct sum of modules over different groups");
  FgAbGroup carrier(a.rank() + b.rank(), block_diagonal(a.carrier().relations(), b.carrier().relations()));
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < a.group().order(); ++g) action.push_back(block_diagonal(a.action(g), b.action(g)));
  return GModule(a.group(), carrier, std::move(action));
}

GModule change_basis(const GModule& m, const IntMatrix& w, const IntMatrix& w_inv) {
  if (!(w * w_inv == IntMatrix::identity(m.rank()))) throw InputError("change of basis is not invertible");
  FgAbGroup carrier(m.rank(), w * m.carrier().relations());
  std::vector<IntMatrix> action;
  for (const auto& a : m.actions()) action.push_back(w * a * w_inv);
  return GModule(m.group(), carrier, std::move(action));
}

GModule sign_twist(const GModule& m, const SubgroupOfG& index_two) {
  if (index_two.order() * 2 != m.group().order()) throw InputError("sign twist needs an index-two subgroup");
  std::vector<IntMatrix> action = m.actions();
  for (std::size_t g = 0; g < action.size(); ++g)
    if (!index_two.contains(g)) action[g] = Int(-1) * action[g];
  return GModule(m.group(), m.carrier(), std::move(action));
}

std::vector<std::size_t> left_coset_representatives(const SubgroupOfG& h) {
  const FiniteGroup& g = h.group();
  std::vector<char> covered(g.order(), 0);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (std::size_t y : h.elements()) covered[g.mul(x, y)] = 1;
  }
  return reps;
}

GModule permutation_module(const FiniteGroup& group, const SubgroupOfG& h) {
  const auto reps = left_coset_representatives(h);
  const std::size_t k = reps.size();
  auto coset_of = [&](std::size_t x) {
    for (std::size_t c = 0; c < k; ++c)
      if (h.contains(group.mul(group.inverse(reps[c]), x))) return c;
    throw InvariantViolation("element outside every coset");
  };
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < group.order(); ++g) {
    IntMatrix p(k, k);
    for (std::size_t c = 0; c < k; ++c) p(coset_of(group.mul(g, reps[c])), c) = 1;
    action.push_back(std::move(p));
  }
  return GModule(group, FgAbGroup::free(k), std::move(action));
}

}  // namespace glocsur
