#include "glocsur/random_instances.hpp"

namespace glocsur::randomized {

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x676c6fu};
  return Rng(seq);
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::size_t pick(Rng& rng, std::size_t count) {
  if (count == 0) throw InvariantViolation("pick from an empty range");
  return static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(count) - 1));
}

const std::vector<NamedGroup>& group_catalog() {
  static const std::vector<NamedGroup> catalog = [] {
    std::vector<NamedGroup> c;
    for (std::size_t n = 1; n <= 8; ++n) c.push_back({"C" + std::to_string(n), FiniteGroup::cyclic(n)});
    const auto c2 = FiniteGroup::cyclic(2);
    c.push_back({"C2xC2", FiniteGroup::direct_product(c2, c2)});
    c.push_back({"C2xC4", FiniteGroup::direct_product(c2, FiniteGroup::cyclic(4))});
    c.push_back({"C2xC2xC2", FiniteGroup::direct_product(c2, FiniteGroup::direct_product(c2, c2))});
    c.push_back({"S3", FiniteGroup::symmetric3()});
    c.push_back({"D4", FiniteGroup::dihedral(4)});
    c.push_back({"Q8", FiniteGroup::quaternion()});
    return c;
  }();
  return catalog;
}

const NamedGroup& random_group(Rng& rng, std::size_t max_order) {
  std::vector<const NamedGroup*> ok;
  for (const auto& g : group_catalog())
    if (g.group.order() <= max_order) ok.push_back(&g);
  return *ok[pick(rng, ok.size())];
}

std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix w = IntMatrix::identity(n), winv = IntMatrix::identity(n);
  if (n < 2) return {w, winv};
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng, n);
    std::size_t b = pick(rng, n - 1);
    if (b >= a) ++b;
    const Int k = uniform(rng, -1, 1);
    w.add_row_multiple(a, b, k);
    winv.add_column_multiple(b, a, -k);
  }
  return {w, winv};
}

GModule augmentation_kernel(const FiniteGroup& group, const SubgroupOfG& h) {
  GModule perm = permutation_module(group, h);
  const std::size_t k = perm.rank();
  IntMatrix gens(k, k > 0 ? k - 1 : 0);
  for (std::size_t c = 1; c < k; ++c) {
    gens(c, c - 1) = 1;
    gens(0, c - 1) = -1;
  }
  return submodule(perm, gens).sub;
}

namespace {

SubgroupOfG random_subgroup(Rng& rng, const FiniteGroup& group) {
  auto subs = all_subgroups(group);
  return subs[pick(rng, subs.size())];
}

std::vector<SubgroupOfG> index_two_subgroups(const FiniteGroup& group) {
  std::vector<SubgroupOfG> out;
  for (const auto& s : all_subgroups(group))
    if (2 * s.order() == group.order()) out.push_back(s);
  return out;
}

GModule random_piece(Rng& rng, const FiniteGroup& group, std::size_t room) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const int kind = static_cast<int>(uniform(rng, 0, 3));
    const SubgroupOfG h = random_subgroup(rng, group);
    const std::size_t index = group.order() / h.order();
    if (kind == 0) return GModule::trivial_action(group, FgAbGroup::free(1));
    if (kind == 1 && index <= room) return permutation_module(group, h);
    if (kind == 2 && index >= 2 && index - 1 <= room) return augmentation_kernel(group, h);
    if (kind == 3) {
      auto twos = index_two_subgroups(group);
      if (twos.empty()) continue;
      GModule base = index <= room && uniform(rng, 0, 1) ? permutation_module(group, h)
                                                        : GModule::trivial_action(group, FgAbGroup::free(1));
      if (base.rank() > room) continue;
      return sign_twist(base, twos[pick(rng, twos.size())]);
    }
  }
  return GModule::trivial_action(group, FgAbGroup::free(1));
}

}  // namespace

GModule random_lattice_module(Rng& rng, const FiniteGroup& group, std::size_t max_rank) {
  GModule m = random_piece(rng, group, max_rank);
  while (m.rank() < max_rank && uniform(rng, 0, 2) == 0) {
    GModule extra = random_piece(rng, group, max_rank - m.rank());
    if (m.rank() + extra.rank() > max_rank) break;
    m = direct_sum(m, extra);
  }
  auto [w, winv] = random_unimodular(rng, m.rank());
  return change_basis(m, w, winv);
}

namespace {

IntMatrix random_vectors(Rng& rng, std::size_t n, std::size_t count, long bound) {
  IntMatrix v(n, count);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < count; ++c) v(r, c) = uniform(rng, -bound, bound);
  return v;
}

}  // namespace

GModule random_finite_module(Rng& rng, const FiniteGroup& group, std::size_t max_order) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    GModule lat = random_lattice_module(rng, group, 3);
    const long m = uniform(rng, 2, 4);
    GModule cur = submodule(lat, Int(m) * IntMatrix::identity(lat.rank())).quotient;
    for (int step = 0; step < 4; ++step) {
      auto order = cur.carrier().order();
      if (*order <= max_order) {
        if (*order > 1) return cur;
        break;
      }
      cur = submodule(cur, random_vectors(rng, cur.rank(), 1, m)).quotient;
    }
  }
  return submodule(GModule::trivial_action(group, FgAbGroup::free(1)), IntMatrix{{2}}).quotient;
}

GModule random_mixed_module(Rng& rng, const FiniteGroup& group, std::size_t max_rank) {
  GModule lat = random_lattice_module(rng, group, max_rank);
  if (uniform(rng, 0, 3) == 0) return lat;
  const std::size_t count = lat.rank() > 1 ? 1 : static_cast<std::size_t>(uniform(rng, 0, 1));
  IntMatrix v = random_vectors(rng, lat.rank(), count, 3);
  if (count == 0) v = Int(uniform(rng, 2, 4)) * IntMatrix::identity(lat.rank());
  return submodule(lat, v).quotient;
}

GModule random_module(Rng& rng, const FiniteGroup& group, std::size_t max_rank) {
  switch (uniform(rng, 0, 2)) {
    case 0: return random_lattice_module(rng, group, max_rank);
    case 1: return random_finite_module(rng, group);
    default: return random_mixed_module(rng, group, max_rank);
  }
}

LocalizationProblem random_problem(Rng& rng, const GModule& m, const ProblemOptions& options) {
  const FiniteGroup& g = m.group();
  const auto subs = all_subgroups(g);
  std::vector<SubgroupOfG> order_two;
  for (const auto& s : subs)
    if (s.order() == 2) order_two.push_back(s);
  LocalizationProblem p{m, {}, {}, TailSide::none, {}};
  const std::size_t count = 1 + pick(rng, options.max_places);
  for (std::size_t k = 0; k < count; ++k) {
    PlaceSpec v{"v" + std::to_string(k), PlaceKind::finite, subs[pick(rng, subs.size())]};
    const long roll = uniform(rng, 0, 9);
    if (options.allow_archimedean && roll == 0) {
      v.kind = PlaceKind::complex;
      v.decomp = SubgroupOfG::trivial(g);
    } else if (options.allow_archimedean && roll == 1 && !order_two.empty()) {
      v.kind = PlaceKind::real;
      v.decomp = order_two[pick(rng, order_two.size())];
    }
    if (uniform(rng, 0, 1)) p.S.push_back(v.id);
    p.places.push_back(std::move(v));
  }
  if (options.allow_tail) {
    const long roll = uniform(rng, 0, 2);
    if (roll > 0) {
      p.tail_side = roll == 1 ? TailSide::S : TailSide::complement;
      p.tail = cyclic_subgroup_classes(g);
    }
  }
  return p;
}

ShortExactSequence random_ses(Rng& rng, const FiniteGroup& group, std::size_t max_rank) {
  if (uniform(rng, 0, 4) == 0) {
    const std::size_t r1 = 1 + pick(rng, std::max<std::size_t>(1, max_rank / 2));
    GModule b1 = random_mixed_module(rng, group, r1);
    GModule b3 = random_mixed_module(rng, group, std::max<std::size_t>(1, max_rank - b1.rank()));
    GModule b2 = direct_sum(b1, b3);
    IntMatrix i(b2.rank(), b1.rank()), j(b3.rank(), b2.rank());
    for (std::size_t k = 0; k < b1.rank(); ++k) i(k, k) = 1;
    for (std::size_t k = 0; k < b3.rank(); ++k) j(k, b1.rank() + k) = 1;
    return ShortExactSequence(b1, b2, b3, i, j);
  }
  const long kind = uniform(rng, 0, 3);
  if (kind == 0) {
    // Z[G/H] modulo the line through the orbit sum.
    std::vector<SubgroupOfG> small;
    for (const auto& h : all_subgroups(group))
      if (group.order() / h.order() <= max_rank) small.push_back(h);
    GModule b2 = permutation_module(group, small[pick(rng, small.size())]);
    IntMatrix ones(b2.rank(), 1);
    for (std::size_t r = 0; r < b2.rank(); ++r) ones(r, 0) = 1;
    SubmoduleData sd = submodule(b2, ones);
    return ShortExactSequence(sd.sub, b2, sd.quotient, sd.inclusion, IntMatrix::identity(b2.rank()));
  }
  GModule b2 = kind == 1 ? random_lattice_module(rng, group, max_rank) : random_mixed_module(rng, group, max_rank);
  const std::size_t count = pick(rng, 3);
  IntMatrix v = random_vectors(rng, b2.rank(), count, 3);
  SubmoduleData sd = submodule(b2, v);
  return ShortExactSequence(sd.sub, b2, sd.quotient, sd.inclusion, IntMatrix::identity(b2.rank()));
}

SesMorphism random_ses_morphism(Rng& rng, const FiniteGroup& group, std::size_t max_rank) {
  GModule b2 = random_mixed_module(rng, group, max_rank);
  const std::size_t n = b2.rank();
  IntMatrix v = random_vectors(rng, n, 1 + pick(rng, 2), 3);
  IntMatrix w = hstack(v, random_vectors(rng, n, pick(rng, 2), 3));
  SubmoduleData small = submodule(b2, v), large = submodule(b2, w);
  ShortExactSequence source(small.sub, b2, small.quotient, small.inclusion, IntMatrix::identity(n));
  ShortExactSequence target(large.sub, b2, large.quotient, large.inclusion, IntMatrix::identity(n));

  IntMatrix norm(n, n);
  for (const auto& a : b2.actions()) norm = norm + a;
  IntMatrix f2 = Int(uniform(rng, -2, 2)) * IntMatrix::identity(n) + Int(uniform(rng, -1, 1)) * norm;
  // f2 preserves the stable lattice of `small`, which sits inside `large`.
  const IntegerSolver big(large.inclusion);
  const IntMatrix image = f2 * small.inclusion;
  IntMatrix f1(large.inclusion.cols(), small.inclusion.cols());
  for (std::size_t c = 0; c < image.cols(); ++c) {
    auto x = big.solve(image.column(c));
    if (!x) throw InvariantViolation("random ladder: f2 does not preserve the sub-object");
    for (std::size_t r = 0; r < x->size(); ++r) f1(r, c) = (*x)[r];
  }
  return SesMorphism{source, target, f1, f2, f2};
}

RadicalData random_radical(Rng& rng, const FiniteGroup& group, std::size_t max_rank) {
  const long shape = uniform(rng, 0, 5);
  if (shape == 0) {
    GModule m = random_finite_module(rng, group);
    return make_radical(m, IntMatrix(m.rank(), 0));
  }
  GModule lat = random_lattice_module(rng, group, max_rank);
  const std::size_t n = lat.rank();
  IntMatrix gens = IntMatrix::identity(n);
  const long sub = uniform(rng, 0, 2);
  if (sub == 1) {
    gens = Int(uniform(rng, 2, 3)) * IntMatrix::identity(n);
  } else if (sub == 2) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      SubmoduleData sd = submodule(lat, random_vectors(rng, n, 1 + pick(rng, 2), 3));
      if (sd.quotient.carrier().is_finite()) {
        gens = sd.inclusion;
        break;
      }
    }
  }
  if (shape >= 4) {
    GModule t = random_finite_module(rng, group, 8);
    GModule m = direct_sum(lat, t);
    return make_radical(m, vstack(gens, IntMatrix(t.rank(), gens.cols())));
  }
  return make_radical(lat, gens);
}

LocalizationProblem random_radical_problem(Rng& rng, const RadicalData& rad, bool condition) {
  ProblemOptions opts;
  opts.max_places = 3;
  LocalizationProblem p = random_problem(rng, rad.M, opts);
  std::vector<SubgroupOfG> good, bad;
  for (const auto& h : all_subgroups(rad.M.group())) (pr_condition(rad, h) ? good : bad).push_back(h);
  const auto& pool = condition ? good : (bad.empty() ? good : bad);
  p.places.push_back(PlaceSpec{"w0", PlaceKind::finite, pool[pick(rng, pool.size())]});
  return p;
}

}  // namespace glocsur::randomized
