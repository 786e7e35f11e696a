#pragma once

#include "glocsur/gmodule.hpp"
#include "glocsur/localization.hpp"
#include "glocsur/presets.hpp"
#include "glocsur/sixterm.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace glocsur::randomized {

using Rng = std::mt19937_64;

/// Independent stream for instance `index` of a run seeded with `seed`.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

long uniform(Rng& rng, long lo, long hi);
std::size_t pick(Rng& rng, std::size_t count);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};
/// C1..C8, C2xC2, C2xC4, C2xC2xC2, S3, D4, Q8.
const std::vector<NamedGroup>& group_catalog();
const NamedGroup& random_group(Rng& rng, std::size_t max_order = 8);

std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, std::size_t n, int steps = 6);

/// Torsion-free module of rank between 1 and max_rank built from permutation
/// lattices, sign twists and augmentation kernels, in a scrambled basis.
GModule random_lattice_module(Rng& rng, const FiniteGroup& group, std::size_t max_rank = 4);
/// Finite module with 1 < |M| <= max_order when the draw allows it.
GModule random_finite_module(Rng& rng, const FiniteGroup& group, std::size_t max_order = 16);
/// Lattice module modulo the stable span of a few random vectors; may have
/// both torsion and free parts.
GModule random_mixed_module(Rng& rng, const FiniteGroup& group, std::size_t max_rank = 4);
/// One of the three kinds above.
GModule random_module(Rng& rng, const FiniteGroup& group, std::size_t max_rank = 4);

/// Kernel of the augmentation Z[G/H] -> Z.
GModule augmentation_kernel(const FiniteGroup& group, const SubgroupOfG& h);

struct ProblemOptions {
  std::size_t max_places = 4;
  bool allow_tail = true;
  bool allow_archimedean = true;
};

/// Random places with random kinds and decomposition groups, a random split
/// into S and its complement, and possibly an all-cyclic tail on either side.
LocalizationProblem random_problem(Rng& rng, const GModule& m, const ProblemOptions& options = {});

/// B1 = stable span of random vectors in a random B2, B3 = B2 / B1; a
/// permutation lattice over its orbit-sum line; or a split sequence.
ShortExactSequence random_ses(Rng& rng, const FiniteGroup& group, std::size_t max_rank = 4);

/// A commuting ladder of short exact sequences with vertical maps f1, f2, f3.
struct SesMorphism {
  ShortExactSequence source;
  ShortExactSequence target;
  IntMatrix f1, f2, f3;
};
/// Same B2 on both rows, target sub-object enlarged, f2 = k + c N with N the
/// norm element.
SesMorphism random_ses_morphism(Rng& rng, const FiniteGroup& group, std::size_t max_rank = 4);

/// M with a stable M_C of finite index. M is a lattice, or a lattice plus a
/// finite summand outside M_C, or finite with M_C = 0. M_C is kM, the stable
/// span of random vectors, or all of the lattice part.
RadicalData random_radical(Rng& rng, const FiniteGroup& group, std::size_t max_rank = 3);

/// random_problem over rad.M plus a finite place "w0" outside S. Its
/// decomposition group satisfies the Aut-image condition when `condition` is
/// set and one exists, and violates it otherwise when possible.
LocalizationProblem random_radical_problem(Rng& rng, const RadicalData& rad, bool condition);

}  // namespace glocsur::randomized
