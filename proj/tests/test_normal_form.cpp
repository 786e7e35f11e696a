#include "doctest.h"
#include "oracles.hpp"
#include "test_support.hpp"

#include "glocsur/abelian_group.hpp"

using namespace glocsur;
using testing_support::random_matrix;
using testing_support::random_unimodular;
using testing_support::uniform;

namespace {

void check_smith(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  REQUIRE(s.U * a * s.V == s.D);
  REQUIRE(s.U * s.U_inv == IntMatrix::identity(a.rows()));
  REQUIRE(abs(determinant(s.U)) == 1);
  REQUIRE(abs(determinant(s.V)) == 1);
  for (std::size_t r = 0; r < s.D.rows(); ++r)
    for (std::size_t c = 0; c < s.D.cols(); ++c)
      if (r != c) REQUIRE(s.D(r, c) == 0);
  auto d = s.diagonal();
  for (std::size_t k = 0; k < d.size(); ++k) {
    REQUIRE(d[k] >= 0);
    if (k + 1 < d.size()) REQUIRE(divides(d[k], d[k + 1]));
  }
}

}  // namespace

TEST_CASE("smith normal form: worked examples") {
  SUBCASE("zero matrix") {
    SmithForm s = smith_normal_form(IntMatrix{{0}});
    CHECK(s.D == IntMatrix{{0}});
    CHECK(s.U == IntMatrix{{1}});
    CHECK(s.V == IntMatrix{{1}});
    CHECK(s.rank == 0);
  }
  SUBCASE("2x2 with diag(2, 4)") {
    IntMatrix a{{2, 4}, {6, 8}};
    // gcd of entries is 2 and |det| = 8, so the factors are 2 and 4.
    auto minors = oracle::invariant_factors_by_minors(a);
    REQUIRE(minors == std::vector<Int>{2, 4});
    SmithForm s = smith_normal_form(a);
    CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
    check_smith(a);
  }
  SUBCASE("identity") {
    SmithForm s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.D == IntMatrix::identity(3));
  }
  SUBCASE("empty shapes") {
    check_smith(IntMatrix(3, 0));
    check_smith(IntMatrix(0, 2));
  }
}

TEST_CASE("smith normal form: randomized certificate and minors oracle") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 6));
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
    IntMatrix a = random_matrix(rng, m, n, 20);
    if (trial % 5 == 0 && m > 1) a.add_row_multiple(m - 1, 0, 3);  // rank deficiency now and then
    check_smith(a);
    if (m <= 4 && n <= 4) {
      auto d = smith_normal_form(a).diagonal();
      CHECK(d == oracle::invariant_factors_by_minors(a));
    }
  }
}

TEST_CASE("hermite form and integer solver") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 6));
    IntMatrix a = random_matrix(rng, n, k, 9);
    ColumnHermiteForm f = column_hermite_form(a);
    IntMatrix aw = a * f.W;
    CHECK(aw.columns(0, f.rank) == f.H);
    CHECK(aw.columns(f.rank, k - f.rank).is_zero());
    CHECK(abs(determinant(f.W)) == 1);
    CHECK(f.rank == smith_normal_form(a).rank);

    IntegerSolver solver(a);
    IntVector x(k);
    for (auto& xi : x) xi = uniform(rng, -5, 5);
    IntVector b = a * x;
    auto sol = solver.solve(b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
    CHECK((a * solver.kernel()).is_zero());

    Lattice lat(a);
    IntVector v(n);
    for (auto& vi : v) vi = uniform(rng, -30, 30);
    IntVector shifted = v + a * x;
    CHECK(lat.reduce(v) == lat.reduce(shifted));
  }
  SUBCASE("inconsistent system") {
    IntegerSolver solver(IntMatrix{{2}});
    CHECK_FALSE(solver.solve(IntVector{Int(1)}).has_value());
    CHECK(solver.solve(IntVector{Int(6)}) == IntVector{Int(3)});
  }
}

TEST_CASE("canonicalize: worked examples") {
  CHECK(canonicalize(FgAbGroup(2, IntMatrix{{2}, {0}})) == std::pair<std::size_t, std::vector<Int>>{1, {2}});
  CHECK(canonicalize(FgAbGroup::free(1)) == std::pair<std::size_t, std::vector<Int>>{1, {}});
  FgAbGroup triv(1, IntMatrix{{1}});
  CHECK(canonicalize(triv) == std::pair<std::size_t, std::vector<Int>>{0, {}});
  CHECK(triv.is_trivial());
  CHECK(FgAbGroup(2, IntMatrix{{2}, {0}}).describe() == "Z + Z/2");
  CHECK(FgAbGroup::trivial().describe() == "0");
}

TEST_CASE("canonicalize is presentation invariant") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::size_t k = static_cast<std::size_t>(uniform(rng, 0, 5));
    IntMatrix rel = random_matrix(rng, n, k, 6);
    FgAbGroup g(n, rel);
    auto [w, winv] = random_unimodular(rng, n);
    auto [cv, cvinv] = random_unimodular(rng, k);
    FgAbGroup h(n, w * rel * cv);
    CHECK(canonicalize(g) == canonicalize(h));
  }
}

TEST_CASE("group order agrees with brute-force coset enumeration") {
  std::mt19937_64 rng(4242);
  int checked = 0;
  while (checked < 120) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    IntMatrix rel = random_matrix(rng, n, n + 1, 5);
    FgAbGroup g(n, rel);
    auto order = g.order();
    if (!order || *order > 64) continue;
    long N = order->get_si();  // the exponent divides |G|, so N Z^n lies in the relations
    std::vector<IntVector> gens;
    for (std::size_t c = 0; c < rel.cols(); ++c) gens.push_back(rel.column(c));
    CHECK(oracle::quotient_order_mod(n, N, gens) == N);
    ++checked;
  }
}

TEST_CASE("torsion subgroup and torsion-free quotient") {
  SUBCASE("Z + Z/2") {
    FgAbGroup g = FgAbGroup::from_invariants(1, {Int(2)});
    CHECK(torsion_subgroup(g).as_group().describe() == "Z/2");
    CHECK(tf_quotient(g).first.describe() == "Z");
  }
  SUBCASE("finite group") {
    FgAbGroup g(2, IntMatrix{{2, 0}, {0, 3}});
    CHECK(torsion_subgroup(g) == Subgroup::whole(g));
    CHECK(tf_quotient(g).first.is_trivial());
  }
  SUBCASE("relation 2e1 - 2e2") {
    FgAbGroup g(2, IntMatrix{{2}, {-2}});
    Subgroup t = torsion_subgroup(g);
    CHECK(t == Subgroup(g, IntMatrix{{1}, {-1}}));
    CHECK(t.as_group().describe() == "Z/2");
    CHECK(tf_quotient(g).first.describe() == "Z");
  }
  SUBCASE("quotient by torsion is torsion-free (random)") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
      FgAbGroup g(n, random_matrix(rng, n, static_cast<std::size_t>(uniform(rng, 0, 4)), 8));
      auto [q, proj] = quotient(g, torsion_subgroup(g));
      CHECK(q.invariant_factors().empty());
      CHECK(q.free_rank() == g.free_rank());
    }
  }
}

TEST_CASE("subgroup lattice operations") {
  SUBCASE("2Z and 4Z in Z") {
    FgAbGroup z = FgAbGroup::free(1);
    Subgroup h(z, IntMatrix{{2}}), k(z, IntMatrix{{4}});
    CHECK(subgroup_contains(h, k));
    CHECK_FALSE(subgroup_contains(k, h));
    CHECK(subgroup_intersect(h, k) == k);
    CHECK(subgroup_join(h, k) == h);
  }
  SUBCASE("idempotence") {
    FgAbGroup g(2, IntMatrix{{4}, {0}});
    Subgroup h(g, IntMatrix{{2, 0}, {1, 3}});
    CHECK(subgroup_contains(h, h));
    CHECK(subgroup_intersect(h, h) == h);
    CHECK(subgroup_join(h, h) == h);
  }
  SUBCASE("Z/2 + Z/2, <(1,0)> and <(1,1)>") {
    FgAbGroup g(2, IntMatrix{{2, 0}, {0, 2}});
    Subgroup h(g, IntMatrix{{1}, {0}}), k(g, IntMatrix{{1}, {1}});
    // Enumerating the four elements: <(1,0)> = {0,(1,0)}, <(1,1)> = {0,(1,1)}.
    auto hs = oracle::span_mod(2, 2, {{1, 0}});
    auto ks = oracle::span_mod(2, 2, {{1, 1}});
    std::set<oracle::Residue> meet;
    for (const auto& x : hs)
      if (ks.count(x)) meet.insert(x);
    REQUIRE(meet.size() == 1);
    REQUIRE(oracle::span_mod(2, 2, {{1, 0}, {1, 1}}).size() == 4);
    CHECK(subgroup_intersect(h, k).is_trivial());
    CHECK(subgroup_join(h, k) == Subgroup::whole(g));
  }
  SUBCASE("mutual containment iff equal canonical lattices (random)") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      FgAbGroup g(2, IntMatrix{{6, 0}, {0, 4}});
      Subgroup h(g, random_matrix(rng, 2, 2, 6)), k(g, random_matrix(rng, 2, 1, 6));
      bool both = subgroup_contains(h, k) && subgroup_contains(k, h);
      CHECK(both == (h == k));
    }
  }
  SUBCASE("mismatched parents are rejected") {
    Subgroup h(FgAbGroup::free(1), IntMatrix{{2}});
    Subgroup k(FgAbGroup::free(2), IntMatrix{{1}, {0}});
    CHECK_THROWS_AS(subgroup_contains(h, k), InputError);
    CHECK_THROWS_AS(subgroup_intersect(h, k), InputError);
  }
}

TEST_CASE("homomorphisms") {
  FgAbGroup z2(1, IntMatrix{{2}});
  FgAbGroup z4(1, IntMatrix{{4}});
  SUBCASE("ill-defined map is rejected") { CHECK_THROWS_AS(Homomorphism(z2, z4, IntMatrix{{1}}), InputError); }
  SUBCASE("Z/2 -> Z/4, 1 -> 2") {
    Homomorphism f(z2, z4, IntMatrix{{2}});
    CHECK(f.is_injective());
    CHECK_FALSE(f.is_surjective());
    CHECK(f.image().as_group().describe() == "Z/2");
  }
  SUBCASE("Z/4 -> Z/2 reduction") {
    Homomorphism f(z4, z2, IntMatrix{{1}});
    CHECK(f.is_surjective());
    CHECK(f.kernel() == Subgroup(z4, IntMatrix{{2}}));
  }
  SUBCASE("element orders") {
    FgAbGroup g = FgAbGroup::from_invariants(1, {Int(6)});
    CHECK(g.element_order(IntVector{Int(2), Int(0)}) == 3);
    CHECK(g.element_order(IntVector{Int(0), Int(1)}) == 0);
    Element a(g, IntVector{Int(5), Int(0)}), b(g, IntVector{Int(-1), Int(0)});
    CHECK(a == b);
    CHECK((a + a).order() == 3);
  }
}
