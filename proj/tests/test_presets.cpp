#include "doctest.h"

#include "glocsur/presets.hpp"
#include "glocsur/random_instances.hpp"

using namespace glocsur;
namespace rnd = glocsur::randomized;

namespace {

/// Split, inert and real places; everything except `outside` is in S, and so
/// are the unlisted places.
LocalizationProblem norm_one(const GModule& m, const std::string& outside) {
  const auto& g = m.group();
  LocalizationProblem p{m,
                        {{"split", PlaceKind::finite, SubgroupOfG::trivial(g)},
                         {"inert", PlaceKind::finite, SubgroupOfG::whole(g)},
                         {"real", PlaceKind::real, SubgroupOfG::whole(g)}},
                        {},
                        TailSide::S,
                        cyclic_subgroup_classes(g)};
  for (const auto& v : p.places)
    if (v.id != outside) p.S.push_back(v.id);
  return p;
}

GModule rotation_c3() {
  const IntMatrix r{{0, -1}, {1, -1}};
  return GModule::from_generator_action(FiniteGroup::cyclic(3), FgAbGroup::free(2), {1}, {r});
}

/// C2 x C2 on Z, the first factor by -1 and the second trivially.
GModule first_factor_sign() {
  const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  std::vector<IntMatrix> acts;
  for (std::size_t e = 0; e < 4; ++e) acts.push_back(IntMatrix{{e / 2 ? -1 : 1}});
  return GModule(g, FgAbGroup::free(1), acts);
}

LocalizationProblem one_place(const GModule& m, const SubgroupOfG& decomp) {
  return LocalizationProblem{m, {{"v0", PlaceKind::finite, decomp}}, {}, TailSide::S, cyclic_subgroup_classes(m.group())};
}

}  // namespace

TEST_CASE("named_group") {
  CHECK(named_group("C1").order() == 1);
  CHECK(named_group("C6").order() == 6);
  CHECK(named_group("D4").order() == 8);
  CHECK_FALSE(named_group("D4").is_abelian());
  CHECK(named_group("S3").order() == 6);
  CHECK(named_group("Q8").order() == 8);
  CHECK(named_group("C2xC2").order() == 4);
  CHECK(named_group("C2xC2xC2").order() == 8);
  CHECK(named_group("C2xS3").order() == 12);
  CHECK_THROWS_AS(named_group("A5"), InputError);
  CHECK_THROWS_AS(named_group("C0"), InputError);
  CHECK_THROWS_AS(named_group("Cx"), InputError);
  CHECK_THROWS_AS(named_group("D2"), InputError);
}

TEST_CASE("presets: documented modules") {
  SUBCASE("zero gives surjective verdicts everywhere") {
    const GModule m = make_preset("zero", {{"group", "S3"}});
    CHECK(m.rank() == 0);
    auto rng = rnd::instance_rng(5, 0);
    for (int k = 0; k < 20; ++k) {
      const Verdict v = is_surjective(rnd::random_problem(rng, m));
      CHECK(v.surjective);
      CHECK(v.obstruction.is_trivial());
    }
  }
  SUBCASE("norm_one_torus over C2 is Z with negation") {
    const GModule m = make_preset("norm_one_torus", {{"n", "2"}});
    CHECK(m.rank() == 1);
    CHECK(m.action(1) == IntMatrix{{-1}});
    CHECK(coinvariants(m, SubgroupOfG::whole(m.group())).quotient.describe() == "Z/2");
  }
  SUBCASE("norm_one_torus over C_n has coinvariants I/I^2 = Z/n") {
    for (std::size_t n = 2; n <= 7; ++n) {
      const GModule m = preset_norm_one_torus(n);
      CHECK(m.rank() == n - 1);
      CHECK(coinvariants(m, SubgroupOfG::whole(m.group())).quotient.describe() == "Z/" + std::to_string(n));
      // The sum of the action matrices kills the augmentation ideal.
      IntMatrix norm(n - 1, n - 1);
      for (const auto& a : m.actions()) norm = norm + a;
      CHECK(norm.is_zero());
    }
  }
  SUBCASE("Z_mod_n_trivial(3) has coinvariants Z/3 for every group") {
    for (const auto& [name, g] : rnd::group_catalog()) {
      const GModule m = preset_Z_mod_n_trivial(g, 3);
      CHECK(coinvariants(m, SubgroupOfG::whole(g)).quotient.describe() == "Z/3");
    }
  }
  SUBCASE("induced_lattice has coinvariants Z and trivial Tate group") {
    for (const auto& [name, g] : rnd::group_catalog()) {
      const GModule m = preset_induced_lattice(g);
      CHECK(m.rank() == g.order());
      CHECK(coinvariants(m, SubgroupOfG::whole(g)).quotient.describe() == "Z");
      CHECK(tate_h_minus_1(m, SubgroupOfG::whole(g)).group.is_trivial());
    }
  }
  SUBCASE("direct_sum and twist") {
    const GModule s = make_preset("direct_sum", {{"left", "trivial_Z"}, {"right", "norm_one_torus"}, {"group", "C3"}});
    CHECK(s.rank() == 3);
    const GModule t = make_preset("twist_by_subgroup_action", {{"base", "trivial_Z"}, {"group", "C2"}, {"subgroup", "0"}});
    CHECK(t.action(1) == IntMatrix{{-1}});
    const GModule t4 = make_preset("twist_by_subgroup_action", {{"base", "trivial_Z"}, {"group", "C4"}, {"subgroup", "0,2"}});
    CHECK(t4.action(1) == IntMatrix{{-1}});
    CHECK(t4.action(2) == IntMatrix{{1}});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(make_preset("spin", {}), InputError);
    CHECK_THROWS_AS(make_preset("zero", {{"n", "2"}}), InputError);
    CHECK_THROWS_AS(make_preset("norm_one_torus", {{"n", "1"}}), InputError);
    CHECK_THROWS_AS(make_preset("Z_mod_n_trivial", {{"n", "0"}}), InputError);
    CHECK_THROWS_AS(make_preset("twist_by_subgroup_action", {{"group", "C4"}, {"subgroup", "0,1"}}), InputError);
    CHECK_THROWS_AS(make_preset("direct_sum", {{"left", "direct_sum"}}), InputError);
  }
  SUBCASE("every catalog entry builds with its defaults") {
    for (const auto& info : preset_catalog()) CHECK_NOTHROW(make_preset(info.name, {}));
  }
}

TEST_CASE("make_radical validation") {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const GModule swap = permutation_module(c2, SubgroupOfG::trivial(c2));
  CHECK_THROWS_AS(make_radical(swap, IntMatrix{{1}, {0}}), InputError);  // not stable
  CHECK_THROWS_AS(make_radical(swap, IntMatrix{{1}, {1}}), InputError);  // infinite quotient
  const RadicalData r = make_radical(swap, IntMatrix{{1, 1}, {1, -1}});
  CHECK(r.Mbar().carrier().describe() == "Z/2");
  CHECK(default_radical(swap).Mbar().carrier().is_trivial());
  CHECK(default_radical(preset_Z_mod_n_trivial(c2, 4)).M_C().carrier().is_trivial());
}

TEST_CASE("pr_condition examples") {
  SUBCASE("trivial action on M_C") {
    const RadicalData r = default_radical(preset_trivial_Z(FiniteGroup::symmetric3()));
    for (const auto& h : all_subgroups(r.M.group())) CHECK(pr_condition(r, h));
  }
  SUBCASE("C2 by -1") {
    const RadicalData r = default_radical(preset_norm_one_torus(2));
    CHECK(pr_condition(r, SubgroupOfG::whole(r.M.group())));
    CHECK_FALSE(pr_condition(r, SubgroupOfG::trivial(r.M.group())));
  }
  SUBCASE("C2 x C2 with only the first factor acting") {
    const RadicalData r = default_radical(first_factor_sign());
    const auto& g = r.M.group();
    CHECK(pr_condition(r, SubgroupOfG(g, {0, 2})));
    CHECK_FALSE(pr_condition(r, SubgroupOfG(g, {0, 1})));
    CHECK(pr_condition(r, SubgroupOfG(g, {0, 3})));
    CHECK(aut_image(r, SubgroupOfG(g, {0, 2}).elements()).size() == 2);
  }
  SUBCASE("subgroup of another group") {
    const RadicalData r = default_radical(preset_norm_one_torus(2));
    CHECK_THROWS_AS(pr_condition(r, SubgroupOfG::whole(FiniteGroup::cyclic(3))), InputError);
  }
  SUBCASE("residues are taken on M_C") {
    // Z/2 with the sign action: -1 = 1, so the image is trivial.
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const GModule m(c2, FgAbGroup(1, IntMatrix{{2}}), {IntMatrix{{1}}, IntMatrix{{-1}}});
    const RadicalData r = make_radical(m, IntMatrix{{1}});
    CHECK(pr_condition(r, SubgroupOfG::trivial(c2)));
  }
}

TEST_CASE("aut_image_predict examples") {
  const GModule m = preset_norm_one_torus(2);
  const RadicalData torus = default_radical(m);
  SUBCASE("torus case, inert v0") {
    const auto p = norm_one(m, "inert");
    CHECK(aut_image_predict(torus, p, "inert"));
    CHECK(is_surjective(p).surjective);
  }
  SUBCASE("split v0 with nontrivial action: no prediction") {
    const auto p = norm_one(m, "split");
    CHECK_FALSE(aut_image_predict(torus, p, "split"));
    CHECK_FALSE(is_surjective(p).surjective);
  }
  SUBCASE("M finite, M_C = 0: any finite v0") {
    auto rng = rnd::instance_rng(11, 0);
    for (int k = 0; k < 10; ++k) {
      const auto& g = rnd::random_group(rng).group;
      const RadicalData r = default_radical(rnd::random_finite_module(rng, g));
      for (const auto& h : all_subgroups(g)) {
        LocalizationProblem p = one_place(r.M, h);
        p.S.clear();
        CHECK(aut_image_predict(r, p, "v0"));
      }
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(aut_image_predict(torus, norm_one(m, "inert"), "split"), InputError);  // in S
    CHECK_THROWS_AS(aut_image_predict(torus, norm_one(m, "real"), "real"), InputError);    // not finite
    CHECK_THROWS_AS(aut_image_predict(torus, norm_one(m, "inert"), "nowhere"), InputError);
    const RadicalData other = default_radical(preset_trivial_Z(FiniteGroup::cyclic(2)));
    CHECK_THROWS_AS(aut_image_predict(other, norm_one(m, "inert"), "inert"), InputError);
  }
}

TEST_CASE("split radical examples") {
  const GModule m = preset_trivial_Z(FiniteGroup::cyclic(4));
  const RadicalData r = default_radical(m);
  for (const auto& h : all_subgroups(m.group())) {
    LocalizationProblem p = one_place(m, h);
    const Prediction pr = split_radical_check(r, p, "v0");
    CHECK(pr.hypothesis);
    CHECK(pr.surjective);
  }
}

TEST_CASE("prime_degree_check examples") {
  SUBCASE("p = 2, norm-one, inert") {
    const GModule m = preset_norm_one_torus(2);
    const auto p = norm_one(m, "inert");
    CHECK(prime_degree_check(default_radical(m), p, "inert", 2));
    CHECK(is_surjective(p).surjective);
  }
  SUBCASE("p = 3, rotation of order 3") {
    const GModule m = rotation_c3();
    const RadicalData r = default_radical(m);
    CHECK(aut_image(r, SubgroupOfG::whole(m.group()).elements()).size() == 3);
    LocalizationProblem p = one_place(m, SubgroupOfG::whole(m.group()));
    p.S.clear();
    CHECK(prime_degree_check(r, p, "v0", 3));
    CHECK(is_surjective(p).surjective);
  }
  SUBCASE("split v0 fails the hypothesis") {
    const GModule m = preset_norm_one_torus(2);
    CHECK_FALSE(prime_degree_check(default_radical(m), norm_one(m, "split"), "split", 2));
  }
  SUBCASE("wrong prime fails the hypothesis") {
    const GModule m = preset_norm_one_torus(2);
    CHECK_FALSE(prime_degree_check(default_radical(m), norm_one(m, "inert"), "inert", 3));
  }
  SUBCASE("p not prime") {
    const GModule m = preset_norm_one_torus(2);
    CHECK_THROWS_AS(prime_degree_check(default_radical(m), norm_one(m, "inert"), "inert", 4), InputError);
    CHECK_THROWS_AS(prime_degree_check(default_radical(m), norm_one(m, "inert"), "inert", 1), InputError);
  }
}

TEST_CASE("ladder of the radical sequence: example") {
  const GModule m = rotation_c3();
  const RadicalData r = make_radical(m, Int(3) * IntMatrix::identity(2));
  CHECK(r.Mbar().carrier().describe() == "Z/3 + Z/3");
  const RadicalLadder l = radical_ladder(r, SubgroupOfG::whole(m.group()));
  for (const auto& sq : l.squares) CHECK_MESSAGE(sq.commutes, sq.name);
  CHECK(l.omega_bar_surjective);
  const RadicalLadder split = radical_ladder(r, SubgroupOfG::trivial(m.group()));
  for (const auto& sq : split.squares) CHECK_MESSAGE(sq.commutes, sq.name);
  CHECK(split.omega_bar_surjective);
}

TEST_CASE("property: the implication chain on random radical data") {
  auto rng = rnd::instance_rng(2024, 7);
  int hypothesis = 0, prime = 0, split = 0, no_prediction_fail = 0;
  for (int k = 0; k < 160; ++k) {
    const auto& g = rnd::random_group(rng).group;
    const RadicalData r = rnd::random_radical(rng, g);
    const LocalizationProblem p = rnd::random_radical_problem(rng, r, k % 4 != 0);
    const Prediction t = aut_image_check(r, p, "w0");
    CHECK(t.consistent());
    if (t.hypothesis) ++hypothesis;
    if (!t.hypothesis && !t.surjective) ++no_prediction_fail;
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul}) {
      const Prediction c = prime_degree_prediction(r, p, "w0", q);
      if (c.hypothesis) {
        ++prime;
        CHECK(t.hypothesis);
        CHECK(c.surjective);
      }
    }
    const Prediction s = split_radical_check(r, p, "w0");
    if (s.hypothesis) {
      ++split;
      CHECK(t.hypothesis);
      CHECK(s.surjective);
    }
    const RadicalLadder l = radical_ladder(r, find_place(p, "w0").decomp);
    for (const auto& sq : l.squares) CHECK_MESSAGE(sq.commutes, sq.name);
    CHECK(l.omega_bar_surjective);
    if (t.hypothesis) CHECK(l.omega_surjective);
  }
  CHECK(hypothesis >= 100);
  CHECK(prime > 0);
  CHECK(split > 0);
  CHECK(no_prediction_fail > 0);  // the condition is not vacuous
  MESSAGE("hypothesis " << hypothesis << ", prime " << prime << ", split " << split << ", unpredicted failures "
                        << no_prediction_fail);
}
