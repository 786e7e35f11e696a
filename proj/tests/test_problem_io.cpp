#include "doctest.h"

#include "glocsur/problem_io.hpp"
#include "glocsur/random_instances.hpp"

#include <string>

using namespace glocsur;
using io::Json;
namespace rnd = glocsur::randomized;

namespace {

const char* kNormOne = R"({
  "group": {"cayley": [[0, 1], [1, 0]]},
  "module": {"ambient_rank": 1, "relations": [], "action": {"0": [[1]], "1": [["-1"]]}},
  "places": [
    {"id": "v_split", "kind": "finite", "decomp": [0]},
    {"id": "v_inert", "kind": "finite", "decomp": [0, 1]},
    {"id": "v_real", "kind": "real", "decomp": [0, 1]}
  ],
  "S": {"explicit": ["v_inert", "v_real"], "symbolic_tail": "all_cyclic"},
  "radical": {"generators": [[1]]}
})";

std::string error_of(const std::string& text) {
  try {
    io::read_problem(Json::parse(text));
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::string with(const std::string& from, const std::string& to) {
  std::string s = kNormOne;
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("problem files: the norm-one fixture") {
  const io::ProblemFile f = io::read_problem(Json::parse(kNormOne));
  CHECK(f.problem.places.size() == 3);
  CHECK(f.problem.tail_side == TailSide::S);
  REQUIRE(f.radical);
  const Verdict v = is_surjective(f.problem);
  CHECK_FALSE(v.surjective);
  CHECK(v.obstruction.describe() == "Z/2");
  const io::CheckReport r = io::make_check_report(f, v);
  CHECK(r.obstruction_factors == std::vector<Int>{2});
  REQUIRE(r.radical.size() == 1);
  CHECK(r.radical[0].place == "v_split");
  CHECK_FALSE(r.radical[0].condition);
  CHECK(io::to_text(r).find("NOT surjective") != std::string::npos);
}

TEST_CASE("problem files: errors name the failing path") {
  CHECK(error_of(with("\"decomp\": [0, 1]}", "\"decomp\": [1]}")).find("places[1].decomp") == 0);
  CHECK(error_of(with("\"ambient_rank\": 1", "\"ambient_rank\": \"x\"")).find("module.ambient_rank") == 0);
  CHECK(error_of(with("\"1\": [[\"-1\"]]", "\"1\": [[2]]")).find("module.action") == 0);
  CHECK(error_of(with(", \"1\": [[\"-1\"]]", "")).find("no matrix for element 1") != std::string::npos);
  CHECK(error_of(with("\"kind\": \"real\"", "\"kind\": \"imaginary\"")).find("places[2].kind") == 0);
  CHECK(error_of(with("\"v_inert\", \"v_real\"]", "\"v_nowhere\"]")).find("problem:") == 0);
  CHECK(error_of(with("[[0, 1], [1, 0]]", "[[0, 1], [1, 1]]")).find("group.cayley") == 0);
  CHECK(error_of(with("\"generators\": [[1]]", "\"generators\": [[0]]")).find("radical: quotient") == 0);
  CHECK(error_of(with("\"explicit\"", "\"explicitly\"")) == "S: unknown key 'explicitly'");
  CHECK(error_of("[1, 2]").find("$") == 0);
  CHECK(error_of(with("\"places\"", "\"place\"")) == "$: unknown key 'place'");
  CHECK(error_of(R"({"group": {"name": "C2"}, "module": {"ambient_rank": 0}, "S": {}})") == "$: missing key 'places'");
  CHECK(error_of(with("\"symbolic_tail\": \"all_cyclic\"", "\"symbolic_tail\": \"some\"")).find("S.symbolic_tail") == 0);
  const std::string cap = [] {
    try {
      io::ReadOptions o;
      o.max_group_order = 1;
      io::read_problem(Json::parse(kNormOne), o);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  }();
  CHECK(cap.find("max-group-order") != std::string::npos);
}

TEST_CASE("problem files: integers") {
  CHECK(io::int_from_json(Json("123456789012345678901234567890"), "x") == Int("123456789012345678901234567890"));
  CHECK(io::int_from_json(Json(-7), "x") == -7);
  CHECK(io::int_to_json(Int("123456789012345678901234567890")).is_string());
  CHECK(io::int_to_json(Int(5)).is_number_integer());
  CHECK_THROWS_AS(io::int_from_json(Json(1.5), "x"), InputError);
  CHECK_THROWS_AS(io::int_from_json(Json("1e3"), "x"), InputError);
}

TEST_CASE("problem files: group forms and generator actions") {
  const Json perms = Json::parse(R"({"perm_generators": [[1, 2, 0], [1, 0, 2]]})");
  const FiniteGroup s3 = io::read_group(perms, {});
  CHECK(s3.order() == 6);
  CHECK(io::read_group(Json::parse(R"({"name": "D4"})"), {}).order() == 8);
  CHECK_THROWS_AS(io::read_group(Json::parse(R"({"name": "D4", "cayley": [[0]]})"), {}), InputError);

  const Json gen = Json::parse(R"({"ambient_rank": 1, "generator_action": {"1": [[-1]]}})");
  const GModule m = io::read_module(gen, FiniteGroup::cyclic(4));
  CHECK(m.action(2) == IntMatrix{{1}});
  CHECK(m.action(3) == IntMatrix{{-1}});
  const GModule t = io::read_module(Json::parse(R"({"ambient_rank": 2, "relations": [[2, 0]]})"), s3);
  CHECK(t.carrier().describe() == "Z + Z/2");
  CHECK(t.action(3) == IntMatrix::identity(2));
}

TEST_CASE("property: problem files and check reports round-trip") {
  auto rng = rnd::instance_rng(77, 0);
  for (int k = 0; k < 40; ++k) {
    const auto& g = rnd::random_group(rng).group;
    const LocalizationProblem p = rnd::random_problem(rng, rnd::random_module(rng, g));
    const Json emitted = io::write_problem(p);
    const io::ProblemFile back = io::read_problem(Json::parse(emitted.dump()));
    CHECK(io::write_problem(back.problem).dump() == emitted.dump());
    const Verdict v1 = is_surjective(p), v2 = is_surjective(back.problem);
    CHECK(v1.surjective == v2.surjective);
    io::CheckReport r = io::make_check_report(back, v2);
    r.wall_time = 0.25;
    const Json j = io::to_json(r);
    CHECK(io::check_report_from_json(Json::parse(j.dump())) == r);
    CHECK(io::to_json(io::check_report_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("property: sequence files and six-term reports round-trip") {
  auto rng = rnd::instance_rng(78, 0);
  for (int k = 0; k < 30; ++k) {
    const auto& g = rnd::random_group(rng).group;
    const ShortExactSequence seq = rnd::random_ses(rng, g);
    const Json emitted = io::write_ses(seq);
    const io::SesFile back = io::read_ses(Json::parse(emitted.dump()));
    CHECK(io::write_ses(back.seq).dump() == emitted.dump());
    const SixTermSequence st = build_six_term(back.seq);
    const io::SixTermReport r = io::make_sixterm_report(st, check_exactness(st));
    CHECK(r.exact.value());
    const Json j = io::to_json(r);
    CHECK(io::sixterm_report_from_json(Json::parse(j.dump())) == r);
    const io::SixTermReport bare = io::make_sixterm_report(st, std::nullopt);
    CHECK(io::sixterm_report_from_json(io::to_json(bare)) == bare);
  }
}
