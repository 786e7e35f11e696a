#include "glocsur/selftest.hpp"

#include "glocsur/presets.hpp"
#include "glocsur/random_instances.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace glocsur {

namespace rnd = randomized;

namespace {

using Check = std::function<std::optional<std::string>(rnd::Rng&)>;

std::optional<std::string> snf_instance(rnd::Rng& rng) {
  const auto m = static_cast<std::size_t>(rnd::uniform(rng, 1, 6));
  const auto n = static_cast<std::size_t>(rnd::uniform(rng, 1, 6));
  IntMatrix a(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = rnd::uniform(rng, -20, 20);
  if (m > 1 && rnd::uniform(rng, 0, 4) == 0)
    for (std::size_t c = 0; c < n; ++c) a(m - 1, c) = 3 * a(0, c);
  const SmithForm s = smith_normal_form(a);
  if (s.U * a * s.V != s.D) return "U A V != D";
  if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) return "U or V not unimodular";
  if (s.U * s.U_inv != IntMatrix::identity(m)) return "U_inv is not the inverse of U";
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && s.D(r, c) != 0) return "D not diagonal";
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    if (s.D(k, k) < 0) return "negative diagonal entry";
    if ((k < s.rank) != (s.D(k, k) != 0)) return "rank does not match the diagonal";
    if (k + 1 < std::min(m, n) && s.D(k, k) != 0 && !divides(s.D(k, k), s.D(k + 1, k + 1)))
      return "divisibility chain broken at " + std::to_string(k);
  }
  return std::nullopt;
}

std::optional<std::string> criterion_instance(rnd::Rng& rng) {
  const auto& g = rnd::random_group(rng).group;
  const LocalizationProblem p = rnd::random_problem(rng, rnd::random_module(rng, g));
  const Verdict v = is_surjective(p, Execution::serial);
  if (v.surjective != v.obstruction.is_trivial())
    return "verdict " + std::string(v.surjective ? "surjective" : "not surjective") + " with obstruction " +
           v.obstruction.describe();
  if (v.surjective != subgroup_contains(v.im_sigma_comp, v.im_sigma_S)) return "verdict disagrees with containment";
  return std::nullopt;
}

std::optional<std::string> semisimple_instance(rnd::Rng& rng) {
  const auto& g = rnd::random_group(rng).group;
  const GModule m = rnd::random_finite_module(rng, g, 16);
  LocalizationProblem p = rnd::random_problem(rng, m);
  const auto subs = all_subgroups(g);
  p.places.push_back(PlaceSpec{"w0", PlaceKind::finite, subs[rnd::pick(rng, subs.size())]});
  if (!semisimple_check(p)) return "instance does not meet the hypothesis";
  const Verdict v = is_surjective(p, Execution::serial);
  if (!v.surjective) return "finite module with a finite place outside S is not surjective: " + v.obstruction.describe();
  return std::nullopt;
}

std::optional<std::string> conjugacy_instance(rnd::Rng& rng) {
  const auto& g = rnd::random_group(rng).group;
  const GModule m = rnd::random_module(rng, g);
  const auto global = coinvariants(m, SubgroupOfG::whole(g));
  for (const auto& h : all_subgroups(g)) {
    const Subgroup base = im_lambda(m, global, PlaceKind::finite, h);
    const std::optional<Subgroup> real =
        h.order() == 2 ? std::optional<Subgroup>(im_lambda(m, global, PlaceKind::real, h)) : std::nullopt;
    for (std::size_t x = 0; x < g.order(); ++x) {
      const SubgroupOfG c = h.conjugate(x);
      if (!(im_lambda(m, global, PlaceKind::finite, c) == base)) return "finite image changes under conjugation";
      if (real && !(im_lambda(m, global, PlaceKind::real, c) == *real)) return "real image changes under conjugation";
    }
  }
  return std::nullopt;
}

std::optional<std::string> exactness_instance(rnd::Rng& rng) {
  const auto& g = rnd::random_group(rng).group;
  const ShortExactSequence seq = rnd::random_ses(rng, g);
  const SixTermSequence st = build_six_term(seq, Execution::serial);
  const ExactnessReport rep = check_exactness(st);
  for (const auto& n : rep.nodes)
    if (!n.exact || !n.composite_zero) return "node " + n.name + " fails: " + n.detail + " " + n.witness;
  if (!st.delta.numerators.is_zero()) {
    SixTermSequence bad = st;
    bad.delta.numerators = IntMatrix(st.delta.rows(), st.delta.cols());
    bad.delta.denominator = 1;
    const ExactnessReport r2 = check_exactness(bad);
    bool witnessed = false;
    for (const auto& n : r2.nodes) witnessed = witnessed || !n.witness.empty();
    if (r2.exact || !witnessed) return "zeroed connecting map was not caught";
  }
  return std::nullopt;
}

std::optional<std::string> delta_instance(rnd::Rng& rng) {
  const auto& g = rnd::random_group(rng).group;
  const ShortExactSequence seq = rnd::random_ses(rng, g);
  const SixTermSequence st = build_six_term(seq, Execution::serial);
  const IntMatrix& gens = st.coinv[2].quotient.torsion_generators();
  for (std::size_t c = 0; c < gens.cols(); ++c) {
    std::vector<Rational> col;
    for (std::size_t r = 0; r < st.delta.rows(); ++r) col.push_back(st.delta.entry(r, c));
    for (int k = 0; k < 5; ++k)
      if (delta_connect(seq, gens.column(c), &rng) != col)
        return "randomized derivation " + std::to_string(k) + " differs on generator " + std::to_string(c);
  }
  return std::nullopt;
}

std::optional<std::string> tor_h1_instance(rnd::Rng& rng) {
  const auto& g = rnd::random_group(rng, 6).group;
  const GModule m = rnd::random_module(rng, g, 3);
  const auto all = SubgroupOfG::whole(g);
  const auto cd = coinvariants(m, all);
  if (!(rationalization_kernel(cd.quotient) == cd.torsion_part)) return "torsion part differs from the rationalization kernel";
  if (!verify_h1_killed(m, all, Execution::serial)) return "|G| does not kill H_1";
  return std::nullopt;
}

std::optional<std::string> radical_instance(rnd::Rng& rng) {
  const auto& g = rnd::random_group(rng).group;
  const RadicalData rad = rnd::random_radical(rng, g);
  const LocalizationProblem p = rnd::random_radical_problem(rng, rad, true);
  const Prediction t = aut_image_check(rad, p, "w0");
  if (!t.hypothesis) return "instance does not meet the hypothesis";
  if (!t.surjective) return "Aut-image condition holds but the criterion is not surjective";
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul})
    if (prime_degree_prediction(rad, p, "w0", q).hypothesis && !t.hypothesis)
      return "prime-degree hypothesis without the Aut-image condition";
  const RadicalLadder l = radical_ladder(rad, find_place(p, "w0").decomp);
  for (const auto& sq : l.squares)
    if (!sq.commutes) return "ladder square '" + sq.name + "' does not commute";
  if (!l.omega_bar_surjective) return "omega-bar is not surjective";
  return std::nullopt;
}

struct Suite {
  SuiteInfo info;
  std::uint64_t tag;
  Check check;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {{"snf", 500, "Smith form certificate, unimodularity, divisibility chain"}, 1, snf_instance},
      {{"criterion_obstruction", 200, "surjective iff the obstruction is trivial"}, 2, criterion_instance},
      {{"semisimple", 200, "finite module and a finite place outside S gives surjective"}, 3, semisimple_instance},
      {{"conjugacy", 100, "local images do not depend on the conjugate chosen"}, 4, conjugacy_instance},
      {{"exactness", 100, "six-term exactness, with a zeroed connecting map as control"}, 5, exactness_instance},
      {{"delta_determinism", 50, "five randomized derivations of the connecting map agree"}, 6, delta_instance},
      {{"tor_h1", 100, "torsion equals rationalization kernel; |G| kills H_1"}, 7, tor_h1_instance},
      {{"radical", 100, "Aut-image condition implies surjective; ladder commutes"}, 8, radical_instance},
  };
  return all;
}

}  // namespace

bool SelftestReport::ok() const {
  for (const auto& s : suites)
    if (!s.ok()) return false;
  return true;
}

const std::vector<SuiteInfo>& selftest_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& s : suites()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

SelftestReport run_selftest(const SelftestOptions& opts) {
  for (const auto& name : opts.only) {
    bool known = false;
    for (const auto& s : suites()) known = known || s.info.name == name;
    if (!known) throw InputError("unknown selftest suite '" + name + "'");
  }
  SelftestReport report{opts.seed, {}};
  for (const auto& s : suites()) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), s.info.name) == opts.only.end()) continue;
    const std::size_t n = opts.count ? opts.count : s.info.default_count;
    std::vector<std::optional<std::string>> failures(n);
    for_each_index(n, opts.exec, [&](std::size_t k) {
      rnd::Rng rng = rnd::instance_rng(opts.seed ^ (s.tag << 56), k);
      try {
        failures[k] = s.check(rng);
      } catch (const std::exception& e) {
        failures[k] = std::string("exception: ") + e.what();
      }
    });
    SuiteResult r{s.info.name, n, 0, ""};
    for (std::size_t k = 0; k < n; ++k) {
      if (!failures[k]) {
        ++r.passed;
      } else if (r.first_failure.empty()) {
        r.first_failure = "instance " + std::to_string(k) + ": " + *failures[k];
      }
    }
    report.suites.push_back(std::move(r));
  }
  return report;
}

}  // namespace glocsur
