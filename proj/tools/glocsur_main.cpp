#include "glocsur/problem_io.hpp"
#include "glocsur/selftest.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace glocsur;
using io::Json;

namespace {

enum Exit { kYes = 0, kNo = 1, kInputError = 2, kInternalError = 3 };

struct Common {
  std::string report = "text";
  std::size_t max_group_order = 10000;
  bool timing = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--report", c.report, "output format")
      ->envname("GLOCSUR_REPORT")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--max-group-order", c.max_group_order, "reject larger groups")->capture_default_str();
  cmd->add_flag("--timing", c.timing, "include wall time in the report");
}

int cmd_check(const std::string& file, const Common& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const io::ProblemFile pf = io::read_problem(io::load_json_file(file), {c.max_group_order});
  const Verdict v = is_surjective(pf.problem);
  io::CheckReport r = io::make_check_report(pf, v);
  if (c.timing) r.wall_time = seconds_since(t0);
  if (c.report == "json")
    std::cout << io::dump(io::to_json(r));
  else
    std::cout << io::to_text(r);
  return v.surjective ? kYes : kNo;
}

int cmd_sixterm(const std::string& file, const Common& c, bool verify) {
  const auto t0 = std::chrono::steady_clock::now();
  const io::SesFile sf = io::read_ses(io::load_json_file(file), {c.max_group_order});
  const SubgroupOfG h = sf.subgroup ? *sf.subgroup : SubgroupOfG::whole(sf.seq.b2().group());
  const SixTermSequence st = build_six_term(sf.seq, h);
  std::optional<ExactnessReport> ex;
  if (verify) ex = check_exactness(st);
  io::SixTermReport r = io::make_sixterm_report(st, ex);
  if (c.timing) r.wall_time = seconds_since(t0);
  if (c.report == "json")
    std::cout << io::dump(io::to_json(r));
  else
    std::cout << io::to_text(r);
  return ex && !ex->exact ? kNo : kYes;
}

/// The documented template: a split place outside S, an inert place and a
/// real place (when the group has an element of order two) in S, and every
/// unlisted place in S.
Json emit_preset(const std::string& name, const std::map<std::string, std::string>& params) {
  const GModule m = make_preset(name, params);
  const FiniteGroup& g = m.group();
  LocalizationProblem p{m,
                        {{"v_split", PlaceKind::finite, SubgroupOfG::trivial(g)},
                         {"v_inert", PlaceKind::finite, SubgroupOfG::whole(g)}},
                        {"v_inert"},
                        TailSide::S,
                        cyclic_subgroup_classes(g)};
  for (const auto& h : cyclic_subgroup_classes(g)) {
    if (h.order() != 2) continue;
    p.places.push_back({"v_real", PlaceKind::real, h});
    p.S.push_back("v_real");
    break;
  }
  const RadicalData rad = default_radical(m);
  Json out;
  out["description"] = "preset " + name;
  const Json body = io::write_problem(p, rad.mc_generators);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

int cmd_presets_list(const Common& c) {
  if (c.report == "json") {
    Json out = Json::array();
    for (const auto& info : preset_catalog()) {
      Json x;
      x["name"] = info.name;
      x["description"] = info.description;
      x["params"] = Json::array();
      for (const auto& prm : info.params)
        x["params"].push_back({{"name", prm.name}, {"type", prm.type}, {"default", prm.default_value},
                               {"description", prm.description}});
      out.push_back(std::move(x));
    }
    std::cout << io::dump(out);
    return kYes;
  }
  for (const auto& info : preset_catalog()) {
    std::cout << info.name << ": " << info.description << "\n";
    for (const auto& prm : info.params)
      std::cout << "    " << prm.name << " (" << prm.type << ", default " << prm.default_value << "): "
                << prm.description << "\n";
  }
  return kYes;
}

int cmd_presets_emit(const std::string& name, const std::vector<std::string>& kv, const std::string& output) {
  std::map<std::string, std::string> params;
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects key=value, got '" + s + "'");
    params[s.substr(0, eq)] = s.substr(eq + 1);
  }
  const std::string text = io::dump(emit_preset(name, params));
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw InputError(output + ": cannot write");
    out << text;
  }
  return kYes;
}

int cmd_selftest(const SelftestOptions& opts, const Common& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const SelftestReport rep = run_selftest(opts);
  const double secs = seconds_since(t0);
  if (c.report == "json") {
    Json out;
    out["seed"] = rep.seed;
    out["ok"] = rep.ok();
    out["suites"] = Json::array();
    for (const auto& s : rep.suites)
      out["suites"].push_back({{"name", s.name}, {"instances", s.instances}, {"passed", s.passed},
                               {"failed", s.failed()}, {"first_failure", s.first_failure}});
    if (c.timing) out["wall_time_s"] = secs;
    std::cout << io::dump(out);
  } else {
    std::cout << "selftest seed " << rep.seed << "\n";
    for (const auto& s : rep.suites) {
      std::cout << "  " << (s.ok() ? "pass " : "FAIL ") << s.name << " " << s.passed << "/" << s.instances << "\n";
      if (!s.ok()) std::cout << "       " << s.first_failure << "\n";
    }
    if (c.timing) std::cout << "wall time: " << secs << " s\n";
  }
  return rep.ok() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surjectivity of localization maps for Galois modules"};
  app.require_subcommand(1);
  Common common;

  std::string file;
  auto* check = app.add_subcommand("check", "decide surjectivity for a problem file");
  check->add_option("file", file, "problem file")->required();
  add_common(check, common);

  bool verify = false;
  auto* sixterm = app.add_subcommand("sixterm", "six-term sequence of a short exact sequence file");
  sixterm->add_option("file", file, "sequence file")->required();
  sixterm->add_flag("--verify-exactness", verify, "check exactness at every node");
  add_common(sixterm, common);

  auto* presets = app.add_subcommand("presets", "list or emit preset problem files");
  presets->require_subcommand(1);
  auto* list = presets->add_subcommand("list", "preset names and parameters");
  add_common(list, common);
  std::string preset_name, output;
  std::vector<std::string> kv;
  auto* emit = presets->add_subcommand("emit", "write a ready-to-run problem file");
  emit->add_option("name", preset_name, "preset name")->required();
  emit->add_option("--param", kv, "key=value, repeatable");
  emit->add_option("-o,--output", output, "output file (default stdout)");

  SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "run the randomized property suites");
  selftest->add_option("--seed", st.seed, "seed")->capture_default_str();
  selftest->add_option("--count", st.count, "instances per suite (0 = suite default)")->capture_default_str();
  selftest->add_option("--suite", st.only, "run only these suites");
  add_common(selftest, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(file, common);
    if (*sixterm) return cmd_sixterm(file, common, verify);
    if (*list) return cmd_presets_list(common);
    if (*emit) return cmd_presets_emit(preset_name, kv, output);
    if (*selftest) return cmd_selftest(st, common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}
