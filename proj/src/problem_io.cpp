#include "glocsur/problem_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace glocsur::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key '" + key + "'");
  return *it;
}

void allow_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) fail(path, "unknown key '" + key + "'");
  }
}

const Json* optional_field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

void expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list");
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  const Int v = int_from_json(j, path);
  if (v < 0 || !v.fits_ulong_p()) fail(path, "expected a non-negative index");
  return v.get_ui();
}

std::string string_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

bool bool_from_json(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::string idx(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

std::vector<std::size_t> elements_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(size_from_json(j[k], idx(path, k)));
  return out;
}

Json tail_to_json(const FiniteGroup& g, const std::vector<SubgroupOfG>& tail) {
  if (tail == cyclic_subgroup_classes(g)) return "all_cyclic";
  Json out = Json::array();
  for (const auto& h : tail) out.push_back(h.elements());
  return out;
}

std::vector<SubgroupOfG> tail_from_json(const Json& j, const FiniteGroup& g, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "all_cyclic") fail(path, "expected \"all_cyclic\", a list of subgroups, or null");
    return cyclic_subgroup_classes(g);
  }
  expect_array(j, path);
  std::vector<SubgroupOfG> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read_subgroup(j[k], g, idx(path, k)));
  return out;
}

std::string describe(const Subgroup& s) { return s.as_group().describe(); }

std::vector<Int> ints_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<Int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(int_from_json(j[k], idx(path, k)));
  return out;
}

Json ints_to_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

/// Matrix of unknown shape given as rows; `cols` fixes the width for empty row lists.
IntMatrix rows_from_json(const Json& j, std::size_t cols, const std::string& path) {
  expect_array(j, path);
  std::size_t width = j.empty() ? cols : j[0].size();
  return matrix_from_json(j, j.size(), width, path);
}

std::string side_name(Side s) { return s == Side::S ? "S" : "complement"; }

}  // namespace

Int int_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return at_path(path, [&] { return parse_int(j.get<std::string>()); });
  fail(path, "expected an integer or a decimal string");
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(to_string(v));
}

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  expect_array(j, path);
  if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = idx(path, r);
    expect_array(j[r], rp);
    if (j[r].size() != cols)
      fail(rp, "expected " + std::to_string(cols) + " entries, got " + std::to_string(j[r].size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = int_from_json(j[r][c], idx(rp, c));
  }
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix columns_from_json(const Json& j, std::size_t rows, const std::string& path) {
  expect_array(j, path);
  return matrix_from_json(j, j.size(), rows, path).transpose();
}

Json columns_to_json(const IntMatrix& m) { return matrix_to_json(m.transpose()); }

FiniteGroup read_group(const Json& j, const ReadOptions& opts, const std::string& path) {
  allow_keys(j, {"cayley", "perm_generators", "name"}, path);
  const int forms = int(j.contains("cayley")) + int(j.contains("perm_generators")) + int(j.contains("name"));
  if (forms != 1) fail(path, "give exactly one of 'cayley', 'perm_generators', 'name'");
  FiniteGroup g;
  if (j.contains("cayley")) {
    const std::string p = path + ".cayley";
    const Json& t = j["cayley"];
    expect_array(t, p);
    if (t.size() > opts.max_group_order)
      fail(p, "group order " + std::to_string(t.size()) + " exceeds --max-group-order " +
                  std::to_string(opts.max_group_order));
    FiniteGroup::Table table;
    for (std::size_t r = 0; r < t.size(); ++r) table.push_back(elements_from_json(t[r], idx(p, r)));
    g = at_path(p, [&] { return FiniteGroup::from_cayley(table); });
  } else if (j.contains("perm_generators")) {
    const std::string p = path + ".perm_generators";
    const Json& t = j["perm_generators"];
    expect_array(t, p);
    std::vector<FiniteGroup::Permutation> gens;
    for (std::size_t r = 0; r < t.size(); ++r) gens.push_back(elements_from_json(t[r], idx(p, r)));
    g = at_path(p, [&] { return FiniteGroup::from_permutations(gens, opts.max_group_order); });
  } else {
    const std::string p = path + ".name";
    g = at_path(p, [&] { return named_group(string_from_json(j["name"], p)); });
    if (g.order() > opts.max_group_order) fail(p, "group order exceeds --max-group-order");
  }
  return g;
}

Json write_group(const FiniteGroup& g) {
  Json out;
  out["cayley"] = g.cayley_table();
  return out;
}

SubgroupOfG read_subgroup(const Json& j, const FiniteGroup& g, const std::string& path) {
  const auto elems = elements_from_json(j, path);
  return at_path(path, [&] { return SubgroupOfG(g, elems); });
}

GModule read_module(const Json& j, const FiniteGroup& g, const std::string& path) {
  allow_keys(j, {"ambient_rank", "relations", "action", "generator_action"}, path);
  const std::size_t n = size_from_json(field(j, "ambient_rank", path), path + ".ambient_rank");
  IntMatrix rel(n, 0);
  if (const Json* r = optional_field(j, "relations")) rel = columns_from_json(*r, n, path + ".relations");
  const FgAbGroup carrier(n, rel);
  const Json* full = optional_field(j, "action");
  const Json* gens = optional_field(j, "generator_action");
  if (full && gens) fail(path, "give at most one of 'action' and 'generator_action'");
  if (!full && !gens) return GModule::trivial_action(g, carrier);

  const std::string p = path + (full ? ".action" : ".generator_action");
  const Json& map = full ? *full : *gens;
  if (!map.is_object()) fail(p, "expected an object keyed by element index");
  std::vector<std::size_t> keys;
  std::vector<IntMatrix> mats;
  for (const auto& [key, value] : map.items()) {
    const std::string kp = p + "[\"" + key + "\"]";
    const std::size_t e = size_from_json(Json(key), kp);
    if (e >= g.order()) fail(kp, "element index out of range (group order " + std::to_string(g.order()) + ")");
    keys.push_back(e);
    mats.push_back(matrix_from_json(value, n, n, kp));
  }
  if (gens) return at_path(p, [&] { return GModule::from_generator_action(g, carrier, keys, mats); });
  std::vector<IntMatrix> action(g.order());
  std::vector<bool> seen(g.order(), false);
  for (std::size_t k = 0; k < keys.size(); ++k) {
    action[keys[k]] = mats[k];
    seen[keys[k]] = true;
  }
  for (std::size_t e = 0; e < g.order(); ++e)
    if (!seen[e]) fail(p, "no matrix for element " + std::to_string(e) + " (use 'generator_action' to give generators only)");
  return at_path(p, [&] { return GModule(g, carrier, action); });
}

Json write_module(const GModule& m) {
  Json out;
  out["ambient_rank"] = m.rank();
  out["relations"] = columns_to_json(m.carrier().relations());
  Json action = Json::object();
  for (std::size_t e = 0; e < m.group().order(); ++e) action[std::to_string(e)] = matrix_to_json(m.action(e));
  out["action"] = std::move(action);
  return out;
}

ProblemFile read_problem(const Json& j, const ReadOptions& opts) {
  allow_keys(j, {"group", "module", "places", "S", "complement_tail", "radical", "description"}, "$");
  const FiniteGroup g = read_group(field(j, "group", "$"), opts);
  const GModule m = read_module(field(j, "module", "$"), g);
  LocalizationProblem p{m, {}, {}, TailSide::none, {}};

  const Json& places = field(j, "places", "$");
  expect_array(places, "places");
  for (std::size_t k = 0; k < places.size(); ++k) {
    const std::string pp = idx("places", k);
    allow_keys(places[k], {"id", "kind", "decomp"}, pp);
    PlaceSpec v{string_from_json(field(places[k], "id", pp), pp + ".id"), PlaceKind::finite, SubgroupOfG::trivial(g)};
    v.kind = at_path(pp + ".kind", [&] { return parse_place_kind(string_from_json(field(places[k], "kind", pp), pp + ".kind")); });
    v.decomp = read_subgroup(field(places[k], "decomp", pp), g, pp + ".decomp");
    p.places.push_back(std::move(v));
  }

  const Json& s = field(j, "S", "$");
  allow_keys(s, {"explicit", "symbolic_tail"}, "S");
  if (const Json* e = optional_field(s, "explicit")) {
    expect_array(*e, "S.explicit");
    for (std::size_t k = 0; k < e->size(); ++k) p.S.push_back(string_from_json((*e)[k], idx("S.explicit", k)));
  }
  const Json* s_tail = optional_field(s, "symbolic_tail");
  const Json* c_tail = optional_field(j, "complement_tail");
  if (s_tail && c_tail) fail("complement_tail", "a tail can be attached to only one side");
  if (s_tail) {
    p.tail_side = TailSide::S;
    p.tail = tail_from_json(*s_tail, g, "S.symbolic_tail");
  } else if (c_tail) {
    p.tail_side = TailSide::complement;
    p.tail = tail_from_json(*c_tail, g, "complement_tail");
  }
  at_path("problem", [&] { validate(p); });

  ProblemFile out{p, std::nullopt};
  if (const Json* r = optional_field(j, "radical")) {
    allow_keys(*r, {"generators"}, "radical");
    const IntMatrix gens = columns_from_json(field(*r, "generators", "radical"), m.rank(), "radical.generators");
    out.radical = at_path("radical", [&] { return make_radical(m, gens); });
  }
  return out;
}

Json write_problem(const LocalizationProblem& p, const std::optional<IntMatrix>& radical_generators) {
  const FiniteGroup& g = p.module.group();
  Json out;
  out["group"] = write_group(g);
  out["module"] = write_module(p.module);
  Json places = Json::array();
  for (const auto& v : p.places) {
    Json row;
    row["id"] = v.id;
    row["kind"] = to_string(v.kind);
    row["decomp"] = v.decomp.elements();
    places.push_back(std::move(row));
  }
  out["places"] = std::move(places);
  Json s;
  s["explicit"] = p.S;
  s["symbolic_tail"] = p.tail_side == TailSide::S ? tail_to_json(g, p.tail) : Json(nullptr);
  out["S"] = std::move(s);
  if (p.tail_side == TailSide::complement) out["complement_tail"] = tail_to_json(g, p.tail);
  if (radical_generators) out["radical"]["generators"] = columns_to_json(*radical_generators);
  return out;
}

SesFile read_ses(const Json& j, const ReadOptions& opts) {
  allow_keys(j, {"group", "b1", "b2", "b3", "i", "j", "subgroup", "description"}, "$");
  const FiniteGroup g = read_group(field(j, "group", "$"), opts);
  const GModule b1 = read_module(field(j, "b1", "$"), g, "b1");
  const GModule b2 = read_module(field(j, "b2", "$"), g, "b2");
  const GModule b3 = read_module(field(j, "b3", "$"), g, "b3");
  const IntMatrix i = matrix_from_json(field(j, "i", "$"), b2.rank(), b1.rank(), "i");
  const IntMatrix jm = matrix_from_json(field(j, "j", "$"), b3.rank(), b2.rank(), "j");
  std::optional<SubgroupOfG> h;
  if (const Json* s = optional_field(j, "subgroup")) h = read_subgroup(*s, g, "subgroup");
  return SesFile{at_path("sequence", [&] { return ShortExactSequence(b1, b2, b3, i, jm); }), h};
}

Json write_ses(const ShortExactSequence& seq, const std::optional<SubgroupOfG>& subgroup) {
  Json out;
  out["group"] = write_group(seq.b2().group());
  out["b1"] = write_module(seq.b1());
  out["b2"] = write_module(seq.b2());
  out["b3"] = write_module(seq.b3());
  out["i"] = matrix_to_json(seq.i().matrix());
  out["j"] = matrix_to_json(seq.j().matrix());
  if (subgroup) out["subgroup"] = subgroup->elements();
  return out;
}

Json load_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError(file + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(file + ": " + e.what());
  }
}

namespace {

bool flat(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void dump_into(const Json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      dump_into(value, depth + 1, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      dump_into(j[k], depth + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  return out + "\n";
}

// ---------------------------------------------------------------------------
// check reports

CheckReport make_check_report(const ProblemFile& file, const Verdict& v) {
  CheckReport r;
  r.surjective = v.surjective;
  r.global = v.global.quotient.describe();
  r.global_torsion = describe(v.global.torsion_part);
  r.obstruction = v.obstruction.describe();
  r.obstruction_factors = v.obstruction.invariant_factors();
  r.ambient_rank = file.problem.module.rank();
  r.obstruction_lifts = v.obstruction_lifts;
  r.im_sigma_S = describe(v.im_sigma_S);
  r.im_sigma_comp = describe(v.im_sigma_comp);
  auto add = [&](const PlaceImage& pi) {
    r.places.push_back(PlaceRow{pi.id, to_string(pi.kind), side_name(pi.side), pi.decomp, describe(pi.image)});
  };
  for (const auto& pi : v.per_place) add(pi);
  for (const auto& pi : v.tail_images) add(pi);
  if (file.radical) {
    const RadicalData& rad = *file.radical;
    r.radical_quotient = rad.Mbar().carrier().describe();
    const bool split = aut_image(rad, SubgroupOfG::whole(rad.M.group()).elements()).size() == 1;
    for (const auto& place : file.problem.places) {
      if (place.kind != PlaceKind::finite || in_S(file.problem, place.id)) continue;
      const bool cond = pr_condition(rad, place.decomp);
      if (cond && !v.surjective)
        throw InvariantViolation("Aut-image condition holds at '" + place.id + "' but the criterion is not surjective");
      r.radical.push_back(RadicalRow{place.id, cond, split});
    }
  }
  return r;
}

Json to_json(const CheckReport& r) {
  Json out;
  out["verdict"] = r.surjective ? "surjective" : "not surjective";
  out["surjective"] = r.surjective;
  out["global_coinvariants"] = r.global;
  out["global_torsion"] = r.global_torsion;
  out["obstruction"] = r.obstruction;
  out["obstruction_invariant_factors"] = ints_to_json(r.obstruction_factors);
  out["ambient_rank"] = r.ambient_rank;
  out["obstruction_lifts"] = columns_to_json(r.obstruction_lifts);
  out["im_sigma_S"] = r.im_sigma_S;
  out["im_sigma_complement"] = r.im_sigma_comp;
  Json places = Json::array();
  for (const auto& p : r.places) {
    Json row;
    row["id"] = p.id;
    row["kind"] = p.kind;
    row["side"] = p.side;
    row["decomp"] = p.decomp;
    row["image"] = p.image;
    places.push_back(std::move(row));
  }
  out["places"] = std::move(places);
  if (r.radical_quotient) {
    Json rad;
    rad["quotient"] = *r.radical_quotient;
    Json rows = Json::array();
    for (const auto& row : r.radical) {
      Json x;
      x["place"] = row.place;
      x["aut_image_condition"] = row.condition;
      x["split"] = row.split;
      x["predicts_surjective"] = row.condition;
      rows.push_back(std::move(x));
    }
    rad["places"] = std::move(rows);
    out["radical"] = std::move(rad);
  }
  if (r.wall_time) out["wall_time_s"] = *r.wall_time;
  return out;
}

CheckReport check_report_from_json(const Json& j) {
  CheckReport r;
  r.surjective = bool_from_json(field(j, "surjective", "$"), "surjective");
  r.global = string_from_json(field(j, "global_coinvariants", "$"), "global_coinvariants");
  r.global_torsion = string_from_json(field(j, "global_torsion", "$"), "global_torsion");
  r.obstruction = string_from_json(field(j, "obstruction", "$"), "obstruction");
  r.obstruction_factors = ints_from_json(field(j, "obstruction_invariant_factors", "$"), "obstruction_invariant_factors");
  r.ambient_rank = size_from_json(field(j, "ambient_rank", "$"), "ambient_rank");
  r.obstruction_lifts = columns_from_json(field(j, "obstruction_lifts", "$"), r.ambient_rank, "obstruction_lifts");
  r.im_sigma_S = string_from_json(field(j, "im_sigma_S", "$"), "im_sigma_S");
  r.im_sigma_comp = string_from_json(field(j, "im_sigma_complement", "$"), "im_sigma_complement");
  const Json& places = field(j, "places", "$");
  expect_array(places, "places");
  for (std::size_t k = 0; k < places.size(); ++k) {
    const std::string p = idx("places", k);
    const Json& x = places[k];
    r.places.push_back(PlaceRow{string_from_json(field(x, "id", p), p + ".id"),
                                string_from_json(field(x, "kind", p), p + ".kind"),
                                string_from_json(field(x, "side", p), p + ".side"),
                                elements_from_json(field(x, "decomp", p), p + ".decomp"),
                                string_from_json(field(x, "image", p), p + ".image")});
  }
  if (const Json* rad = optional_field(j, "radical")) {
    r.radical_quotient = string_from_json(field(*rad, "quotient", "radical"), "radical.quotient");
    const Json& rows = field(*rad, "places", "radical");
    expect_array(rows, "radical.places");
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::string p = idx("radical.places", k);
      r.radical.push_back(RadicalRow{string_from_json(field(rows[k], "place", p), p + ".place"),
                                     bool_from_json(field(rows[k], "aut_image_condition", p), p),
                                     bool_from_json(field(rows[k], "split", p), p)});
    }
  }
  if (const Json* t = optional_field(j, "wall_time_s")) r.wall_time = t->get<double>();
  return r;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream out;
  out << "verdict: " << (r.surjective ? "surjective" : "NOT surjective") << "\n";
  out << "M_G = " << r.global << ", torsion " << r.global_torsion << "\n";
  out << "obstruction: " << r.obstruction << "\n";
  out << "im Sigma_S = " << r.im_sigma_S << ", im Sigma_comp = " << r.im_sigma_comp << "\n";
  std::size_t w = 4;
  for (const auto& p : r.places) w = std::max(w, p.id.size());
  out << "places:\n";
  for (const auto& p : r.places) {
    std::string decomp = "{";
    for (std::size_t k = 0; k < p.decomp.size(); ++k) decomp += (k ? "," : "") + std::to_string(p.decomp[k]);
    decomp += "}";
    out << "  " << std::left << std::setw(int(w)) << p.id << "  " << std::setw(7) << p.kind << "  " << std::setw(10)
        << p.side << "  " << std::setw(14) << decomp << "  " << p.image << "\n";
  }
  if (r.radical_quotient) {
    out << "radical: Mbar = " << *r.radical_quotient << "\n";
    for (const auto& row : r.radical)
      out << "  " << row.place << ": Aut-image condition " << (row.condition ? "holds" : "fails")
          << (row.split ? " (split)" : "") << "\n";
  }
  if (r.wall_time) out << "wall time: " << std::setprecision(3) << *r.wall_time << " s\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// six-term reports

SixTermReport make_sixterm_report(const SixTermSequence& st, const std::optional<ExactnessReport>& exactness) {
  SixTermReport r;
  r.subgroup_order = st.group_order;
  for (const auto& c : st.coinv) r.coinvariants.push_back(c.quotient.describe());
  for (const auto& t : st.torsion) r.torsion.push_back(t.invariant_factors());
  r.tensor_rank = st.tensor_rank;
  r.i_tors = st.i_tors;
  r.j_tors = st.j_tors;
  r.i_tensor = st.i_tensor;
  r.j_tensor = st.j_tensor;
  for (std::size_t i = 0; i < st.delta.rows(); ++i) {
    std::vector<Rational> row;
    for (std::size_t c = 0; c < st.delta.cols(); ++c) row.push_back(st.delta.entry(i, c));
    r.delta.push_back(std::move(row));
  }
  if (exactness) {
    r.exact = exactness->exact;
    r.torsion_bound = exactness->torsion_bound;
    for (const auto& n : exactness->nodes) r.nodes.push_back(NodeRow{n.name, n.composite_zero, n.exact, n.witness, n.detail});
  }
  return r;
}

Json to_json(const SixTermReport& r) {
  Json out;
  out["subgroup_order"] = r.subgroup_order;
  out["coinvariants"] = r.coinvariants;
  Json tors = Json::array();
  for (const auto& t : r.torsion) tors.push_back(ints_to_json(t));
  out["torsion_invariant_factors"] = std::move(tors);
  out["tensor_rank"] = r.tensor_rank;
  out["i_tors"] = matrix_to_json(r.i_tors);
  out["j_tors"] = matrix_to_json(r.j_tors);
  Json delta = Json::array();
  for (const auto& row : r.delta) {
    Json x = Json::array();
    for (const auto& q : row) x.push_back(to_string(q));
    delta.push_back(std::move(x));
  }
  out["delta"] = std::move(delta);
  out["i_tensor"] = matrix_to_json(r.i_tensor);
  out["j_tensor"] = matrix_to_json(r.j_tensor);
  if (r.exact) {
    Json ex;
    ex["exact"] = *r.exact;
    ex["torsion_bound"] = int_to_json(*r.torsion_bound);
    Json nodes = Json::array();
    for (const auto& n : r.nodes) {
      Json x;
      x["node"] = n.name;
      x["composite_zero"] = n.composite_zero;
      x["exact"] = n.exact;
      x["witness"] = n.witness;
      x["detail"] = n.detail;
      nodes.push_back(std::move(x));
    }
    ex["nodes"] = std::move(nodes);
    out["exactness"] = std::move(ex);
  }
  if (r.wall_time) out["wall_time_s"] = *r.wall_time;
  return out;
}

SixTermReport sixterm_report_from_json(const Json& j) {
  SixTermReport r;
  r.subgroup_order = size_from_json(field(j, "subgroup_order", "$"), "subgroup_order");
  const Json& coinv = field(j, "coinvariants", "$");
  expect_array(coinv, "coinvariants");
  for (std::size_t k = 0; k < coinv.size(); ++k) r.coinvariants.push_back(string_from_json(coinv[k], idx("coinvariants", k)));
  const Json& tors = field(j, "torsion_invariant_factors", "$");
  expect_array(tors, "torsion_invariant_factors");
  for (std::size_t k = 0; k < tors.size(); ++k) r.torsion.push_back(ints_from_json(tors[k], idx("torsion_invariant_factors", k)));
  const Json& ranks = field(j, "tensor_rank", "$");
  expect_array(ranks, "tensor_rank");
  for (std::size_t k = 0; k < ranks.size(); ++k) r.tensor_rank.push_back(size_from_json(ranks[k], idx("tensor_rank", k)));
  if (r.torsion.size() != 3 || r.tensor_rank.size() != 3) fail("$", "expected three objects");
  auto sz = [&](std::size_t k) { return r.torsion[k].size(); };
  r.i_tors = matrix_from_json(field(j, "i_tors", "$"), sz(1), sz(0), "i_tors");
  r.j_tors = matrix_from_json(field(j, "j_tors", "$"), sz(2), sz(1), "j_tors");
  r.i_tensor = matrix_from_json(field(j, "i_tensor", "$"), r.tensor_rank[1], r.tensor_rank[0], "i_tensor");
  r.j_tensor = matrix_from_json(field(j, "j_tensor", "$"), r.tensor_rank[2], r.tensor_rank[1], "j_tensor");
  const Json& delta = field(j, "delta", "$");
  expect_array(delta, "delta");
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const std::string rp = idx("delta", i);
    expect_array(delta[i], rp);
    std::vector<Rational> row;
    for (std::size_t c = 0; c < delta[i].size(); ++c) {
      const std::string text = string_from_json(delta[i][c], idx(rp, c));
      const auto slash = text.find('/');
      Rational q = slash == std::string::npos
                       ? Rational(at_path(idx(rp, c), [&] { return parse_int(text); }))
                       : Rational(at_path(idx(rp, c), [&] { return parse_int(text.substr(0, slash)); }),
                                  at_path(idx(rp, c), [&] { return parse_int(text.substr(slash + 1)); }));
      q.canonicalize();
      row.push_back(q);
    }
    r.delta.push_back(std::move(row));
  }
  if (const Json* ex = optional_field(j, "exactness")) {
    r.exact = bool_from_json(field(*ex, "exact", "exactness"), "exactness.exact");
    r.torsion_bound = int_from_json(field(*ex, "torsion_bound", "exactness"), "exactness.torsion_bound");
    const Json& nodes = field(*ex, "nodes", "exactness");
    expect_array(nodes, "exactness.nodes");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const std::string p = idx("exactness.nodes", k);
      const Json& x = nodes[k];
      r.nodes.push_back(NodeRow{string_from_json(field(x, "node", p), p + ".node"),
                                bool_from_json(field(x, "composite_zero", p), p + ".composite_zero"),
                                bool_from_json(field(x, "exact", p), p + ".exact"),
                                string_from_json(field(x, "witness", p), p + ".witness"),
                                string_from_json(field(x, "detail", p), p + ".detail")});
    }
  }
  if (const Json* t = optional_field(j, "wall_time_s")) r.wall_time = t->get<double>();
  return r;
}

std::string to_text(const SixTermReport& r) {
  std::ostringstream out;
  auto mat = [&](const std::string& name, const IntMatrix& m) {
    out << name << " (" << m.rows() << "x" << m.cols() << "):";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out << " [";
      for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(i, c));
      out << "]";
    }
    out << "\n";
  };
  out << "coinvariants over a subgroup of order " << r.subgroup_order << ":\n";
  for (std::size_t k = 0; k < r.coinvariants.size(); ++k)
    out << "  (B" << k + 1 << ")_H = " << r.coinvariants[k] << "\n";
  mat("i_tors", r.i_tors);
  mat("j_tors", r.j_tors);
  out << "delta (" << r.delta.size() << "x" << (r.delta.empty() ? 0 : r.delta[0].size()) << "):";
  for (const auto& row : r.delta) {
    out << " [";
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << to_string(row[c]);
    out << "]";
  }
  out << "\n";
  mat("i_tensor", r.i_tensor);
  mat("j_tensor", r.j_tensor);
  if (r.exact) {
    out << "exactness: " << (*r.exact ? "exact" : "NOT exact") << " (torsion bound " << to_string(*r.torsion_bound)
        << ")\n";
    for (const auto& n : r.nodes) {
      out << "  " << n.name << ": " << (n.exact && n.composite_zero ? "ok" : "FAIL");
      if (!n.witness.empty()) out << " witness " << n.witness;
      if (!n.detail.empty()) out << " (" << n.detail << ")";
      out << "\n";
    }
  }
  if (r.wall_time) out << "wall time: " << std::setprecision(3) << *r.wall_time << " s\n";
  return out.str();
}

}  // namespace glocsur::io
