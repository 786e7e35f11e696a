#include "glocsur/presets.hpp"

#include <algorithm>
#include <set>

namespace glocsur {

namespace {

std::size_t parse_size(const std::string& text, const std::string& what) {
  const Int v = parse_int(text);
  if (v < 1 || !v.fits_ulong_p()) throw InputError(what + " must be a positive integer, got '" + text + "'");
  return v.get_ui();
}

}  // namespace

FiniteGroup named_group(const std::string& name) {
  const auto x = name.find('x');
  if (x != std::string::npos)
    return FiniteGroup::direct_product(named_group(name.substr(0, x)), named_group(name.substr(x + 1)));
  if (name == "S3") return FiniteGroup::symmetric3();
  if (name == "Q8") return FiniteGroup::quaternion();
  if (name.size() >= 2 && name[0] == 'C') return FiniteGroup::cyclic(parse_size(name.substr(1), "cyclic order"));
  if (name.size() >= 2 && name[0] == 'D') return FiniteGroup::dihedral(parse_size(name.substr(1), "dihedral degree"));
  throw InputError("unknown group name '" + name + "'");
}

GModule preset_trivial_Z(const FiniteGroup& g) { return GModule::trivial_action(g, FgAbGroup::free(1)); }

GModule preset_zero(const FiniteGroup& g) { return GModule::trivial_action(g, FgAbGroup::free(0)); }

GModule preset_Z_mod_n_trivial(const FiniteGroup& g, const Int& n) {
  if (n < 1) throw InputError("Z_mod_n_trivial needs n >= 1");
  return GModule::trivial_action(g, FgAbGroup(1, IntMatrix::scalar(1, n)));
}

GModule preset_norm_one_torus(std::size_t n) {
  if (n < 2) throw InputError("norm_one_torus needs a cyclic group of order >= 2");
  const std::size_t r = n - 1;
  // g b_k = b_{k+1} - b_1, with b_n = 0.
  IntMatrix a(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    a(0, k) -= 1;
    if (k + 1 < r) a(k + 1, k) += 1;
  }
  return GModule::from_generator_action(FiniteGroup::cyclic(n), FgAbGroup::free(r), {1}, {a});
}

GModule preset_induced_lattice(const FiniteGroup& g) { return permutation_module(g, SubgroupOfG::trivial(g)); }

GModule preset_twist_by_subgroup_action(const GModule& m, const SubgroupOfG& index_two) {
  return sign_twist(m, index_two);
}

const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> catalog = {
      {"trivial_Z", "Z with trivial action (GL_n type)", {{"group", "group", "C2", "acting group"}}},
      {"zero", "the zero module (simply connected type)", {{"group", "group", "C2", "acting group"}}},
      {"Z_mod_n_trivial",
       "Z/n with trivial action (PGL_n type)",
       {{"group", "group", "C2", "acting group"}, {"n", "integer", "2", "order of the module"}}},
      {"norm_one_torus", "augmentation ideal of Z[C_n]", {{"n", "integer", "2", "order of the cyclic group"}}},
      {"induced_lattice", "Z[G] with the regular action", {{"group", "group", "C2", "acting group"}}},
      {"direct_sum",
       "direct sum of two presets over the same group",
       {{"left", "preset", "trivial_Z", "first summand"},
        {"right", "preset", "norm_one_torus", "second summand"},
        {"group", "group", "C2", "acting group, passed to both summands"},
        {"n", "integer", "2", "passed to both summands"}}},
      {"twist_by_subgroup_action",
       "a preset with its action negated off an index-two subgroup",
       {{"base", "preset", "trivial_Z", "module to twist"},
        {"group", "group", "C2", "acting group"},
        {"subgroup", "elements", "0", "index-two subgroup, comma-separated element indices"},
        {"n", "integer", "2", "passed to the base preset"}}},
  };
  return catalog;
}

namespace {

std::string param(const std::map<std::string, std::string>& params, const std::string& key, const std::string& def) {
  auto it = params.find(key);
  return it == params.end() ? def : it->second;
}

std::vector<std::size_t> parse_elements(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const Int v = parse_int(piece);
    if (v < 0 || !v.fits_ulong_p()) throw InputError("bad element index '" + piece + "'");
    out.push_back(v.get_ui());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

GModule make_preset(const std::string& name, const std::map<std::string, std::string>& params) {
  const PresetInfo* info = nullptr;
  for (const auto& p : preset_catalog())
    if (p.name == name) info = &p;
  if (!info) throw InputError("unknown preset '" + name + "'");
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& p : info->params) known = known || p.name == key;
    if (!known) throw InputError("preset '" + name + "' has no parameter '" + key + "'");
  }
  if (name == "norm_one_torus") return preset_norm_one_torus(parse_size(param(params, "n", "2"), "n"));
  if (name == "direct_sum" || name == "twist_by_subgroup_action") {
    const std::string group = param(params, "group", "C2");
    const std::string n = param(params, "n", "2");
    auto sub = [&](const std::string& which) {
      if (which == "direct_sum" || which == "twist_by_subgroup_action")
        throw InputError("nested preset '" + which + "' is not supported");
      std::map<std::string, std::string> p;
      if (which == "norm_one_torus") {
        p["n"] = std::to_string(named_group(group).order());
      } else {
        p["group"] = group;
        if (which == "Z_mod_n_trivial") p["n"] = n;
      }
      return make_preset(which, p);
    };
    if (name == "direct_sum") return direct_sum(sub(param(params, "left", "trivial_Z")), sub(param(params, "right", "norm_one_torus")));
    GModule base = sub(param(params, "base", "trivial_Z"));
    return preset_twist_by_subgroup_action(base, SubgroupOfG(base.group(), parse_elements(param(params, "subgroup", "0"))));
  }
  const FiniteGroup g = named_group(param(params, "group", "C2"));
  if (name == "trivial_Z") return preset_trivial_Z(g);
  if (name == "zero") return preset_zero(g);
  if (name == "Z_mod_n_trivial") return preset_Z_mod_n_trivial(g, parse_int(param(params, "n", "2")));
  if (name == "induced_lattice") return preset_induced_lattice(g);
  throw InvariantViolation("preset catalog entry without a constructor: " + name);
}

RadicalData make_radical(const GModule& m, const IntMatrix& gens) {
  if (gens.rows() != m.rank()) throw InputError("radical generators have the wrong length");
  const Subgroup span(m.carrier(), gens);
  for (std::size_t g = 0; g < m.group().order(); ++g) {
    const IntMatrix moved = m.action(g) * gens;
    for (std::size_t c = 0; c < moved.cols(); ++c)
      if (!span.contains(moved.column(c)))
        throw InputError("radical subgroup is not stable under element " + std::to_string(g) + " (generator " +
                         std::to_string(c) + ")");
  }
  SubmoduleData parts = submodule(m, gens);
  if (!parts.quotient.carrier().is_finite())
    throw InputError("quotient by the radical subgroup is infinite: " + parts.quotient.carrier().describe());
  return RadicalData{m, gens, std::move(parts)};
}

RadicalData default_radical(const GModule& m) {
  return make_radical(m, m.carrier().torsion_exponent() * IntMatrix::identity(m.rank()));
}

std::vector<std::vector<IntVector>> aut_image(const RadicalData& rad, const std::vector<std::size_t>& elements) {
  const GModule& mc = rad.M_C();
  std::set<std::vector<IntVector>> keys;
  for (std::size_t g : elements) {
    std::vector<IntVector> key;
    for (std::size_t c = 0; c < mc.rank(); ++c) key.push_back(mc.carrier().reduce(mc.action(g).column(c)));
    keys.insert(std::move(key));
  }
  return {keys.begin(), keys.end()};
}

bool pr_condition(const RadicalData& rad, const SubgroupOfG& h) {
  if (!(h.group() == rad.M.group())) throw InputError("subgroup belongs to a different group");
  return aut_image(rad, h.elements()) == aut_image(rad, SubgroupOfG::whole(rad.M.group()).elements());
}

namespace {

const PlaceSpec& checked_v0(const RadicalData& rad, const LocalizationProblem& p, const std::string& v0) {
  validate(p);
  if (!rad.M.carrier().same_presentation(p.module.carrier()) || rad.M.actions() != p.module.actions())
    throw InputError("radical data and problem use different modules");
  const PlaceSpec& place = find_place(p, v0);
  if (place.kind != PlaceKind::finite) throw InputError("place '" + v0 + "' is not finite");
  if (in_S(p, v0)) throw InputError("place '" + v0 + "' is in S");
  return place;
}

}  // namespace

Prediction aut_image_check(const RadicalData& rad, const LocalizationProblem& p, const std::string& v0) {
  const PlaceSpec& place = checked_v0(rad, p, v0);
  Prediction out;
  out.hypothesis = rad.Mbar().carrier().is_finite() && pr_condition(rad, place.decomp);
  out.surjective = is_surjective(p).surjective;
  return out;
}

bool aut_image_predict(const RadicalData& rad, const LocalizationProblem& p, const std::string& v0) {
  const Prediction pr = aut_image_check(rad, p, v0);
  if (!pr.consistent()) throw InvariantViolation("the Aut-image condition holds at '" + v0 + "' but the criterion is not surjective");
  return pr.hypothesis;
}

Prediction split_radical_check(const RadicalData& rad, const LocalizationProblem& p, const std::string& v0) {
  checked_v0(rad, p, v0);
  Prediction out;
  out.hypothesis = aut_image(rad, SubgroupOfG::whole(rad.M.group()).elements()).size() == 1;
  out.surjective = is_surjective(p).surjective;
  return out;
}

Prediction prime_degree_prediction(const RadicalData& rad, const LocalizationProblem& p, const std::string& v0,
                                   unsigned long p_deg) {
  if (mpz_probab_prime_p(Int(p_deg).get_mpz_t(), 30) == 0) throw InputError(std::to_string(p_deg) + " is not prime");
  const PlaceSpec& place = checked_v0(rad, p, v0);
  const auto whole = aut_image(rad, SubgroupOfG::whole(rad.M.group()).elements());
  const auto local = aut_image(rad, place.decomp.elements());
  Prediction out;
  out.hypothesis = p_deg % whole.size() == 0 && local.size() > 1;
  out.surjective = is_surjective(p).surjective;
  return out;
}

bool prime_degree_check(const RadicalData& rad, const LocalizationProblem& p, const std::string& v0,
                        unsigned long p_deg) {
  const Prediction pr = prime_degree_prediction(rad, p, v0, p_deg);
  if (pr.hypothesis && !aut_image_predict(rad, p, v0))
    throw InvariantViolation("prime-degree hypothesis holds but the Aut-image condition fails");
  if (!pr.consistent()) throw InvariantViolation("prime-degree hypothesis holds but the criterion is not surjective");
  return pr.hypothesis;
}

RadicalLadder radical_ladder(const RadicalData& rad, const SubgroupOfG& h) {
  const std::size_t n = rad.M.rank(), k = rad.M_C().rank();
  ShortExactSequence seq(rad.M_C(), rad.M, rad.Mbar(), rad.parts.inclusion, IntMatrix::identity(n));
  const SixTermSequence local = build_six_term(seq, h);
  const SixTermSequence global = build_six_term(seq, SubgroupOfG::whole(rad.M.group()));
  RadicalLadder out;
  out.squares = check_ladder(local, global, IntMatrix::identity(k), IntMatrix::identity(n), IntMatrix::identity(n));
  const LadderMaps maps = ladder_maps(local, global, IntMatrix::identity(k), IntMatrix::identity(n),
                                      IntMatrix::identity(n));
  out.omega_bar_surjective = Homomorphism(local.torsion[2], global.torsion[2], maps.tors[2]).is_surjective();
  out.omega_surjective = Homomorphism(local.torsion[1], global.torsion[1], maps.tors[1]).is_surjective();
  return out;
}

}  // namespace glocsur
