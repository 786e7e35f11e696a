#pragma once

#include "glocsur/localization.hpp"
#include "glocsur/sixterm.hpp"

#include <map>
#include <string>
#include <vector>

namespace glocsur {

/// "C<n>", "D<n>" (order 2n), "S3", "Q8", and products "AxB".
FiniteGroup named_group(const std::string& name);

GModule preset_trivial_Z(const FiniteGroup& g);
GModule preset_zero(const FiniteGroup& g);
GModule preset_Z_mod_n_trivial(const FiniteGroup& g, const Int& n);
/// Augmentation ideal of Z[C_n] on the basis g^k - 1, k = 1..n-1.
GModule preset_norm_one_torus(std::size_t n);
/// Z[G] with the regular action.
GModule preset_induced_lattice(const FiniteGroup& g);
/// Sign twist off an index-two subgroup.
GModule preset_twist_by_subgroup_action(const GModule& m, const SubgroupOfG& index_two);

struct PresetParam {
  std::string name;
  std::string type;
  std::string default_value;
  std::string description;
};

struct PresetInfo {
  std::string name;
  std::string description;
  std::vector<PresetParam> params;
};

const std::vector<PresetInfo>& preset_catalog();

/// Builds a preset module from string parameters (defaults filled in).
GModule make_preset(const std::string& name, const std::map<std::string, std::string>& params);

/// 0 -> M_C -> M -> Mbar -> 0 with M_C a stable subgroup and Mbar finite.
struct RadicalData {
  GModule M;
  IntMatrix mc_generators;
  SubmoduleData parts;  // parts.sub = M_C, parts.quotient = Mbar

  const GModule& M_C() const { return parts.sub; }
  const GModule& Mbar() const { return parts.quotient; }
};

/// Throws InputError when the generators do not span a stable subgroup or the
/// quotient is infinite.
RadicalData make_radical(const GModule& m, const IntMatrix& mc_generators);
/// M_C = e M with e the torsion exponent: all of M for a lattice, 0 for a
/// finite module.
RadicalData default_radical(const GModule& m);

/// Residue keys of the elements' actions on M_C.
std::vector<std::vector<IntVector>> aut_image(const RadicalData& rad, const std::vector<std::size_t>& elements);

/// im[H -> Aut M_C] = im[G -> Aut M_C].
bool pr_condition(const RadicalData& rad, const SubgroupOfG& h);

struct Prediction {
  bool hypothesis = false;     // the sufficient condition holds
  bool surjective = false;     // the direct criterion
  bool consistent() const { return !hypothesis || surjective; }
};

/// The Aut-image condition at the finite place v0 outside S. Throws InvariantViolation
/// if the condition holds and the direct criterion disagrees.
bool aut_image_predict(const RadicalData& rad, const LocalizationProblem& problem, const std::string& v0);
Prediction aut_image_check(const RadicalData& rad, const LocalizationProblem& problem, const std::string& v0);

/// Split radical: G acts trivially on M_C, and v0 is a finite place outside S.
Prediction split_radical_check(const RadicalData& rad, const LocalizationProblem& problem, const std::string& v0);

/// |im[G -> Aut M_C]| divides p and im[G_w -> Aut M_C] is nontrivial.
/// Throws InputError when p is not prime.
bool prime_degree_check(const RadicalData& rad, const LocalizationProblem& problem, const std::string& v0,
                        unsigned long p);
Prediction prime_degree_prediction(const RadicalData& rad, const LocalizationProblem& problem,
                                   const std::string& v0, unsigned long p);

/// The ladder between the six-term rows of 0 -> M_C -> M -> Mbar -> 0 for
/// G_w and for G, with identity vertical maps.
struct RadicalLadder {
  std::vector<LadderSquare> squares;
  bool omega_bar_surjective = false;  // (Mbar)_{G_w,tors} -> (Mbar)_{G,tors}
  bool omega_surjective = false;      // M_{G_w,tors} -> M_{G,tors}
};
RadicalLadder radical_ladder(const RadicalData& rad, const SubgroupOfG& h);

}  // namespace glocsur
