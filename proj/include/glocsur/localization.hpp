#pragma once

#include "glocsur/gmodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace glocsur {

enum class PlaceKind { finite, real, complex };

std::string to_string(PlaceKind k);
PlaceKind parse_place_kind(const std::string& s);

/// One place v, represented by the decomposition group of one place w above it.
struct PlaceSpec {
  std::string id;
  PlaceKind kind = PlaceKind::finite;
  SubgroupOfG decomp;
};

/// Which side of the partition the unlisted finite places belong to.
enum class TailSide { none, S, complement };

/// The module, the declared places, the ids in S, and optionally a symbolic
/// tail of cyclic decomposition groups standing for all unlisted finite places.
struct LocalizationProblem {
  GModule module;
  std::vector<PlaceSpec> places;
  std::vector<std::string> S;
  TailSide tail_side = TailSide::none;
  std::vector<SubgroupOfG> tail;
};

/// Throws InputError on duplicate or unknown ids, foreign subgroups, a
/// complex place with nontrivial decomposition group, a real place whose
/// decomposition group does not have order 2, or a non-cyclic tail entry.
void validate(const LocalizationProblem& problem);

const PlaceSpec& find_place(const LocalizationProblem& problem, const std::string& id);
bool in_S(const LocalizationProblem& problem, const std::string& id);

enum class Side { S, complement };

/// im lambda_v inside M_G (always within its torsion subgroup).
Subgroup im_lambda(const GModule& m, const CoinvariantData& global, PlaceKind kind, const SubgroupOfG& decomp);
Subgroup im_lambda(const LocalizationProblem& problem, const PlaceSpec& place);

Subgroup im_sigma(const LocalizationProblem& problem, Side side, Execution exec = Execution::parallel);

struct PlaceImage {
  std::string id;
  PlaceKind kind = PlaceKind::finite;
  Side side = Side::S;
  std::vector<std::size_t> decomp;
  Subgroup image;
};

struct Verdict {
  bool surjective = false;
  CoinvariantData global;
  FgAbGroup obstruction;
  /// Ambient lifts into M of generators of the cyclic summands of the obstruction.
  IntMatrix obstruction_lifts;
  Subgroup im_sigma_S;
  Subgroup im_sigma_comp;
  std::vector<PlaceImage> per_place;
  std::vector<PlaceImage> tail_images;
};

Verdict is_surjective(const LocalizationProblem& problem, Execution exec = Execution::parallel);

/// True iff im lambda_{v0} is all of M_G,tors. v0 must be a declared place
/// outside S.
bool check_v0_sufficiency(const LocalizationProblem& problem, const std::string& v0);

/// Finite carrier and at least one finite place outside S.
bool semisimple_check(const LocalizationProblem& problem);

/// A place v0 outside S (declared or tail) whose image contains im lambda_v
/// for every v in S, if one exists.
std::optional<std::string> lambda_dominating_place(const LocalizationProblem& problem);

std::string tail_label(const SubgroupOfG& h);

}  // namespace glocsur
