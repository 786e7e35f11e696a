#pragma once

#include "glocsur/presets.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace glocsur::io {

using Json = nlohmann::ordered_json;

struct ReadOptions {
  std::size_t max_group_order = 10000;
};

/// JSON numbers or decimal strings; written as numbers when they fit in 64 bits.
Int int_from_json(const Json& j, const std::string& path);
Json int_to_json(const Int& v);
/// A matrix is a list of rows; a vector list is a list of columns.
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path);
Json matrix_to_json(const IntMatrix& m);
IntMatrix columns_from_json(const Json& j, std::size_t rows, const std::string& path);
Json columns_to_json(const IntMatrix& m);

FiniteGroup read_group(const Json& j, const ReadOptions& opts, const std::string& path = "group");
Json write_group(const FiniteGroup& g);
GModule read_module(const Json& j, const FiniteGroup& g, const std::string& path = "module");
Json write_module(const GModule& m);
SubgroupOfG read_subgroup(const Json& j, const FiniteGroup& g, const std::string& path);

struct ProblemFile {
  LocalizationProblem problem;
  std::optional<RadicalData> radical;
};

ProblemFile read_problem(const Json& j, const ReadOptions& opts = {});
Json write_problem(const LocalizationProblem& p, const std::optional<IntMatrix>& radical_generators = std::nullopt);

struct SesFile {
  ShortExactSequence seq;
  std::optional<SubgroupOfG> subgroup;
};

SesFile read_ses(const Json& j, const ReadOptions& opts = {});
Json write_ses(const ShortExactSequence& seq, const std::optional<SubgroupOfG>& subgroup = std::nullopt);

/// Parses a file; syntax errors become InputError with the file name.
Json load_json_file(const std::string& file);
/// Indented output with lists of scalars kept on one line. Ends with a newline.
std::string dump(const Json& j);

// Reports. Plain data so that parse(emit(r)) == r can be checked directly.

struct PlaceRow {
  std::string id;
  std::string kind;
  std::string side;
  std::vector<std::size_t> decomp;
  std::string image;
  bool operator==(const PlaceRow&) const = default;
};

struct RadicalRow {
  std::string place;
  bool condition = false;  // Aut-image equality at the place
  bool split = false;      // trivial action on M_C
  bool operator==(const RadicalRow&) const = default;
};

struct CheckReport {
  bool surjective = false;
  std::string global;
  std::string global_torsion;
  std::string obstruction;
  std::vector<Int> obstruction_factors;
  std::size_t ambient_rank = 0;
  IntMatrix obstruction_lifts;  // ambient_rank rows
  std::string im_sigma_S;
  std::string im_sigma_comp;
  std::vector<PlaceRow> places;
  std::optional<std::string> radical_quotient;
  std::vector<RadicalRow> radical;
  std::optional<double> wall_time;
  bool operator==(const CheckReport&) const = default;
};

CheckReport make_check_report(const ProblemFile& file, const Verdict& v);
Json to_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);
std::string to_text(const CheckReport& r);

struct NodeRow {
  std::string name;
  bool composite_zero = true;
  bool exact = true;
  std::string witness;
  std::string detail;
  bool operator==(const NodeRow&) const = default;
};

struct SixTermReport {
  std::size_t subgroup_order = 0;
  std::vector<std::string> coinvariants;      // (B1)_H, (B2)_H, (B3)_H
  std::vector<std::vector<Int>> torsion;      // invariant factors of each torsion part
  std::vector<std::size_t> tensor_rank;
  IntMatrix i_tors, j_tors, i_tensor, j_tensor;
  std::vector<std::vector<Rational>> delta;   // rows, entries in [0, 1)
  std::optional<bool> exact;
  std::optional<Int> torsion_bound;
  std::vector<NodeRow> nodes;
  std::optional<double> wall_time;
  bool operator==(const SixTermReport&) const = default;
};

SixTermReport make_sixterm_report(const SixTermSequence& st, const std::optional<ExactnessReport>& exactness);
Json to_json(const SixTermReport& r);
SixTermReport sixterm_report_from_json(const Json& j);
std::string to_text(const SixTermReport& r);

}  // namespace glocsur::io
