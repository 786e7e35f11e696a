#include "glocsur/localization.hpp"

#include <set>

namespace glocsur {

std::string to_string(PlaceKind k) {
  switch (k) {
    case PlaceKind::finite: return "finite";
    case PlaceKind::real: return "real";
    case PlaceKind::complex: return "complex";
  }
  return "?";
}

PlaceKind parse_place_kind(const std::string& s) {
  if (s == "finite") return PlaceKind::finite;
  if (s == "real") return PlaceKind::real;
  if (s == "complex") return PlaceKind::complex;
  throw InputError("unknown place kind '" + s + "'");
}

std::string tail_label(const SubgroupOfG& h) {
  std::string out = "tail{";
  for (std::size_t k = 0; k < h.elements().size(); ++k) out += (k ? "," : "") + std::to_string(h.elements()[k]);
  return out + "}";
}

void validate(const LocalizationProblem& p) {
  std::set<std::string> ids;
  for (const auto& v : p.places) {
    if (v.id.empty()) throw InputError("place with an empty id");
    if (!ids.insert(v.id).second) throw InputError("duplicate place id '" + v.id + "'");
    if (!(v.decomp.group() == p.module.group()))
      throw InputError("decomposition group of place '" + v.id + "' lives in a different group");
    if (v.kind == PlaceKind::complex && v.decomp.order() != 1)
      throw InputError("complex place '" + v.id + "' must have trivial decomposition group");
    if (v.kind == PlaceKind::real && v.decomp.order() != 2)
      throw InputError("real place '" + v.id + "' must have a decomposition group of order 2, got order " +
                       std::to_string(v.decomp.order()));
  }
  std::set<std::string> s_ids;
  for (const auto& id : p.S) {
    if (!ids.count(id)) throw InputError("S names unknown place '" + id + "'");
    if (!s_ids.insert(id).second) throw InputError("S lists place '" + id + "' twice");
  }
  if (p.tail_side == TailSide::none && !p.tail.empty()) throw InputError("symbolic tail given without a side");
  for (const auto& h : p.tail) {
    if (!(h.group() == p.module.group())) throw InputError("tail subgroup lives in a different group");
    if (!h.is_cyclic()) throw InputError("tail subgroup " + tail_label(h) + " is not cyclic");
  }
}

const PlaceSpec& find_place(const LocalizationProblem& p, const std::string& id) {
  for (const auto& v : p.places)
    if (v.id == id) return v;
  throw InputError("unknown place '" + id + "'");
}

bool in_S(const LocalizationProblem& p, const std::string& id) {
  for (const auto& s : p.S)
    if (s == id) return true;
  return false;
}

Subgroup im_lambda(const GModule& m, const CoinvariantData& global, PlaceKind kind, const SubgroupOfG& decomp) {
  switch (kind) {
    case PlaceKind::complex:
      return Subgroup::trivial(global.quotient);
    case PlaceKind::real: {
      if (decomp.order() != 2) throw InputError("real place needs a decomposition group of order 2");
      const TateResult t = tate_h_minus_1(m, decomp);
      return Homomorphism(t.group, global.quotient, t.embedding.matrix()).image();
    }
    case PlaceKind::finite:
      return torsion_image(coinvariants(m, decomp), global);
  }
  throw InvariantViolation("unhandled place kind");
}

Subgroup im_lambda(const LocalizationProblem& p, const PlaceSpec& place) {
  validate(p);
  return im_lambda(p.module, coinvariants(p.module, SubgroupOfG::whole(p.module.group())), place.kind, place.decomp);
}

namespace {

struct Evaluated {
  CoinvariantData global;
  std::vector<PlaceImage> places;
  std::vector<PlaceImage> tail;
};

Evaluated evaluate(const LocalizationProblem& p, Execution exec) {
  validate(p);
  CoinvariantData global = coinvariants(p.module, SubgroupOfG::whole(p.module.group()));
  const std::size_t np = p.places.size(), nt = p.tail.size();
  std::vector<std::optional<Subgroup>> images(np + nt);
  for_each_index(np + nt, exec, [&](std::size_t k) {
    if (k < np)
      images[k] = im_lambda(p.module, global, p.places[k].kind, p.places[k].decomp);
    else
      images[k] = im_lambda(p.module, global, PlaceKind::finite, p.tail[k - np]);
  });
  Evaluated out{global, {}, {}};
  for (std::size_t k = 0; k < np; ++k) {
    const auto& v = p.places[k];
    out.places.push_back({v.id, v.kind, in_S(p, v.id) ? Side::S : Side::complement, v.decomp.elements(), *images[k]});
  }
  const Side tail_side = p.tail_side == TailSide::S ? Side::S : Side::complement;
  for (std::size_t k = 0; k < nt; ++k)
    out.tail.push_back({tail_label(p.tail[k]), PlaceKind::finite, tail_side, p.tail[k].elements(), *images[np + k]});
  return out;
}

Subgroup join_side(const Evaluated& e, Side side) {
  Subgroup acc = Subgroup::trivial(e.global.quotient);
  for (const auto& v : e.places)
    if (v.side == side) acc = subgroup_join(acc, v.image);
  for (const auto& v : e.tail)
    if (v.side == side) acc = subgroup_join(acc, v.image);
  return acc;
}

}  // namespace

Subgroup im_sigma(const LocalizationProblem& p, Side side, Execution exec) {
  return join_side(evaluate(p, exec), side);
}

Verdict is_surjective(const LocalizationProblem& p, Execution exec) {
  Evaluated e = evaluate(p, exec);
  Subgroup s = join_side(e, Side::S);
  Subgroup c = join_side(e, Side::complement);
  const bool surjective = subgroup_contains(c, s);
  Subquotient sq = subquotient(s, subgroup_intersect(s, c));
  IntMatrix lifts = sq.lift * sq.group.torsion_generators();
  IntMatrix reduced(lifts.rows(), lifts.cols());
  for (std::size_t col = 0; col < lifts.cols(); ++col)
    reduced.set_column(col, e.global.quotient.reduce(lifts.column(col)));
  return Verdict{surjective, e.global, sq.group, reduced, s, c, std::move(e.places), std::move(e.tail)};
}

bool check_v0_sufficiency(const LocalizationProblem& p, const std::string& v0) {
  const PlaceSpec& place = find_place(p, v0);
  if (in_S(p, v0)) throw InputError("place '" + v0 + "' is in S, expected a place outside S");
  CoinvariantData global = coinvariants(p.module, SubgroupOfG::whole(p.module.group()));
  return im_lambda(p.module, global, place.kind, place.decomp) == global.torsion_part;
}

bool semisimple_check(const LocalizationProblem& p) {
  validate(p);
  if (!p.module.carrier().is_finite()) return false;
  if (p.tail_side == TailSide::complement && !p.tail.empty()) return true;
  for (const auto& v : p.places)
    if (v.kind == PlaceKind::finite && !in_S(p, v.id)) return true;
  return false;
}

std::optional<std::string> lambda_dominating_place(const LocalizationProblem& p) {
  Evaluated e = evaluate(p, Execution::serial);
  std::vector<const PlaceImage*> in, out;
  for (const auto* list : {&e.places, &e.tail})
    for (const auto& v : *list) (v.side == Side::S ? in : out).push_back(&v);
  for (const auto* v0 : out) {
    bool all = true;
    for (const auto* v : in)
      if (!subgroup_contains(v0->image, v->image)) {
        all = false;
        break;
      }
    if (all) return v0->id;
  }
  return std::nullopt;
}

}  // namespace glocsur
