#include "glocsur/abelian_group.hpp"

#include <sstream>

namespace glocsur {

FgAbGroup::FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}

FgAbGroup::FgAbGroup(std::size_t ambient_rank, const IntMatrix& relations) {
  if (relations.rows() != ambient_rank && !(relations.cols() == 0))
    throw InputError("relation matrix has " + std::to_string(relations.rows()) +
                     " rows, expected ambient rank " + std::to_string(ambient_rank));
  auto d = std::make_shared<Data>();
  d->ambient = ambient_rank;
  d->relations = relations.cols() == 0 ? IntMatrix(ambient_rank, 0) : relations;
  d->lattice = d->relations.cols() == 0 ? Lattice(ambient_rank) : Lattice(d->relations);

  // The Hermite basis spans the same lattice, and is much narrower.
  d->smith = smith_normal_form(d->lattice.basis());
  const std::size_t rank = d->smith.rank;
  d->free_rank = ambient_rank - rank;
  std::vector<std::size_t> free_index;
  for (std::size_t t = 0; t < rank; ++t) {
    if (d->smith.D(t, t) > 1) {
      d->factors.push_back(d->smith.D(t, t));
      d->torsion_index.push_back(t);
    }
  }
  for (std::size_t t = rank; t < ambient_rank; ++t) free_index.push_back(t);
  d->torsion_gens = d->smith.U_inv.select_columns(d->torsion_index);
  d->free_gens = d->smith.U_inv.select_columns(free_index);
  d->torsion_proj = d->smith.U.select_rows(d->torsion_index);
  d->free_proj = d->smith.U.select_rows(free_index);
  if (d->torsion_proj.rows() == 0) d->torsion_proj = IntMatrix(0, ambient_rank);
  if (d->free_proj.rows() == 0) d->free_proj = IntMatrix(0, ambient_rank);
  data_ = std::move(d);
}

FgAbGroup FgAbGroup::free(std::size_t rank) { return FgAbGroup(rank, IntMatrix(rank, 0)); }

FgAbGroup FgAbGroup::trivial() { return FgAbGroup(0, IntMatrix(0, 0)); }

FgAbGroup FgAbGroup::from_invariants(std::size_t free_rank, const std::vector<Int>& factors) {
  const std::size_t n = free_rank + factors.size();
  IntMatrix rel(n, factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) rel(k, k) = factors[k];
  return FgAbGroup(n, rel);
}

std::optional<Int> FgAbGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Int o = 1;
  for (const auto& d : invariant_factors()) o *= d;
  return o;
}

Int FgAbGroup::torsion_exponent() const {
  return invariant_factors().empty() ? Int(1) : invariant_factors().back();
}

FgAbGroup::Coordinates FgAbGroup::coordinates(const IntVector& v) const {
  Coordinates c;
  c.torsion = data_->torsion_proj * v;
  for (std::size_t k = 0; k < c.torsion.size(); ++k) c.torsion[k] = mod_nonneg(c.torsion[k], data_->factors[k]);
  c.free = data_->free_proj * v;
  return c;
}

Int FgAbGroup::element_order(const IntVector& v) const {
  Coordinates c = coordinates(v);
  if (!glocsur::is_zero(c.free)) return 0;
  Int o = 1;
  for (std::size_t k = 0; k < c.torsion.size(); ++k) {
    Int g;
    mpz_gcd(g.get_mpz_t(), c.torsion[k].get_mpz_t(), data_->factors[k].get_mpz_t());
    o = lcm(o, data_->factors[k] / g);
  }
  return o;
}

bool FgAbGroup::same_presentation(const FgAbGroup& other) const {
  return data_ == other.data_ ||
         (ambient_rank() == other.ambient_rank() && relation_lattice() == other.relation_lattice());
}

std::string describe_invariants(std::size_t free_rank, const std::vector<Int>& factors) {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& d : factors) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::string FgAbGroup::describe() const { return describe_invariants(free_rank(), invariant_factors()); }

Element::Element(FgAbGroup group, IntVector rep) : group_(std::move(group)), rep_(group_.reduce(rep)) {}

bool operator==(const Element& a, const Element& b) {
  return a.group_.same_presentation(b.group_) && a.rep_ == b.rep_;
}

Element operator+(const Element& a, const Element& b) {
  if (!a.group_.same_presentation(b.group_)) throw InputError("adding elements of different groups");
  return Element(a.group_, a.rep_ + b.rep_);
}

Element operator-(const Element& a, const Element& b) {
  if (!a.group_.same_presentation(b.group_)) throw InputError("subtracting elements of different groups");
  return Element(a.group_, a.rep_ - b.rep_);
}

Subgroup::Subgroup(FgAbGroup parent, IntMatrix generators)
    : parent_(std::move(parent)), generators_(std::move(generators)) {
  if (generators_.cols() == 0) generators_ = IntMatrix(parent_.ambient_rank(), 0);
  if (generators_.rows() != parent_.ambient_rank())
    throw InputError("subgroup generators have wrong length");
  lattice_ = Lattice(hstack(generators_, parent_.relation_lattice().basis()));
  if (lattice_.ambient_rank() != parent_.ambient_rank()) lattice_ = Lattice(parent_.ambient_rank());
}

Subgroup Subgroup::trivial(const FgAbGroup& parent) {
  return Subgroup(parent, IntMatrix(parent.ambient_rank(), 0));
}

Subgroup Subgroup::whole(const FgAbGroup& parent) {
  return Subgroup(parent, IntMatrix::identity(parent.ambient_rank()));
}

bool Subgroup::is_trivial() const { return parent_.relation_lattice().contains(lattice_); }

FgAbGroup Subgroup::as_group() const {
  return subquotient(*this, Subgroup::trivial(parent_)).group;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent_.same_presentation(b.parent_) && a.lattice_ == b.lattice_;
}

Homomorphism::Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 && matrix_.cols() == 0)
    matrix_ = IntMatrix(target_.ambient_rank(), source_.ambient_rank());
  if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank())
    throw InputError("homomorphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                     std::to_string(matrix_.cols()) + ", expected " +
                     std::to_string(target_.ambient_rank()) + "x" + std::to_string(source_.ambient_rank()));
  const IntMatrix& rel = source_.relation_lattice().basis();
  for (std::size_t c = 0; c < rel.cols(); ++c)
    if (!target_.is_zero(matrix_ * rel.column(c)))
      throw InputError("homomorphism is not well defined: source relation " + std::to_string(c) +
                       " does not map into the target relations");
}

Homomorphism Homomorphism::identity(const FgAbGroup& g) {
  return Homomorphism(g, g, IntMatrix::identity(g.ambient_rank()));
}

Subgroup Homomorphism::image() const { return Subgroup(target_, matrix_); }

Subgroup Homomorphism::image_of(const Subgroup& h) const {
  if (!h.parent().same_presentation(source_)) throw InputError("image_of: subgroup of a different group");
  return Subgroup(target_, matrix_ * h.lattice().basis());
}

Subgroup Homomorphism::kernel() const {
  const std::size_t n = source_.ambient_rank();
  if (n == 0) return Subgroup::trivial(source_);
  IntMatrix joint = hstack(matrix_, target_.relation_lattice().basis());
  IntMatrix ker = integer_kernel(joint);
  return Subgroup(source_, ker.row_block(0, n));
}

bool Homomorphism::is_injective() const { return kernel().is_trivial(); }

bool Homomorphism::is_surjective() const {
  const Subgroup im = image();
  for (std::size_t k = 0; k < target_.ambient_rank(); ++k) {
    IntVector e(target_.ambient_rank());
    e[k] = 1;
    if (!im.contains(e)) return false;
  }
  return true;
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!inner.target().same_presentation(outer.source()))
    throw InputError("compose: inner target differs from outer source");
  return Homomorphism(inner.source(), outer.target(), outer.matrix() * inner.matrix());
}

std::pair<std::size_t, std::vector<Int>> canonicalize(const FgAbGroup& g) {
  return {g.free_rank(), g.invariant_factors()};
}

Subgroup torsion_subgroup(const FgAbGroup& g) { return Subgroup(g, g.torsion_generators()); }

std::pair<FgAbGroup, Homomorphism> tf_quotient(const FgAbGroup& g) {
  return quotient(g, torsion_subgroup(g));
}

namespace {
void require_same_parent(const Subgroup& h, const Subgroup& k) {
  if (!h.parent().same_presentation(k.parent()))
    throw InputError("subgroups have different parent groups");
}
}  // namespace

bool subgroup_contains(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return h.lattice().contains(k.lattice());
}

Subgroup subgroup_intersect(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return Subgroup(h.parent(), h.lattice().intersect(k.lattice()).basis());
}

Subgroup subgroup_join(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return Subgroup(h.parent(), hstack(h.generators(), k.generators()));
}

std::pair<FgAbGroup, Homomorphism> quotient(const FgAbGroup& g, const Subgroup& h) {
  if (!h.parent().same_presentation(g)) throw InputError("quotient: subgroup of a different group");
  FgAbGroup q(g.ambient_rank(), h.lattice().basis());
  return {q, Homomorphism(g, q, IntMatrix::identity(g.ambient_rank()))};
}

Subquotient subquotient(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  if (!h.lattice().contains(k.lattice())) throw InputError("subquotient: K is not contained in H");
  const IntMatrix& basis = h.lattice().basis();
  const IntMatrix& kb = k.lattice().basis();
  IntMatrix rel(basis.cols(), kb.cols());
  for (std::size_t c = 0; c < kb.cols(); ++c) {
    auto coeff = h.lattice().coordinates(kb.column(c));
    if (!coeff) throw InvariantViolation("subquotient: basis coordinates missing");
    rel.set_column(c, *coeff);
  }
  return {FgAbGroup(basis.cols(), rel), basis};
}

}  // namespace glocsur
