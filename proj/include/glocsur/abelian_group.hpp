#pragma once

#include "glocsur/normal_form.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glocsur {

/// Z^n modulo the column span of a relation matrix. Immutable; copies share
/// the cached normal forms.
class FgAbGroup {
 public:
  FgAbGroup();
  FgAbGroup(std::size_t ambient_rank, const IntMatrix& relations);

  static FgAbGroup free(std::size_t rank);
  static FgAbGroup trivial();
  /// Z^r + Z/d_1 + ... presented diagonally.
  static FgAbGroup from_invariants(std::size_t free_rank, const std::vector<Int>& factors);

  std::size_t ambient_rank() const { return data_->ambient; }
  const IntMatrix& relations() const { return data_->relations; }
  const Lattice& relation_lattice() const { return data_->lattice; }
  const SmithForm& smith() const { return data_->smith; }

  std::size_t free_rank() const { return data_->free_rank; }
  /// Invariant factors > 1, in divisibility order.
  const std::vector<Int>& invariant_factors() const { return data_->factors; }
  bool is_finite() const { return free_rank() == 0; }
  bool is_trivial() const { return is_finite() && invariant_factors().empty(); }
  /// Group order, or nullopt when infinite.
  std::optional<Int> order() const;
  /// Exponent of the torsion subgroup (1 when torsion-free).
  Int torsion_exponent() const;

  IntVector reduce(const IntVector& v) const { return data_->lattice.reduce(v); }
  bool is_zero(const IntVector& v) const { return data_->lattice.contains(v); }
  bool equal(const IntVector& a, const IntVector& b) const { return is_zero(a - b); }
  /// Additive order of the class of v, or 0 when it has infinite order.
  Int element_order(const IntVector& v) const;

  /// Coordinates in the decomposition Z/d_1 + ... + Z^r: torsion entries are
  /// reduced into [0, d_i).
  struct Coordinates {
    IntVector torsion;
    IntVector free;
  };
  Coordinates coordinates(const IntVector& v) const;
  /// Ambient lifts of the cyclic summand generators (one column each).
  const IntMatrix& torsion_generators() const { return data_->torsion_gens; }
  const IntMatrix& free_generators() const { return data_->free_gens; }
  /// Row block of U picking out torsion / free coordinates.
  const IntMatrix& torsion_projection() const { return data_->torsion_proj; }
  const IntMatrix& free_projection() const { return data_->free_proj; }

  /// Same ambient rank and same relation lattice.
  bool same_presentation(const FgAbGroup& other) const;

  /// "0", "Z", "Z^2 + Z/2 + Z/4" ...
  std::string describe() const;

 private:
  struct Data {
    std::size_t ambient = 0;
    IntMatrix relations;
    Lattice lattice;
    SmithForm smith;
    std::size_t free_rank = 0;
    std::vector<Int> factors;
    std::vector<std::size_t> torsion_index;  // SNF rows carrying factors > 1
    IntMatrix torsion_gens, free_gens, torsion_proj, free_proj;
  };
  std::shared_ptr<const Data> data_;
};

std::string describe_invariants(std::size_t free_rank, const std::vector<Int>& factors);

/// A coset representative tied to its group; equality is coset equality.
class Element {
 public:
  Element(FgAbGroup group, IntVector rep);

  const FgAbGroup& group() const { return group_; }
  const IntVector& rep() const { return rep_; }
  Int order() const { return group_.element_order(rep_); }

  friend bool operator==(const Element& a, const Element& b);
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);

 private:
  FgAbGroup group_;
  IntVector rep_;
};

/// Subgroup generated by a finite list of elements of `parent`. The
/// canonical form is the Hermite basis of [generators | relations].
class Subgroup {
 public:
  Subgroup(FgAbGroup parent, IntMatrix generators);

  static Subgroup trivial(const FgAbGroup& parent);
  static Subgroup whole(const FgAbGroup& parent);

  const FgAbGroup& parent() const { return parent_; }
  const IntMatrix& generators() const { return generators_; }
  /// Preimage of the subgroup in Z^n (always contains the relations).
  const Lattice& lattice() const { return lattice_; }

  bool contains(const IntVector& v) const { return lattice_.contains(v); }
  bool is_trivial() const;
  /// The subgroup as an abstract group (lattice modulo relations).
  FgAbGroup as_group() const;
  std::optional<Int> order() const { return as_group().order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  FgAbGroup parent_;
  IntMatrix generators_;
  Lattice lattice_;
};

/// A map of abelian groups induced by an integer matrix on ambient lattices.
/// Construction checks that relations land in the target relation span.
class Homomorphism {
 public:
  Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static Homomorphism identity(const FgAbGroup& g);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& v) const { return target_.reduce(matrix_ * v); }
  Subgroup image() const;
  Subgroup image_of(const Subgroup& h) const;
  Subgroup kernel() const;
  bool is_injective() const;
  bool is_surjective() const;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

/// Canonical (free rank, invariant factors).
std::pair<std::size_t, std::vector<Int>> canonicalize(const FgAbGroup& g);


Subgroup torsion_subgroup(const FgAbGroup& g);
std::pair<FgAbGroup, Homomorphism> tf_quotient(const FgAbGroup& g);

bool subgroup_contains(const Subgroup& h, const Subgroup& k);
Subgroup subgroup_intersect(const Subgroup& h, const Subgroup& k);
Subgroup subgroup_join(const Subgroup& h, const Subgroup& k);
std::pair<FgAbGroup, Homomorphism> quotient(const FgAbGroup& g, const Subgroup& h);

/// H / K for K inside H, presented in coordinates of H's lattice basis;
/// `lift` maps those coordinates back into the ambient Z^n of the parent.
struct Subquotient {
  FgAbGroup group;
  IntMatrix lift;
};
Subquotient subquotient(const Subgroup& h, const Subgroup& k);

}  // namespace glocsur
