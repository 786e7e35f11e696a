#pragma once

#include "glocsur/abelian_group.hpp"
#include "glocsur/finite_group.hpp"
#include "glocsur/parallel.hpp"

#include <memory>
#include <string>
#include <vector>

namespace glocsur {

struct ActionViolation {
  enum class Kind { shape, identity, composition, relation };
  Kind kind = Kind::shape;
  std::size_t g = 0;
  std::size_t h = 0;
  std::size_t column = 0;
  std::string message;
};

/// Checks action(e) = 1, action(g) action(h) = action(gh) modulo relations,
/// and that every action(g) preserves the relation span. Empty means valid.
std::vector<ActionViolation> validate_action(const FiniteGroup& group, const FgAbGroup& carrier,
                                             const std::vector<IntMatrix>& action);

/// A finitely generated abelian group with a left action of a finite group,
/// one integer matrix per group element.
class GModule {
 public:
  /// Throws InputError naming the first violation.
  GModule(FiniteGroup group, FgAbGroup carrier, std::vector<IntMatrix> action);

  static GModule trivial_action(FiniteGroup group, FgAbGroup carrier);
  /// Extends matrices given for `generators` multiplicatively to all elements.
  static GModule from_generator_action(FiniteGroup group, FgAbGroup carrier,
                                       const std::vector<std::size_t>& generators,
                                       const std::vector<IntMatrix>& matrices);

  const FiniteGroup& group() const { return data_->group; }
  const FgAbGroup& carrier() const { return data_->carrier; }
  std::size_t rank() const { return data_->carrier.ambient_rank(); }
  const IntMatrix& action(std::size_t g) const { return data_->action[g]; }
  const std::vector<IntMatrix>& actions() const { return data_->action; }

 private:
  struct Data {
    FiniteGroup group;
    FgAbGroup carrier;
    std::vector<IntMatrix> action;
  };
  std::shared_ptr<const Data> data_;
};

/// Columns g e_i - e_i for g in `elements`.
IntMatrix augmentation_relations(const GModule& m, const std::vector<std::size_t>& elements);

enum class RelationSet { generators, all_elements };

struct CoinvariantData {
  FgAbGroup quotient;
  Homomorphism projection;  // carrier -> quotient, identity on Z^n
  Subgroup torsion_part;
  FgAbGroup tf_part;
  Homomorphism tf_projection;  // quotient -> tf_part
};

/// M_H = M / <h m - m>. By default only a generating set of H is used.
CoinvariantData coinvariants(const GModule& m, const SubgroupOfG& h, RelationSet rs = RelationSet::generators);

/// M_H -> M_K for H inside K (identity on the ambient lattice).
Homomorphism induced_map_on_coinvariants(const GModule& m, const SubgroupOfG& h, const SubgroupOfG& k);
Homomorphism induced_map(const CoinvariantData& from, const CoinvariantData& to);
/// Image of (M_H)_tors inside M_K.
Subgroup torsion_image(const CoinvariantData& from, const CoinvariantData& to);

struct TateResult {
  FgAbGroup group;          // ker N_H / <h m - m>
  Homomorphism embedding;   // into M_H
  IntMatrix norm;
};
TateResult tate_h_minus_1(const GModule& m, const SubgroupOfG& h);

/// Boundary maps of the inhomogeneous bar complex C_2 -> C_1 -> C_0 for the
/// right action m.g = g^-1 m, with C_k = M tensor Z[H^k].
IntMatrix bar_boundary_1(const GModule& m, const SubgroupOfG& h);
IntMatrix bar_boundary_2(const GModule& m, const SubgroupOfG& h, Execution exec = Execution::parallel);
FgAbGroup h1_bar_complex(const GModule& m, const SubgroupOfG& h, Execution exec = Execution::parallel);

/// The smallest stable subgroup containing `generators`, as a module on a
/// basis of its lattice, together with the quotient module.
struct SubmoduleData {
  GModule sub;
  IntMatrix inclusion;  // n x k, sub ambient -> carrier ambient
  GModule quotient;     // same ambient as m, projection is the identity
};
SubmoduleData submodule(const GModule& m, const IntMatrix& generators);

GModule direct_sum(const GModule& a, const GModule& b);
/// Ambient change of basis v -> W v.
GModule change_basis(const GModule& m, const IntMatrix& w, const IntMatrix& w_inv);
/// Multiplies the action by -1 off an index-two subgroup.
GModule sign_twist(const GModule& m, const SubgroupOfG& index_two);
/// Z[G/H] with G permuting left cosets.
GModule permutation_module(const FiniteGroup& group, const SubgroupOfG& h);
/// Least element of each left coset gH, in increasing order.
std::vector<std::size_t> left_coset_representatives(const SubgroupOfG& h);

}  // namespace glocsur
