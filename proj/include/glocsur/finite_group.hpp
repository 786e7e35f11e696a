#pragma once

#include "glocsur/integer.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace glocsur {

/// A finite group given by its multiplication table; element 0 is the
/// identity. Validated at construction, immutable, cheap to copy.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<std::size_t>>;
  using Permutation = std::vector<std::size_t>;

  FiniteGroup();
  static FiniteGroup from_cayley(const Table& table);
  /// Closes the generated permutation group; elements are listed in
  /// breadth-first order from the identity. Throws InputError past max_order.
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                                       std::size_t max_order = 10000);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup dihedral(std::size_t n);  // order 2n, n >= 3
  static FiniteGroup symmetric3();
  static FiniteGroup quaternion();

  std::size_t order() const { return data_->order; }
  std::size_t mul(std::size_t a, std::size_t b) const { return data_->table[a * data_->order + b]; }
  std::size_t inverse(std::size_t a) const { return data_->inverse[a]; }
  std::size_t power(std::size_t a, std::size_t k) const;
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;

  /// Element indices of the permutations a group was built from, or a greedy
  /// generating set for table-built groups.
  const std::vector<std::size_t>& input_generators() const { return data_->generators; }
  Table cayley_table() const;

  /// For every element e != 0 a pair (p, k) with e = p * gens[k] and p
  /// reached earlier in the returned order. Throws if gens do not generate.
  std::vector<std::pair<std::size_t, std::size_t>> spanning_tree(const std::vector<std::size_t>& gens,
                                                                 std::vector<std::size_t>* order_out) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<std::size_t> table;
    std::vector<std::size_t> inverse;
    std::vector<std::size_t> generators;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static FiniteGroup from_validated(std::size_t n, std::vector<std::size_t> table, std::vector<std::size_t> gens);
  std::shared_ptr<const Data> data_;
};

/// A subgroup of a FiniteGroup stored as a sorted element list.
class SubgroupOfG {
 public:
  /// Validates identity membership and closure.
  SubgroupOfG(FiniteGroup group, std::vector<std::size_t> elements);

  static SubgroupOfG generated(const FiniteGroup& group, const std::vector<std::size_t>& gens);
  static SubgroupOfG trivial(const FiniteGroup& group);
  static SubgroupOfG whole(const FiniteGroup& group);

  const FiniteGroup& group() const { return group_; }
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::size_t g) const;
  bool is_subgroup_of(const SubgroupOfG& other) const;
  /// g H g^-1
  SubgroupOfG conjugate(std::size_t g) const;
  /// Greedy generating set, scanning elements in index order.
  std::vector<std::size_t> generators() const;
  bool is_cyclic() const;

  friend bool operator==(const SubgroupOfG& a, const SubgroupOfG& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  FiniteGroup group_;
  std::vector<std::size_t> elements_;
};

std::vector<SubgroupOfG> all_subgroups(const FiniteGroup& group);
std::vector<SubgroupOfG> cyclic_subgroups(const FiniteGroup& group);
/// One representative (lexicographically least element list) per conjugacy
/// class of cyclic subgroups, ordered by (order, elements).
std::vector<SubgroupOfG> cyclic_subgroup_classes(const FiniteGroup& group);
bool are_conjugate(const SubgroupOfG& a, const SubgroupOfG& b);
/// Image of the group in its abelianization, |G / [G, G]|.
std::size_t abelianization_order(const FiniteGroup& group);

}  // namespace glocsur
