#pragma once

#include "glocsur/int_matrix.hpp"

#include <optional>
#include <vector>

namespace glocsur {

/// U * A * V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... >= 0.
/// U_inv is carried along so callers can map SNF coordinates back.
struct SmithForm {
  IntMatrix U, U_inv, D, V;
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

/// Pivot rule: smallest nonzero |entry| in the active block, ties broken
/// row-major, so the witnesses are reproducible.
SmithForm smith_normal_form(const IntMatrix& a);

/// Column-style Hermite form: A * W = [H | 0] where the first `rank` columns
/// of H are in echelon form with positive pivots and entries left of each
/// pivot reduced into [0, pivot).
struct ColumnHermiteForm {
  IntMatrix H;  // n x rank
  IntMatrix W;  // k x k unimodular
  std::vector<std::size_t> pivot_rows;
  std::size_t rank = 0;
};

ColumnHermiteForm column_hermite_form(const IntMatrix& a);

/// A subgroup of Z^n given by its Hermite basis. Equality is basis equality.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient_rank);
  explicit Lattice(const IntMatrix& generators);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  /// Canonical coset representative of v modulo the lattice.
  IntVector reduce(IntVector v) const;
  bool contains(const IntVector& v) const;
  bool contains(const Lattice& other) const;
  /// The unique coefficients c with basis * c = v, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  Lattice operator+(const Lattice& other) const;
  Lattice intersect(const Lattice& other) const;
  /// {v in Z^n : k v in L for some k > 0}.
  Lattice saturation() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Integer basis (as columns) of {x in Z^k : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Repeated solves of A x = b over the integers against one factorization.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntMatrix& a);

  std::optional<IntVector> solve(const IntVector& b) const;
  /// Columns span the integer kernel of A.
  const IntMatrix& kernel() const { return kernel_; }
  std::size_t unknowns() const { return unknowns_; }

 private:
  std::size_t unknowns_ = 0;
  ColumnHermiteForm form_;
  Lattice image_;
  IntMatrix kernel_;
};

/// Rank over Q.
std::size_t rational_rank(const IntMatrix& a);

}  // namespace glocsur
