#pragma once

#include "glocsur/gmodule.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace glocsur {

/// 0 -> B1 -i-> B2 -j-> B3 -> 0, validated exactly at construction.
class ShortExactSequence {
 public:
  /// Throws InputError naming the failing invariant.
  ShortExactSequence(GModule b1, GModule b2, GModule b3, IntMatrix i, IntMatrix j);

  const GModule& b1() const { return b1_; }
  const GModule& b2() const { return b2_; }
  const GModule& b3() const { return b3_; }
  const Homomorphism& i() const { return i_; }
  const Homomorphism& j() const { return j_; }

 private:
  GModule b1_, b2_, b3_;
  Homomorphism i_, j_;
};

/// Integer matrix over a common denominator, read entrywise in Q/Z.
struct FractionMatrix {
  IntMatrix numerators;
  Int denominator = 1;

  /// Reduces numerators into [0, denominator) and cancels common factors.
  void normalize();
  Rational entry(std::size_t r, std::size_t c) const { return frac(Rational(numerators(r, c), denominator)); }
  std::size_t rows() const { return numerators.rows(); }
  std::size_t cols() const { return numerators.cols(); }
  static FractionMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);
  friend bool operator==(const FractionMatrix& a, const FractionMatrix& b) {
    return a.numerators == b.numerators && a.denominator == b.denominator;
  }
};

/// (B1)_tors -> (B2)_tors -> (B3)_tors -> Q/Z(B1) -> Q/Z(B2) -> Q/Z(B3) -> 0
/// for coinvariants under a subgroup H. Torsion parts use SNF coordinates
/// (Z/d_1 + ...), tensors use free coordinates of (B_k)_H.
struct SixTermSequence {
  std::size_t group_order = 0;
  std::vector<CoinvariantData> coinv;  // (B1)_H, (B2)_H, (B3)_H
  std::vector<FgAbGroup> torsion;      // canonical torsion groups
  std::vector<std::size_t> tensor_rank;
  IntMatrix i_tors, j_tors;
  FractionMatrix delta;  // column k: image of the k-th torsion generator of (B3)_H
  IntMatrix i_tensor, j_tensor;
};

SixTermSequence build_six_term(const ShortExactSequence& seq, Execution exec = Execution::parallel);
SixTermSequence build_six_term(const ShortExactSequence& seq, const SubgroupOfG& h,
                               Execution exec = Execution::parallel);

/// Connecting map on the class of x3 (ambient vector of B3), returned in free
/// coordinates of (B1)_H, entries in [0, 1). With an rng every choice in the
/// construction is randomized: the multiple of the order, the solutions for
/// y, the lifts, and the representative of the class of x3.
std::vector<Rational> delta_connect(const ShortExactSequence& seq, const SubgroupOfG& h, const IntVector& x3,
                                    std::mt19937_64* rng = nullptr);
std::vector<Rational> delta_connect(const ShortExactSequence& seq, const IntVector& x3,
                                    std::mt19937_64* rng = nullptr);

struct NodeReport {
  std::string name;
  bool composite_zero = true;
  bool exact = true;
  std::string witness;  // empty when exact
  std::string detail;
};

struct ExactnessReport {
  bool exact = true;
  /// |G| times all invariant factors of the three coinvariant groups.
  Int torsion_bound = 1;
  std::vector<NodeReport> nodes;  // four interior nodes, then surjectivity of the last map
};

ExactnessReport check_exactness(const SixTermSequence& st);

/// (M_H)_tors, the Tor_1(Q/Z, M) side of the comparison.
FgAbGroup tor1_as_torsion_coinvariants(const GModule& m, const SubgroupOfG& h);
/// Kernel of M_H -> Q (x) M_H, computed through the rational saturation of the
/// coinvariant relation lattice.
Subgroup rationalization_kernel(const FgAbGroup& g);
/// |H| H_1(H, M) = 0, via the bar complex.
bool verify_h1_killed(const GModule& m, const SubgroupOfG& h, Execution exec = Execution::parallel);

struct LadderSquare {
  std::string name;
  bool commutes = true;
  std::string witness;
};

/// Checks the five squares between two six-term sequences, for vertical maps
/// induced by ambient matrices f1, f2, f3 (each must descend to coinvariants).
std::vector<LadderSquare> check_ladder(const SixTermSequence& top, const SixTermSequence& bottom, const IntMatrix& f1,
                                       const IntMatrix& f2, const IntMatrix& f3);

/// Induced maps on the six objects, in the coordinates of the sequences.
struct LadderMaps {
  IntMatrix tors[3];
  IntMatrix tensor[3];
};
LadderMaps ladder_maps(const SixTermSequence& top, const SixTermSequence& bottom, const IntMatrix& f1,
                       const IntMatrix& f2, const IntMatrix& f3);

}  // namespace glocsur
