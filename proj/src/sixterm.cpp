#include "glocsur/sixterm.hpp"

#include <functional>

namespace glocsur {

namespace {

Homomorphism checked_map(const GModule& from, const GModule& to, IntMatrix m, const char* name) {
  if (m.rows() != to.rank() || m.cols() != from.rank())
    throw InputError(std::string("map ") + name + " has shape " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected " + std::to_string(to.rank()) + "x" +
                     std::to_string(from.rank()));
  try {
    return Homomorphism(from.carrier(), to.carrier(), std::move(m));
  } catch (const InputError& e) {
    throw InputError(std::string("map ") + name + " is not well defined: " + e.what());
  }
}

void check_equivariant(const GModule& from, const GModule& to, const IntMatrix& m, const char* name) {
  for (std::size_t g = 0; g < from.group().order(); ++g) {
    const IntMatrix diff = m * from.action(g) - to.action(g) * m;
    for (std::size_t c = 0; c < diff.cols(); ++c)
      if (!to.carrier().is_zero(diff.column(c)))
        throw InputError(std::string("map ") + name + " does not commute with the action of element " +
                         std::to_string(g) + " (basis vector " + std::to_string(c) + ")");
  }
}

std::string format_vector(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + to_string(v[k]);
  return out + ")";
}

std::string format_int_vector(const IntVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + to_string(v[k]);
  return out + ")";
}

std::vector<Rational> scaled(const IntVector& v, const Int& den) {
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(frac(Rational(x, den)));
  return out;
}

IntMatrix reduce_rows(IntMatrix m, const std::vector<Int>& moduli) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = mod_nonneg(m(r, c), moduli[r]);
  return m;
}

IntVector random_combination(std::mt19937_64& rng, const IntMatrix& basis) {
  IntVector out(basis.rows());
  std::uniform_int_distribution<long> coef(-2, 2);
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    const Int k = coef(rng);
    for (std::size_t r = 0; r < basis.rows(); ++r) out[r] += k * basis(r, c);
  }
  return out;
}

IntVector head(const IntVector& v, std::size_t n) { return IntVector(v.begin(), v.begin() + static_cast<long>(n)); }

IntVector solve_or_die(const IntegerSolver& s, const IntVector& b, std::mt19937_64* rng, const char* what) {
  auto x = s.solve(b);
  if (!x) throw InvariantViolation(std::string("connecting map: no solution for ") + what);
  if (rng) *x = *x + random_combination(*rng, s.kernel());
  return *x;
}

}  // namespace

ShortExactSequence::ShortExactSequence(GModule b1, GModule b2, GModule b3, IntMatrix i, IntMatrix j)
    : b1_(std::move(b1)),
      b2_(std::move(b2)),
      b3_(std::move(b3)),
      i_(checked_map(b1_, b2_, std::move(i), "i")),
      j_(checked_map(b2_, b3_, std::move(j), "j")) {
  if (!(b1_.group() == b2_.group()) || !(b2_.group() == b3_.group()))
    throw InputError("the three modules must share one group");
  check_equivariant(b1_, b2_, i_.matrix(), "i");
  check_equivariant(b2_, b3_, j_.matrix(), "j");
  const Subgroup ker_i = i_.kernel();
  if (!ker_i.is_trivial()) throw InputError("i is not injective: kernel " + ker_i.as_group().describe());
  if (!j_.is_surjective()) throw InputError("j is not surjective");
  const Subgroup im_i = i_.image(), ker_j = j_.kernel();
  if (!subgroup_contains(ker_j, im_i)) throw InputError("j o i is not zero");
  if (!subgroup_contains(im_i, ker_j)) throw InputError("kernel of j is larger than the image of i");
}

void FractionMatrix::normalize() {
  if (denominator == 0) throw InvariantViolation("zero denominator");
  if (denominator < 0) {
    denominator = -denominator;
    numerators = Int(-1) * numerators;
  }
  Int g = denominator;
  for (std::size_t r = 0; r < numerators.rows(); ++r)
    for (std::size_t c = 0; c < numerators.cols(); ++c) {
      numerators(r, c) = mod_nonneg(numerators(r, c), denominator);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), numerators(r, c).get_mpz_t());
    }
  if (g > 1) {
    for (std::size_t r = 0; r < numerators.rows(); ++r)
      for (std::size_t c = 0; c < numerators.cols(); ++c) numerators(r, c) /= g;
    denominator /= g;
  }
}

FractionMatrix FractionMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
  Int den = 1;
  for (const auto& col : cols)
    for (const auto& q : col) den = lcm(den, q.get_den());
  FractionMatrix f{IntMatrix(rows, cols.size()), den};
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational& q = cols[c][r];
      f.numerators(r, c) = q.get_num() * (den / q.get_den());
    }
  f.normalize();
  return f;
}

std::vector<Rational> delta_connect(const ShortExactSequence& seq, const SubgroupOfG& h, const IntVector& x3_in,
                                    std::mt19937_64* rng) {
  const GModule &b1 = seq.b1(), &b2 = seq.b2(), &b3 = seq.b3();
  const std::size_t n1 = b1.rank(), n2 = b2.rank(), n3 = b3.rank();
  if (x3_in.size() != n3) throw InputError("element of B3 has the wrong length");
  std::vector<std::size_t> gammas;
  for (std::size_t g : h.elements())
    if (g != 0) gammas.push_back(g);

  const CoinvariantData c3 = coinvariants(b3, h);
  const Int order = c3.quotient.element_order(x3_in);
  if (order == 0) throw InputError("the class of x3 is not torsion in the coinvariants");

  const IntMatrix& r3 = b3.carrier().relations();
  IntMatrix aug3(n3, 0);
  for (std::size_t g : gammas) aug3 = hstack(aug3, b3.action(g) - IntMatrix::identity(n3));

  IntVector x3 = x3_in;
  Int n = order;
  if (rng) {
    // Another representative of the same class, and a multiple of the order.
    x3 = x3 + random_combination(*rng, hstack(aug3, r3));
    n *= std::uniform_int_distribution<long>(1, 3)(*rng);
  }

  // n x3 = sum_g (g y_g - y_g) + R3 c
  const IntegerSolver aug_solver(hstack(aug3, r3));
  const IntVector sol = solve_or_die(aug_solver, n * x3, rng, "the augmentation equation");

  const IntegerSolver lift_solver(hstack(seq.j().matrix(), r3));
  const IntVector x2 = head(solve_or_die(lift_solver, x3, rng, "the lift of x3"), n2);

  IntVector z2 = n * x2;
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    const IntVector y3(sol.begin() + static_cast<long>(k * n3), sol.begin() + static_cast<long>((k + 1) * n3));
    const IntVector y2 = head(solve_or_die(lift_solver, y3, rng, "the lift of y"), n2);
    z2 = z2 - (b2.action(gammas[k]) * y2 - y2);
  }

  const IntegerSolver sub_solver(hstack(seq.i().matrix(), b2.carrier().relations()));
  const IntVector z1 = head(solve_or_die(sub_solver, z2, rng, "z2 in the image of i"), n1);

  const CoinvariantData c1 = coinvariants(b1, h);
  return scaled(c1.quotient.free_projection() * z1, n);
}

std::vector<Rational> delta_connect(const ShortExactSequence& seq, const IntVector& x3, std::mt19937_64* rng) {
  return delta_connect(seq, SubgroupOfG::whole(seq.b1().group()), x3, rng);
}

SixTermSequence build_six_term(const ShortExactSequence& seq, Execution exec) {
  return build_six_term(seq, SubgroupOfG::whole(seq.b1().group()), exec);
}

SixTermSequence build_six_term(const ShortExactSequence& seq, const SubgroupOfG& h, Execution exec) {
  SixTermSequence st;
  st.group_order = h.order();
  for (const GModule* b : {&seq.b1(), &seq.b2(), &seq.b3()}) {
    st.coinv.push_back(coinvariants(*b, h));
    const FgAbGroup& q = st.coinv.back().quotient;
    st.torsion.push_back(FgAbGroup::from_invariants(0, q.invariant_factors()));
    st.tensor_rank.push_back(q.free_rank());
  }
  const FgAbGroup &q1 = st.coinv[0].quotient, &q2 = st.coinv[1].quotient, &q3 = st.coinv[2].quotient;
  st.i_tors = reduce_rows(q2.torsion_projection() * seq.i().matrix() * q1.torsion_generators(), q2.invariant_factors());
  st.j_tors = reduce_rows(q3.torsion_projection() * seq.j().matrix() * q2.torsion_generators(), q3.invariant_factors());
  st.i_tensor = q2.free_projection() * seq.i().matrix() * q1.free_generators();
  st.j_tensor = q3.free_projection() * seq.j().matrix() * q2.free_generators();

  const IntMatrix& gens = q3.torsion_generators();
  std::vector<std::vector<Rational>> cols(gens.cols());
  for_each_index(gens.cols(), exec, [&](std::size_t k) { cols[k] = delta_connect(seq, h, gens.column(k)); });
  st.delta = FractionMatrix::from_columns(st.tensor_rank[0], cols);
  return st;
}

namespace {

/// Smallest-index generator of `a` outside `b`, if any.
std::optional<IntVector> escapee(const Subgroup& a, const Subgroup& b) {
  for (std::size_t c = 0; c < a.generators().cols(); ++c) {
    IntVector v = a.generators().column(c);
    if (!b.contains(v)) return v;
  }
  return std::nullopt;
}

void compare(NodeReport& node, const Subgroup& image, const Subgroup& kernel,
             const std::function<std::string(const IntVector&)>& show) {
  node.composite_zero = subgroup_contains(kernel, image);
  if (auto w = escapee(image, kernel)) {
    node.exact = false;
    node.witness = show(*w);
    node.detail = "image element outside the kernel";
  } else if (auto w2 = escapee(kernel, image)) {
    node.exact = false;
    node.witness = show(*w2);
    node.detail = "kernel element outside the image";
  }
}

std::optional<Homomorphism> try_map(const FgAbGroup& s, const FgAbGroup& t, const IntMatrix& m) {
  try {
    return Homomorphism(s, t, m);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

Int product(const std::vector<Int>& v) {
  Int p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

IntMatrix zero_if_empty(const IntMatrix& m, std::size_t rows, std::size_t cols) {
  return m.rows() == rows && m.cols() == cols ? m : IntMatrix(rows, cols);
}

}  // namespace

ExactnessReport check_exactness(const SixTermSequence& st) {
  ExactnessReport rep;
  rep.torsion_bound = Int(static_cast<unsigned long>(st.group_order));
  for (const auto& c : st.coinv) rep.torsion_bound *= product(c.quotient.invariant_factors());

  const FgAbGroup &t1 = st.torsion[0], &t2 = st.torsion[1], &t3 = st.torsion[2];
  const std::size_t r1 = st.tensor_rank[0], r2 = st.tensor_rank[1], r3 = st.tensor_rank[2];
  const IntMatrix i_tors = zero_if_empty(st.i_tors, t2.ambient_rank(), t1.ambient_rank());
  const IntMatrix j_tors = zero_if_empty(st.j_tors, t3.ambient_rank(), t2.ambient_rank());
  const IntMatrix A = zero_if_empty(st.i_tensor, r2, r1);
  const IntMatrix C = zero_if_empty(st.j_tensor, r3, r2);
  const Int& den = st.delta.denominator;
  const IntMatrix delta = zero_if_empty(st.delta.numerators, r1, t3.ambient_rank());

  auto fail = [&](NodeReport& node, const std::string& detail) {
    node.exact = false;
    node.composite_zero = false;
    node.detail = detail;
  };

  // (B2)_tors
  {
    NodeReport node{"(B2)_tors", true, true, "", ""};
    auto i = try_map(t1, t2, i_tors);
    auto j = try_map(t2, t3, j_tors);
    if (!i || !j)
      fail(node, "torsion map is not well defined");
    else
      compare(node, i->image(), j->kernel(), [](const IntVector& v) { return format_int_vector(v); });
    rep.nodes.push_back(node);
  }
  // (B3)_tors
  FgAbGroup delta_target(r1, IntMatrix::scalar(r1, den));
  {
    NodeReport node{"(B3)_tors", true, true, "", ""};
    auto j = try_map(t2, t3, j_tors);
    auto d = try_map(t3, delta_target, delta);
    if (!j || !d)
      fail(node, "torsion map or connecting map is not well defined");
    else
      compare(node, j->image(), d->kernel(), [](const IntVector& v) { return format_int_vector(v); });
    rep.nodes.push_back(node);
  }
  // Q/Z (x) (B1)_G
  {
    NodeReport node{"Q/Z(B1)", true, true, "", ""};
    const IntMatrix Ad = A * delta;
    for (std::size_t r = 0; r < Ad.rows(); ++r)
      for (std::size_t c = 0; c < Ad.cols(); ++c)
        if (!divides(den, Ad(r, c))) node.composite_zero = false;
    if (r1 > 0) {
      if (rational_rank(A) < r1) {
        const IntVector v = integer_kernel(A).column(0);
        node.exact = false;
        node.witness = format_vector(scaled(v, 2 * den));
        node.detail = "kernel of i_* is infinite, the image of the connecting map is finite";
      } else {
        const SmithForm s = smith_normal_form(A);
        Int L = den;
        for (std::size_t k = 0; k < r1; ++k) L = lcm(L, s.D(k, k));
        FgAbGroup ambient(r1, IntMatrix::scalar(r1, L));
        IntMatrix kernel_gens(r1, r1);
        for (std::size_t k = 0; k < r1; ++k)
          for (std::size_t r = 0; r < r1; ++r) kernel_gens(r, k) = s.V(r, k) * (L / s.D(k, k));
        const Subgroup ker(ambient, kernel_gens);
        const Subgroup im(ambient, Int(L / den) * delta);
        compare(node, im, ker, [&](const IntVector& v) { return format_vector(scaled(v, L)); });
      }
    }
    rep.nodes.push_back(node);
  }
  // Q/Z (x) (B2)_G
  {
    NodeReport node{"Q/Z(B2)", true, true, "", ""};
    const IntMatrix CA = C * A;
    node.composite_zero = CA.is_zero();
    const std::size_t rank_a = rational_rank(A), rank_c = rational_rank(C);
    if (!node.composite_zero) {
      node.exact = false;
      for (std::size_t k = 0; k < CA.cols() && node.witness.empty(); ++k) {
        const IntVector col = CA.column(k);
        if (is_zero(col)) continue;
        Int m = 1;
        for (const auto& x : col) m = std::max(m, Int(abs(x)));
        node.witness = format_vector(scaled(A.column(k), m + 1));
      }
      node.detail = "j_* o i_* is not zero";
    } else if (rank_a + rank_c != r2) {
      node.exact = false;
      node.detail = "rank of i_* plus rank of j_* differs from the rank of (B2)_G";
      // A rational kernel vector of j_* off the span of i_*, scaled so that
      // some integer functional vanishing on im i_* takes the value 1/2.
      const IntMatrix kc = integer_kernel(C);
      const IntMatrix P = integer_kernel(A.transpose()).transpose();
      for (std::size_t k = 0; k < kc.cols() && node.witness.empty(); ++k) {
        const IntVector v = kc.column(k);
        for (std::size_t p = 0; p < P.rows(); ++p) {
          Int pv = 0, g = 0;
          for (std::size_t c = 0; c < r2; ++c) {
            pv += P(p, c) * v[c];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), P(p, c).get_mpz_t());
          }
          if (pv == 0) continue;
          std::vector<Rational> w;
          for (const auto& x : v) w.push_back(frac(Rational(x * g, 2 * pv)));
          node.witness = format_vector(w);
          break;
        }
      }
    } else if (r3 > 0) {
      const SmithForm s = smith_normal_form(C);
      for (std::size_t k = 0; k < s.rank; ++k) {
        if (s.D(k, k) == 1) continue;
        node.exact = false;
        node.witness = format_vector(scaled(s.V.column(k), s.D(k, k)));
        node.detail = "kernel of j_* has a finite part outside the image of i_*";
        break;
      }
    }
    rep.nodes.push_back(node);
  }
  // Q/Z (x) (B3)_G -> 0
  {
    NodeReport node{"Q/Z(B3)", true, true, "", "surjectivity of the last map"};
    if (rational_rank(C) != r3) {
      node.exact = false;
      const IntMatrix y = integer_kernel(C.transpose());
      const IntVector yv = y.column(0);
      for (std::size_t k = 0; k < r3; ++k) {
        if (yv[k] == 0) continue;
        std::vector<Rational> w(r3, Rational(0));
        w[k] = Rational(1, 2 * Int(abs(yv[k])));
        w[k].canonicalize();
        node.witness = format_vector(w);
        break;
      }
      node.detail = "j_* is not surjective";
    }
    rep.nodes.push_back(node);
  }
  for (const auto& n : rep.nodes) rep.exact = rep.exact && n.exact && n.composite_zero;
  return rep;
}

FgAbGroup tor1_as_torsion_coinvariants(const GModule& m, const SubgroupOfG& h) {
  return coinvariants(m, h).torsion_part.as_group();
}

Subgroup rationalization_kernel(const FgAbGroup& g) {
  const Lattice sat = g.relation_lattice().saturation();
  return Subgroup(g, sat.basis());
}

bool verify_h1_killed(const GModule& m, const SubgroupOfG& h, Execution exec) {
  const FgAbGroup h1 = h1_bar_complex(m, h, exec);
  if (!h1.is_finite()) return false;
  for (const auto& d : h1.invariant_factors())
    if (!divides(d, Int(static_cast<unsigned long>(h.order())))) return false;
  return true;
}

LadderMaps ladder_maps(const SixTermSequence& top, const SixTermSequence& bottom, const IntMatrix& f1,
                       const IntMatrix& f2, const IntMatrix& f3) {
  LadderMaps out;
  const IntMatrix* fs[3] = {&f1, &f2, &f3};
  for (int k = 0; k < 3; ++k) {
    const FgAbGroup& s = top.coinv[k].quotient;
    const FgAbGroup& t = bottom.coinv[k].quotient;
    try {
      Homomorphism(s, t, *fs[k]);
    } catch (const InputError& e) {
      throw InputError("vertical map f" + std::to_string(k + 1) + " does not descend to coinvariants: " + e.what());
    }
    out.tors[k] = reduce_rows(t.torsion_projection() * *fs[k] * s.torsion_generators(), t.invariant_factors());
    out.tensor[k] = t.free_projection() * *fs[k] * s.free_generators();
  }
  return out;
}

std::vector<LadderSquare> check_ladder(const SixTermSequence& top, const SixTermSequence& bottom, const IntMatrix& f1,
                                       const IntMatrix& f2, const IntMatrix& f3) {
  const LadderMaps lm = ladder_maps(top, bottom, f1, f2, f3);
  std::vector<LadderSquare> out;
  auto torsion_square = [&](const char* name, const IntMatrix& down_then_across, const IntMatrix& across_then_down,
                            const FgAbGroup& target) {
    LadderSquare sq{name, true, ""};
    for (std::size_t c = 0; c < down_then_across.cols(); ++c)
      if (!target.is_zero(down_then_across.column(c) - across_then_down.column(c))) {
        sq.commutes = false;
        sq.witness = "generator " + std::to_string(c);
        break;
      }
    out.push_back(sq);
  };
  torsion_square("(B1)_tors -> (B2)_tors", bottom.i_tors * lm.tors[0], lm.tors[1] * top.i_tors, bottom.torsion[1]);
  torsion_square("(B2)_tors -> (B3)_tors", bottom.j_tors * lm.tors[1], lm.tors[2] * top.j_tors, bottom.torsion[2]);
  {
    LadderSquare sq{"connecting map", true, ""};
    const std::size_t t3 = top.torsion[2].ambient_rank();
    const std::size_t r1 = bottom.tensor_rank[0];
    const IntMatrix lhs = zero_if_empty(bottom.delta.numerators, r1, bottom.torsion[2].ambient_rank()) * lm.tors[2];
    const IntMatrix rhs = lm.tensor[0] * zero_if_empty(top.delta.numerators, top.tensor_rank[0], t3);
    for (std::size_t c = 0; c < t3 && sq.commutes; ++c)
      for (std::size_t r = 0; r < r1; ++r)
        if (frac(Rational(lhs(r, c), bottom.delta.denominator)) != frac(Rational(rhs(r, c), top.delta.denominator))) {
          sq.commutes = false;
          sq.witness = "generator " + std::to_string(c);
          break;
        }
    out.push_back(sq);
  }
  auto tensor_square = [&](const char* name, const IntMatrix& a, const IntMatrix& b) {
    LadderSquare sq{name, a == b, a == b ? "" : "matrices differ"};
    out.push_back(sq);
  };
  tensor_square("Q/Z(B1) -> Q/Z(B2)", bottom.i_tensor * lm.tensor[0], lm.tensor[1] * top.i_tensor);
  tensor_square("Q/Z(B2) -> Q/Z(B3)", bottom.j_tensor * lm.tensor[1], lm.tensor[2] * top.j_tensor);
  return out;
}

}  // namespace glocsur
