#include "glocsur/normal_form.hpp"

#include <utility>

namespace glocsur {

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  const std::size_t m = std::min(D.rows(), D.cols());
  d.reserve(m);
  for (std::size_t k = 0; k < m; ++k) d.push_back(D(k, k));
  return d;
}

namespace {

// Row op on D mirrored into U and U_inv: row dst += k * row src.
void row_add(SmithForm& f, std::size_t dst, std::size_t src, const Int& k) {
  f.D.add_row_multiple(dst, src, k);
  f.U.add_row_multiple(dst, src, k);
  f.U_inv.add_column_multiple(src, dst, -k);
}

void row_swap(SmithForm& f, std::size_t a, std::size_t b) {
  f.D.swap_rows(a, b);
  f.U.swap_rows(a, b);
  f.U_inv.swap_columns(a, b);
}

void row_negate(SmithForm& f, std::size_t r) {
  f.D.negate_row(r);
  f.U.negate_row(r);
  f.U_inv.negate_column(r);
}

void col_add(SmithForm& f, std::size_t dst, std::size_t src, const Int& k) {
  f.D.add_column_multiple(dst, src, k);
  f.V.add_column_multiple(dst, src, k);
}

void col_swap(SmithForm& f, std::size_t a, std::size_t b) {
  f.D.swap_columns(a, b);
  f.V.swap_columns(a, b);
}

Int truncated_quotient(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm f{IntMatrix::identity(m), IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the active block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Int& x = f.D(i, j);
          if (x == 0) continue;
          if (pi == m || mpz_cmpabs(x.get_mpz_t(), f.D(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        f.rank = t;
        return f;
      }
      row_swap(f, t, pi);
      col_swap(f, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (f.D(i, t) == 0) continue;
        row_add(f, i, t, -truncated_quotient(f.D(i, t), f.D(t, t)));
        if (f.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (f.D(t, j) == 0) continue;
        col_add(f, j, t, -truncated_quotient(f.D(t, j), f.D(t, t)));
        if (f.D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(f.D(t, t), f.D(i, j))) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      row_add(f, t, bad_row, 1);
    }
    if (f.D(t, t) < 0) row_negate(f, t);
  }
  f.rank = 0;
  for (std::size_t t = 0; t < steps; ++t)
    if (f.D(t, t) != 0) f.rank = t + 1;
  return f;
}

namespace {

ColumnHermiteForm hermite_impl(const IntMatrix& a, bool want_transform) {
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  IntMatrix h = a;
  IntMatrix w = want_transform ? IntMatrix::identity(k) : IntMatrix();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;

  auto combine = [&](std::size_t c1, std::size_t c2, const Int& s, const Int& t, const Int& u,
                     const Int& v) {
    // (col c1, col c2) <- (s*c1 + t*c2, u*c1 + v*c2), with s*v - t*u = 1.
    auto apply = [&](IntMatrix& mat) {
      for (std::size_t row = 0; row < mat.rows(); ++row) {
        Int x = mat(row, c1);
        Int y = mat(row, c2);
        mat(row, c1) = s * x + t * y;
        mat(row, c2) = u * x + v * y;
      }
    };
    apply(h);
    if (want_transform) apply(w);
  };

  for (std::size_t i = 0; i < n && r < k; ++i) {
    for (std::size_t c = r + 1; c < k; ++c) {
      if (h(i, c) == 0) continue;
      if (h(i, r) == 0) {
        h.swap_columns(r, c);
        if (want_transform) w.swap_columns(r, c);
        continue;
      }
      if (divides(h(i, r), h(i, c))) {
        Int q = h(i, c) / h(i, r);
        h.add_column_multiple(c, r, -q);
        if (want_transform) w.add_column_multiple(c, r, -q);
        continue;
      }
      Int a_ir = h(i, r);
      Int b_ic = h(i, c);
      ExtendedGcd e = extended_gcd(a_ir, b_ic);
      combine(r, c, e.s, e.t, -b_ic / e.g, a_ir / e.g);
    }
    if (h(i, r) == 0) continue;
    if (h(i, r) < 0) {
      h.negate_column(r);
      if (want_transform) w.negate_column(r);
    }
    for (std::size_t c = 0; c < r; ++c) {
      Int q = floor_div(h(i, c), h(i, r));
      if (q == 0) continue;
      h.add_column_multiple(c, r, -q);
      if (want_transform) w.add_column_multiple(c, r, -q);
    }
    pivots.push_back(i);
    ++r;
  }
  ColumnHermiteForm f;
  f.H = h.columns(0, r);
  f.W = std::move(w);
  f.pivot_rows = std::move(pivots);
  f.rank = r;
  return f;
}

}  // namespace

ColumnHermiteForm column_hermite_form(const IntMatrix& a) { return hermite_impl(a, true); }

Lattice::Lattice(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(ambient_rank, 0) {}

Lattice::Lattice(const IntMatrix& generators) : ambient_(generators.rows()) {
  ColumnHermiteForm f = hermite_impl(generators, false);
  basis_ = std::move(f.H);
  pivots_ = std::move(f.pivot_rows);
}

IntVector Lattice::reduce(IntVector v) const {
  if (v.size() != ambient_) throw InvariantViolation("lattice reduce: length mismatch");
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    const std::size_t p = pivots_[j];
    Int q = floor_div(v[p], basis_(p, j));
    if (q == 0) continue;
    for (std::size_t r = p; r < ambient_; ++r) v[r] -= q * basis_(r, j);
  }
  return v;
}

bool Lattice::contains(const IntVector& v) const { return is_zero(reduce(v)); }

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) throw InvariantViolation("lattice containment: ambient mismatch");
  for (std::size_t c = 0; c < other.rank(); ++c)
    if (!contains(other.basis_.column(c))) return false;
  return true;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw InvariantViolation("lattice coordinates: length mismatch");
  IntVector rest = v;
  IntVector coeff(pivots_.size());
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    const std::size_t p = pivots_[j];
    if (!divides(basis_(p, j), rest[p])) return std::nullopt;
    coeff[j] = rest[p] / basis_(p, j);
    for (std::size_t r = p; r < ambient_; ++r) rest[r] -= coeff[j] * basis_(r, j);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeff;
}

Lattice Lattice::operator+(const Lattice& other) const {
  if (other.ambient_ != ambient_) throw InvariantViolation("lattice sum: ambient mismatch");
  return Lattice(hstack(basis_, other.basis_));
}

Lattice Lattice::intersect(const Lattice& other) const {
  if (other.ambient_ != ambient_) throw InvariantViolation("lattice intersection: ambient mismatch");
  if (rank() == 0 || other.rank() == 0) return Lattice(ambient_);
  IntMatrix joint = hstack(basis_, Int(-1) * other.basis_);
  IntMatrix ker = integer_kernel(joint);
  IntMatrix gens = basis_ * ker.row_block(0, rank());
  if (gens.cols() == 0) return Lattice(ambient_);
  return Lattice(gens);
}

Lattice Lattice::saturation() const {
  if (rank() == 0) return *this;
  SmithForm s = smith_normal_form(basis_);
  return Lattice(s.U_inv.columns(0, s.rank));
}

IntMatrix integer_kernel(const IntMatrix& a) {
  ColumnHermiteForm f = hermite_impl(a, true);
  return f.W.columns(f.rank, a.cols() - f.rank);
}

IntegerSolver::IntegerSolver(const IntMatrix& a) : unknowns_(a.cols()) {
  form_ = hermite_impl(a, true);
  image_ = Lattice(form_.H);
  kernel_ = form_.W.columns(form_.rank, unknowns_ - form_.rank);
}

std::optional<IntVector> IntegerSolver::solve(const IntVector& b) const {
  // image_ was rebuilt from H, which is already in Hermite form, so its basis
  // coincides with H column for column.
  std::optional<IntVector> c = image_.coordinates(b);
  if (!c) return std::nullopt;
  IntVector x(unknowns_);
  for (std::size_t j = 0; j < form_.rank; ++j) {
    if ((*c)[j] == 0) continue;
    for (std::size_t r = 0; r < unknowns_; ++r) x[r] += form_.W(r, j) * (*c)[j];
  }
  return x;
}

std::size_t rational_rank(const IntMatrix& a) { return hermite_impl(a, false).rank; }

}  // namespace glocsur
