// Independent reference computations used only by tests. Nothing here calls
// into the Smith/Hermite code paths it is used to check; where a group needs
// canonical representatives the caller passes the reduction in.
#pragma once

#include "glocsur/int_matrix.hpp"

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using glocsur::Int;
using glocsur::IntMatrix;
using glocsur::IntVector;

inline void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Cofactor-expansion determinant (small matrices only).
inline Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t cc = 0; cc < n; ++cc)
      if (cc != c) cols.push_back(cc);
    Int minor = cofactor_det(m.select_rows(rows).select_columns(cols));
    total += ((c % 2) ? -1 : 1) * m(0, c) * minor;
  }
  return total;
}

/// Invariant factors via determinantal divisors: d_1...d_i = gcd of i x i minors.
inline std::vector<Int> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<Int> divisors{Int(1)};
  const std::size_t kmax = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Int g = 0;
    combinations(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      combinations(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        Int d = cofactor_det(a.select_rows(rows).select_columns(cols));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    divisors.push_back(g);
  }
  std::vector<Int> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    if (divisors[k] == 0) {
      out.push_back(0);
      continue;
    }
    out.push_back(divisors[k] / divisors[k - 1]);
  }
  return out;
}

using Residue = std::vector<long>;

/// Closure of a set of generators inside (Z/N)^n, by breadth-first search.
inline std::set<Residue> span_mod(std::size_t n, long N, const std::vector<Residue>& gens) {
  std::set<Residue> seen{Residue(n, 0)};
  std::vector<Residue> frontier{Residue(n, 0)};
  while (!frontier.empty()) {
    std::vector<Residue> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        Residue w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = ((v[i] + g[i]) % N + N) % N;
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline Residue to_residue(const IntVector& v, long N) {
  Residue r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int x = v[i] % N;
    if (x < 0) x += N;
    r[i] = x.get_si();
  }
  return r;
}

inline long ipow(long b, std::size_t e) {
  long r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

/// |Z^n / L| computed by enumerating L inside (Z/N)^n, given N Z^n subset of L.
inline long quotient_order_mod(std::size_t n, long N, const std::vector<IntVector>& lattice_gens) {
  std::vector<Residue> gens;
  for (const auto& g : lattice_gens) gens.push_back(to_residue(g, N));
  auto span = span_mod(n, N, gens);
  return ipow(N, n) / static_cast<long>(span.size());
}

}  // namespace oracle

namespace oracle {

/// Number of x in (Z/N)^n / S with k x = 0, where S is spanned by `gens`
/// mod N. Enumerates all of (Z/N)^n.
inline long killed_count(std::size_t n, long N, const std::vector<IntVector>& gens, long k) {
  std::vector<Residue> res;
  for (const auto& g : gens) res.push_back(to_residue(g, N));
  const auto span = span_mod(n, N, res);
  const long total = ipow(N, n);
  long hits = 0;
  Residue x(n, 0), kx(n);
  for (long idx = 0; idx < total; ++idx) {
    long t = idx;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = t % N;
      t /= N;
    }
    for (std::size_t i = 0; i < n; ++i) kx[i] = (k * x[i]) % N;
    if (span.count(kx)) ++hits;
  }
  return hits / static_cast<long>(span.size());
}

/// Number of x in (Z/N)^n with A x in S (mod N).
inline long preimage_count(std::size_t n, long N, const IntMatrix& a, const std::vector<IntVector>& gens) {
  std::vector<Residue> res;
  for (const auto& g : gens) res.push_back(to_residue(g, N));
  const auto span = span_mod(n, N, res);
  const long total = ipow(N, n);
  long hits = 0;
  for (long idx = 0; idx < total; ++idx) {
    IntVector x(n);
    long t = idx;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = t % N;
      t /= N;
    }
    if (span.count(to_residue(a * x, N))) ++hits;
  }
  return hits;
}

}  // namespace oracle

namespace oracle {

using glocsur::Rational;

/// Schoolbook product.
inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

/// Rank over Q by fraction-based Gaussian elimination.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// All tuples x with 0 <= x_i < moduli[i]; calls f on each. Returns false
/// without calling f when there are more than `cap` tuples.
inline bool for_each_tuple(const std::vector<long>& moduli, long cap, const std::function<void(const Residue&)>& f) {
  long total = 1;
  for (long m : moduli) {
    total *= m;
    if (total > cap) return false;
  }
  Residue x(moduli.size(), 0);
  for (long idx = 0; idx < total; ++idx) {
    long t = idx;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      x[i] = t % moduli[i];
      t /= moduli[i];
    }
    f(x);
  }
  return true;
}

inline Residue apply_mod(const IntMatrix& a, const Residue& x, const std::vector<long>& moduli) {
  Residue y(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Int s = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * x[c];
    Int m = s % moduli[r];
    if (m < 0) m += moduli[r];
    y[r] = m.get_si();
  }
  return y;
}

using QVec = std::vector<Rational>;

inline QVec frac_vec(const QVec& v) {
  QVec out;
  for (const auto& q : v) {
    Rational f = q;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    f -= fl;
    f.canonicalize();
    out.push_back(f);
  }
  return out;
}

/// A x mod 1 for a rational vector x.
inline QVec apply_q(const IntMatrix& a, const QVec& x) {
  QVec y(a.rows(), Rational(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) y[r] += Rational(a(r, c)) * x[c];
  return frac_vec(y);
}

inline bool is_zero_q(const QVec& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

/// Closure under addition mod 1 of a set of rational vectors.
inline std::set<QVec> span_q(std::size_t n, const std::vector<QVec>& gens, std::size_t cap) {
  std::set<QVec> seen{QVec(n, Rational(0))};
  std::vector<QVec> frontier{QVec(n, Rational(0))};
  while (!frontier.empty() && seen.size() <= cap) {
    std::vector<QVec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        QVec w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = v[i] + g[i];
        w = frac_vec(w);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Closure under addition of generators in a group given by a canonical
/// reduction map. Empty optional when more than `cap` elements appear.
inline std::optional<std::set<IntVector>> span_reduced(const std::vector<IntVector>& gens, std::size_t n,
                                                       const std::function<IntVector(const IntVector&)>& reduce,
                                                       std::size_t cap) {
  const IntVector zero = reduce(IntVector(n));
  std::set<IntVector> seen{zero};
  std::vector<IntVector> frontier{zero};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        IntVector w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = v[i] + g[i];
        w = reduce(w);
        if (seen.insert(w).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

/// |G / [G, G]| from a multiplication table, by closing the commutators.
inline std::size_t abelianization_order(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = t.size();
  auto inv = [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b)
      if (t[a][b] == 0) return b;
    return n;
  };
  std::set<std::size_t> sub{0};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) sub.insert(t[t[inv(a)][inv(b)]][t[a][b]]);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t x : std::vector<std::size_t>(sub.begin(), sub.end()))
      for (std::size_t y : std::vector<std::size_t>(sub.begin(), sub.end()))
        grew = sub.insert(t[x][y]).second || grew;
  }
  return n / sub.size();
}

}  // namespace oracle
