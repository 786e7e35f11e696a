#pragma once

#include "glocsur/int_matrix.hpp"

#include <random>

namespace testing_support {

using glocsur::Int;
using glocsur::IntMatrix;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

/// Random unimodular matrix together with its inverse.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 8) {
  IntMatrix w = IntMatrix::identity(n), winv = IntMatrix::identity(n);
  if (n < 2) return {w, winv};
  for (int s = 0; s < steps; ++s) {
    std::size_t a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (b >= a) ++b;
    Int k = uniform(rng, -2, 2);
    w.add_row_multiple(a, b, k);
    winv.add_column_multiple(b, a, -k);
  }
  return {w, winv};
}

}  // namespace testing_support
