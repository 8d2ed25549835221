#pragma once

#include "gradalg/matrix.hpp"

#include <random>

namespace testing_support {

using gradalg::Mat;
using gradalg::Rat;
using gradalg::Vec;

inline Rat small_rat(std::mt19937& rng, int span = 3) {
  long p = static_cast<long>(rng() % (2 * span + 1)) - span;
  long q = 1 + static_cast<long>(rng() % 3);
  return gradalg::make_rat(p, q);
}

inline Vec random_vec(std::mt19937& rng, std::size_t n, int span = 3) {
  Vec v(n);
  for (auto& x : v) x = small_rat(rng, span);
  return v;
}

// Random matrix of the requested rank (at most), as a product of two random factors.
inline Mat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  Mat a(rows, inner), b(inner, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < inner; ++j) a(i, j) = small_rat(rng);
  for (std::size_t i = 0; i < inner; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = small_rat(rng);
  return a * b;
}

inline std::vector<Vec> rows_of(const Mat& m) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vec(i));
  return out;
}

} // namespace testing_support
