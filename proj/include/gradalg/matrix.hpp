#pragma once

#include "gradalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gradalg {

using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rat> v);
Vec add(std::span<const Rat> a, std::span<const Rat> b);
Vec sub(std::span<const Rat> a, std::span<const Rat> b);
Vec scale(std::span<const Rat> a, const Rat& s);
// y += s * x
void axpy(Vec& y, const Rat& s, std::span<const Rat> x);

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  static Mat identity(std::size_t n);
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rat> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const;
  Vec col_vec(std::size_t j) const;

  Mat transpose() const;
  Rat trace() const;
  Vec apply(std::span<const Rat> v) const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RrefResult {
  Mat matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan with the leftmost nonzero column as pivot.
RrefResult rref(Mat m);

/// Rank by forward elimination on whichever orientation has fewer rows.
std::size_t rank(const Mat& m);

Rat determinant(Mat m);

class Subspace;
Subspace kernel(const Mat& m);

/// Solves m x = rhs. Free variables are set to zero; nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, std::span<const Rat> rhs);

} // namespace gradalg
