#pragma once

#include "gradalg/matrix.hpp"

#include <optional>
#include <vector>

namespace gradalg {

/// Linear subspace of Q^n stored by its reduced row-echelon basis, so equal
/// subspaces compare equal regardless of the spanning set they came from.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace row_space(const Mat& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> vectors() const;

  /// v minus its component along the pivots; zero iff v is in the subspace.
  Vec reduce(std::span<const Rat> v) const;
  bool contains(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to basis(), or nullopt if v is outside.
  std::optional<Vec> coordinates(std::span<const Rat> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
/// Zassenhaus: row-reduce [[a a];[b 0]] and read the rows with zero left half.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Incrementally grown echelon basis, kept fully reduced. Used by closure loops.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  explicit EchelonBuilder(const Subspace& start);

  /// Reduces v in place; returns true if v was outside the span and got added.
  bool insert(Vec v);
  Vec reduce(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Subspace build() const;

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace gradalg
