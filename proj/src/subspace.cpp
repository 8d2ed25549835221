#include "gradalg/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gradalg {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) { return row_space(Mat::identity(ambient_dim)); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  return row_space(Mat::from_rows(ambient_dim, vectors));
}

Subspace Subspace::row_space(const Mat& m) {
  RrefResult r = rref(m);
  Subspace s(m.cols());
  s.basis_ = Mat(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = r.matrix(i, j);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

Vec Subspace::reduce(std::span<const Rat> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rat f = r[pivots_[i]];
    if (sgn(f) == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (sgn(row[j]) != 0) r[j] -= f * row[j];
  }
  return r;
}

bool Subspace::contains(std::span<const Rat> v) const { return gradalg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(std::span<const Rat> v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  auto rows = a.vectors();
  auto more = b.vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  Mat z(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z(i, j) = a.basis()(i, j);
      z(i, n + j) = a.basis()(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis()(i, j);
  RrefResult r = rref(std::move(z));
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r.rank; ++i)
    if (r.pivots[i] >= n) {
      auto row = r.matrix.row(i);
      rows.emplace_back(row.begin() + n, row.end());
    }
  return Subspace::span(n, rows);
}

EchelonBuilder::EchelonBuilder(const Subspace& start) : ambient_(start.ambient_dim()) {
  rows_ = start.vectors();
  pivots_ = start.pivots();
}

Vec EchelonBuilder::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat f = v[pivots_[i]];
    if (sgn(f) == 0) continue;
    const Vec& row = rows_[i];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
  return v;
}

bool EchelonBuilder::insert(Vec v) {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && sgn(v[p]) == 0) ++p;
  if (p == ambient_) return false;
  Rat inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  for (auto& row : rows_) {
    Rat f = row[p];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(v[j]) != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Subspace EchelonBuilder::build() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return pivots_[x] < pivots_[y]; });
  std::vector<Vec> sorted;
  for (auto i : order) sorted.push_back(rows_[i]);
  return Subspace::span(ambient_, sorted);
}

} // namespace gradalg
