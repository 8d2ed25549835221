#include "gradalg/algebra.hpp"

#include "gradalg/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace gradalg {

std::string to_string(AlgebraKind k) { return k == AlgebraKind::lie ? "lie" : "associative"; }

GradedAlgebra::GradedAlgebra(AlgebraKind kind, Group group, std::vector<GroupElem> degrees,
                             std::vector<Rat> structure, std::optional<Vec> unit, std::string name)
    : kind_(kind),
      group_(std::move(group)),
      dim_(degrees.size()),
      degrees_(std::move(degrees)),
      structure_(std::move(structure)),
      unit_(std::move(unit)),
      name_(std::move(name)) {
  const std::size_t d = dim_;
  if (structure_.size() != d * d * d)
    throw InvariantViolation("structure tensor has " + std::to_string(structure_.size()) +
                             " entries, expected " + std::to_string(d * d * d));
  for (std::size_t i = 0; i < d; ++i) {
    if (!group_.is_element(degrees_[i]))
      throw InvariantViolation("degree of basis vector " + std::to_string(i) + " is not a group element");
  }

  std::map<GroupElem, std::size_t> index;
  for (const auto& g : degrees_) index.emplace(g, 0);
  for (auto& [g, s] : index) {
    s = support_.size();
    support_.push_back(g);
  }
  components_.resize(support_.size());
  support_index_.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    support_index_[i] = index.at(degrees_[i]);
    components_[support_index_[i]].push_back(i);
  }

  terms_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::optional<GroupElem> gh;
      for (std::size_t k = 0; k < d; ++k) {
        const Rat& c = coef(i, j, k);
        if (sgn(c) == 0) continue;
        if (!gh) gh = group_.mul(degrees_[i], degrees_[j]);
        if (degrees_[k] != *gh)
          throw InvariantViolation("grading violated: e" + std::to_string(i) + "*e" + std::to_string(j) +
                                   " has a component on e" + std::to_string(k) + " of degree " +
                                   group_.to_string(degrees_[k]) + ", expected " + group_.to_string(*gh));
        terms_[i * d + j].push_back({k, c});
      }
    }

  auto triple = [&](std::size_t i, std::size_t j, std::size_t k, bool left_first) {
    // left_first: (e_i e_j) e_k, otherwise e_i (e_j e_k)
    Vec out(d);
    if (left_first) {
      for (const auto& [l, c] : product_terms(i, j))
        for (const auto& [m, c2] : product_terms(l, k)) out[m] += c * c2;
    } else {
      for (const auto& [l, c] : product_terms(j, k))
        for (const auto& [m, c2] : product_terms(i, l)) out[m] += c * c2;
    }
    return out;
  };

  if (kind_ == AlgebraKind::associative) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (triple(i, j, k, true) != triple(i, j, k, false))
            throw InvariantViolation("associativity fails on basis triple (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
  } else {
    if (unit_) throw InvariantViolation("a Lie algebra cannot carry a unit");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (coef(i, j, k) != -coef(j, i, k))
            throw InvariantViolation("antisymmetry fails on basis pair (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
          // [[x,y],z] + [[y,z],x] + [[z,x],y]
          Vec s = triple(i, j, k, true);
          s = add(s, triple(j, k, i, true));
          s = add(s, triple(k, i, j, true));
          if (!is_zero(s))
            throw InvariantViolation("Jacobi identity fails on basis triple (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
        }
  }

  if (unit_) {
    if (unit_->size() != d) throw InvariantViolation("unit has wrong length");
    for (std::size_t i = 0; i < d; ++i) {
      Vec e = basis_vector(i);
      if (multiply(*unit_, e) != e || multiply(e, *unit_) != e)
        throw InvariantViolation("unit does not act as identity on e" + std::to_string(i));
    }
  }
}

std::optional<std::size_t> GradedAlgebra::find_support(const GroupElem& g) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), g);
  if (it == support_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - support_.begin());
}

Vec GradedAlgebra::multiply(std::span<const Rat> a, std::span<const Rat> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      Rat ab = a[i] * b[j];
      for (const auto& [k, c] : product_terms(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

Mat GradedAlgebra::left_mult_matrix(std::span<const Rat> a) const {
  if (a.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : product_terms(i, j)) m(k, j) += a[i] * c;
  }
  return m;
}

Mat GradedAlgebra::right_mult_matrix(std::span<const Rat> a) const {
  if (a.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (sgn(a[j]) == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (const auto& [k, c] : product_terms(i, j)) m(k, i) += a[j] * c;
  }
  return m;
}

Vec GradedAlgebra::homogeneous_projection(std::span<const Rat> v, const GroupElem& g) const {
  if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (degrees_[i] == g) out[i] = v[i];
  return out;
}

bool GradedAlgebra::is_homogeneous(std::span<const Rat> v) const {
  std::optional<std::size_t> s;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(v[i]) == 0) continue;
    if (s && *s != support_index_[i]) return false;
    s = support_index_[i];
  }
  return true;
}

Subspace GradedAlgebra::component_space(const GroupElem& g) const {
  std::vector<Vec> vs;
  if (auto s = find_support(g))
    for (auto i : components_[*s]) vs.push_back(basis_vector(i));
  return Subspace::span(dim_, vs);
}

Subspace product_space(const GradedAlgebra& a, const Subspace& u, const Subspace& w) {
  EchelonBuilder b(a.dim());
  auto us = u.vectors();
  auto ws = w.vectors();
  for (const auto& x : us)
    for (const auto& y : ws) b.insert(a.multiply(x, y));
  return b.build();
}

bool is_ideal(const GradedAlgebra& a, const Subspace& w) {
  for (const auto& v : w.vectors())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec e = a.basis_vector(i);
      if (!w.contains(a.multiply(e, v)) || !w.contains(a.multiply(v, e))) return false;
    }
  return true;
}

bool is_subalgebra(const GradedAlgebra& a, const Subspace& w) {
  auto vs = w.vectors();
  for (const auto& x : vs)
    for (const auto& y : vs)
      if (!w.contains(a.multiply(x, y))) return false;
  return true;
}

Subspace ideal_generated(const GradedAlgebra& a, const std::vector<Vec>& gens) {
  EchelonBuilder b(a.dim());
  std::deque<Vec> queue;
  for (const auto& g : gens)
    if (b.insert(g)) queue.push_back(g);
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec e = a.basis_vector(i);
      Vec l = a.multiply(e, v);
      if (b.insert(l)) queue.push_back(std::move(l));
      if (!a.is_lie()) {
        Vec r = a.multiply(v, e);
        if (b.insert(r)) queue.push_back(std::move(r));
      }
    }
  }
  return b.build();
}

Subspace subalgebra_generated(const GradedAlgebra& a, const std::vector<Vec>& gens) {
  EchelonBuilder b(a.dim());
  std::vector<Vec> accepted;
  std::deque<Vec> queue;
  for (const auto& g : gens)
    if (b.insert(g)) queue.push_back(g);
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    accepted.push_back(v);
    for (const auto& u : accepted) {
      Vec x = a.multiply(u, v);
      if (b.insert(x)) queue.push_back(std::move(x));
      Vec y = a.multiply(v, u);
      if (b.insert(y)) queue.push_back(std::move(y));
    }
  }
  return b.build();
}

std::optional<std::size_t> nilpotency_index(const GradedAlgebra& a, const Subspace& w) {
  Subspace power = w;
  std::size_t k = 1;
  while (!power.is_zero()) {
    if (k > a.dim()) return std::nullopt;
    power = product_space(a, power, w);
    ++k;
  }
  return k;
}

std::vector<Subspace> derived_series(const GradedAlgebra& a, const Subspace& w) {
  std::vector<Subspace> series{w};
  while (true) {
    Subspace next = product_space(a, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

std::vector<std::size_t> homogeneous_complement(const GradedAlgebra& a, const Subspace& sub) {
  std::vector<bool> pivot(a.dim(), false);
  for (auto p : sub.pivots()) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!pivot[i]) out.push_back(i);
  return out;
}

static bool graded(const GradedAlgebra& a, const Subspace& w) {
  for (const auto& v : w.vectors())
    for (const auto& g : a.support())
      if (!w.contains(a.homogeneous_projection(v, g))) return false;
  return true;
}

Quotient quotient_with_projection(const GradedAlgebra& a, const Subspace& ideal) {
  if (ideal.ambient_dim() != a.dim()) throw std::invalid_argument("ideal lives in a different space");
  if (!is_ideal(a, ideal)) throw InvariantViolation("quotient by a subspace that is not a two-sided ideal");
  if (!graded(a, ideal)) throw InvariantViolation("quotient by an ideal that is not graded");
  auto lifted = homogeneous_complement(a, ideal);
  const std::size_t q = lifted.size();
  std::vector<std::size_t> position(a.dim(), q);
  for (std::size_t c = 0; c < q; ++c) position[lifted[c]] = c;

  Mat proj(q, a.dim());
  for (std::size_t t = 0; t < a.dim(); ++t) {
    Vec r = ideal.reduce(a.basis_vector(t));
    for (std::size_t c = 0; c < q; ++c) proj(c, t) = r[lifted[c]];
  }
  std::vector<Rat> structure(q * q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      for (const auto& [k, c] : a.product_terms(lifted[x], lifted[y]))
        for (std::size_t z = 0; z < q; ++z)
          if (sgn(proj(z, k)) != 0) structure[(x * q + y) * q + z] += c * proj(z, k);
  std::vector<GroupElem> degrees;
  for (auto c : lifted) degrees.push_back(a.degree(c));
  std::optional<Vec> unit;
  if (a.unit()) unit = proj.apply(*a.unit());
  std::string name = a.name().empty() ? std::string{} : a.name() + "/I";
  return {GradedAlgebra(a.kind(), a.group(), std::move(degrees), std::move(structure), std::move(unit),
                        std::move(name)),
          std::move(lifted), std::move(proj)};
}

GradedAlgebra quotient_algebra(const GradedAlgebra& a, const Subspace& ideal) {
  return quotient_with_projection(a, ideal).algebra;
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, std::span<const Rat> v) {
  Vec c(basis.size());
  Vec rebuilt(v.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t p = 0;
    while (sgn(basis[i][p]) == 0) ++p;
    c[i] = v[p] / basis[i][p];
    axpy(rebuilt, c[i], basis[i]);
  }
  if (!std::equal(rebuilt.begin(), rebuilt.end(), v.begin(), v.end())) return std::nullopt;
  return c;
}

std::optional<Vec> find_unit(const GradedAlgebra& a) {
  if (a.is_lie()) return std::nullopt;
  if (a.unit()) return a.unit();
  const std::size_t d = a.dim();
  if (d == 0) return Vec{};
  Mat m(2 * d * d, d);
  Vec rhs(2 * d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t r = j * d + k;
      for (std::size_t i = 0; i < d; ++i) {
        m(r, i) = a.coef(i, j, k);
        m(d * d + r, i) = a.coef(j, i, k);
      }
      rhs[r] = rhs[d * d + r] = (j == k) ? 1 : 0;
    }
  return solve(m, rhs);
}

Restriction restrict_to_subalgebra(const GradedAlgebra& a, const Subspace& w, std::string name) {
  if (!is_subalgebra(a, w)) throw InvariantViolation("subspace is not closed under the product");
  if (!graded(a, w)) throw InvariantViolation("subspace is not graded");
  std::vector<Vec> basis;
  std::vector<GroupElem> degrees;
  for (const auto& g : a.support()) {
    std::vector<Vec> proj;
    for (const auto& v : w.vectors()) proj.push_back(a.homogeneous_projection(v, g));
    Subspace comp = Subspace::span(a.dim(), proj);
    for (const auto& v : comp.vectors()) {
      basis.push_back(v);
      degrees.push_back(g);
    }
  }
  const std::size_t q = basis.size();
  std::vector<Rat> structure(q * q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      auto c = coordinates_in(basis, a.multiply(basis[x], basis[y]));
      if (!c) throw InvariantViolation("product left the subalgebra");
      for (std::size_t z = 0; z < q; ++z) structure[(x * q + y) * q + z] = (*c)[z];
    }
  GradedAlgebra sub(a.kind(), a.group(), degrees, structure, std::nullopt, name);
  if (!a.is_lie()) {
    std::optional<Vec> unit;
    if (a.unit() && w.contains(*a.unit()))
      unit = coordinates_in(basis, *a.unit());
    else
      unit = find_unit(sub);
    if (unit) sub = GradedAlgebra(a.kind(), a.group(), std::move(degrees), std::move(structure), unit, name);
  }
  return {std::move(sub), std::move(basis)};
}

GradedAlgebra unitalization(const GradedAlgebra& a) {
  if (a.is_lie()) throw std::invalid_argument("unitalization of a Lie algebra");
  const std::size_t d = a.dim() + 1;
  std::vector<Rat> s(d * d * d);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rat& { return s[(i * d + j) * d + k]; };
  for (std::size_t j = 0; j < d; ++j) {
    at(0, j, j) = 1;
    at(j, 0, j) = 1;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product_terms(i, j)) at(i + 1, j + 1, k + 1) = c;
  std::vector<GroupElem> degrees{a.group().identity()};
  degrees.insert(degrees.end(), a.degrees().begin(), a.degrees().end());
  return GradedAlgebra(AlgebraKind::associative, a.group(), std::move(degrees), std::move(s), unit_vec(d, 0),
                       a.name().empty() ? std::string{} : a.name() + "#");
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b, std::string name) {
  if (!(a.group() == b.group())) throw std::invalid_argument("direct sum of algebras graded by different groups");
  if (a.kind() != b.kind()) throw std::invalid_argument("direct sum of algebras of different kinds");
  const std::size_t da = a.dim(), d = a.dim() + b.dim();
  std::vector<Rat> s(d * d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (const auto& [k, c] : a.product_terms(i, j)) s[(i * d + j) * d + k] = c;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (const auto& [k, c] : b.product_terms(i, j)) s[((i + da) * d + j + da) * d + k + da] = c;
  std::vector<GroupElem> degrees = a.degrees();
  degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
  std::optional<Vec> unit;
  if (a.unit() && b.unit()) {
    unit = *a.unit();
    unit->insert(unit->end(), b.unit()->begin(), b.unit()->end());
  }
  if (name.empty() && !a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  return GradedAlgebra(a.kind(), a.group(), std::move(degrees), std::move(s), std::move(unit), std::move(name));
}

GradedAlgebra commutator_algebra(const GradedAlgebra& a, std::string name) {
  if (a.is_lie()) throw std::invalid_argument("commutator algebra of a Lie algebra");
  const std::size_t d = a.dim();
  std::vector<Rat> s(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) s[(i * d + j) * d + k] = a.coef(i, j, k) - a.coef(j, i, k);
  return GradedAlgebra(AlgebraKind::lie, a.group(), a.degrees(), std::move(s), std::nullopt, std::move(name));
}

GradedAlgebra with_trivial_grading(const GradedAlgebra& a) {
  Group t = Group::trivial();
  std::vector<GroupElem> degrees(a.dim(), t.identity());
  return GradedAlgebra(a.kind(), t, std::move(degrees), a.structure(), a.unit(), a.name());
}

} // namespace gradalg
