#pragma once

#include "gradalg/group.hpp"
#include "gradalg/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradalg {

enum class AlgebraKind { associative, lie };

std::string to_string(AlgebraKind k);

/// Nonzero structure constant: e_i * e_j has coefficient `coef` on e_k.
struct ProductTerm {
  std::size_t k;
  Rat coef;
};

/// Finite-dimensional algebra over Q given by structure constants, each basis
/// vector homogeneous of a group degree. The constructor checks grading
/// compatibility, associativity (or antisymmetry and Jacobi) and the unit, and
/// throws InvariantViolation on failure. Immutable afterwards.
class GradedAlgebra {
 public:
  /// `structure` is dense with index (i * dim + j) * dim + k.
  GradedAlgebra(AlgebraKind kind, Group group, std::vector<GroupElem> degrees,
                std::vector<Rat> structure, std::optional<Vec> unit = std::nullopt,
                std::string name = {});

  std::size_t dim() const { return dim_; }
  AlgebraKind kind() const { return kind_; }
  bool is_lie() const { return kind_ == AlgebraKind::lie; }
  const Group& group() const { return group_; }
  const std::string& name() const { return name_; }
  const std::optional<Vec>& unit() const { return unit_; }

  const std::vector<GroupElem>& degrees() const { return degrees_; }
  const GroupElem& degree(std::size_t i) const { return degrees_[i]; }

  /// Distinct degrees of basis vectors, sorted by canonical code.
  const std::vector<GroupElem>& support() const { return support_; }
  /// Index into support() of the degree of basis vector i.
  std::size_t support_index(std::size_t i) const { return support_index_[i]; }
  std::optional<std::size_t> find_support(const GroupElem& g) const;
  /// Basis indices whose degree is support()[s].
  const std::vector<std::size_t>& component(std::size_t s) const { return components_[s]; }

  const Rat& coef(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rat>& structure() const { return structure_; }
  const std::vector<ProductTerm>& product_terms(std::size_t i, std::size_t j) const {
    return terms_[i * dim_ + j];
  }

  Vec basis_vector(std::size_t i) const { return unit_vec(dim_, i); }
  /// Bilinear product (the bracket for Lie algebras).
  Vec multiply(std::span<const Rat> a, std::span<const Rat> b) const;
  /// Matrix of b -> a*b (ad a for Lie algebras).
  Mat left_mult_matrix(std::span<const Rat> a) const;
  Mat right_mult_matrix(std::span<const Rat> a) const;
  /// Zeroes coordinates of basis vectors whose degree differs from g.
  Vec homogeneous_projection(std::span<const Rat> v, const GroupElem& g) const;
  bool is_homogeneous(std::span<const Rat> v) const;

  Subspace whole() const { return Subspace::full(dim_); }
  /// A^(g) as a subspace (zero if g is outside the support).
  Subspace component_space(const GroupElem& g) const;

 private:
  AlgebraKind kind_;
  Group group_;
  std::size_t dim_;
  std::vector<GroupElem> degrees_;
  std::vector<Rat> structure_;
  std::vector<std::vector<ProductTerm>> terms_;
  std::optional<Vec> unit_;
  std::string name_;
  std::vector<GroupElem> support_;
  std::vector<std::size_t> support_index_;
  std::vector<std::vector<std::size_t>> components_;
};

/// span{u * w : u in U, w in W}.
Subspace product_space(const GradedAlgebra& a, const Subspace& u, const Subspace& w);
bool is_ideal(const GradedAlgebra& a, const Subspace& w);
bool is_subalgebra(const GradedAlgebra& a, const Subspace& w);
/// Smallest two-sided ideal containing gens.
Subspace ideal_generated(const GradedAlgebra& a, const std::vector<Vec>& gens);
/// Smallest subspace containing gens and closed under the product.
Subspace subalgebra_generated(const GradedAlgebra& a, const std::vector<Vec>& gens);

/// Smallest p with W^p = 0 (W^1 = W, W^{k+1} = W^k W); nullopt if W^{dim+1} != 0.
std::optional<std::size_t> nilpotency_index(const GradedAlgebra& a, const Subspace& w);
/// Lie: W, [W,W], [[W,W],[W,W]], ... until it stabilises. Last entry repeats the limit.
std::vector<Subspace> derived_series(const GradedAlgebra& a, const Subspace& w);

/// Indices of the basis vectors off the pivot columns of `sub`; they span a complement.
/// Standard basis vectors are homogeneous, so the complement is graded.
std::vector<std::size_t> homogeneous_complement(const GradedAlgebra& a, const Subspace& sub);

struct Quotient {
  GradedAlgebra algebra;
  std::vector<std::size_t> lifted_basis; // basis vector of A lifting quotient basis vector i
  Mat projection;                        // dim(A/I) x dim(A), the natural map
};

/// A/I for a graded two-sided ideal I. Throws InvariantViolation otherwise.
Quotient quotient_with_projection(const GradedAlgebra& a, const Subspace& ideal);
GradedAlgebra quotient_algebra(const GradedAlgebra& a, const Subspace& ideal);

/// Graded subalgebra W as an algebra in its own right, on a homogeneous basis.
struct Restriction {
  GradedAlgebra algebra;
  std::vector<Vec> basis; // basis of W in A, one per basis vector of `algebra`
};
Restriction restrict_to_subalgebra(const GradedAlgebra& a, const Subspace& w, std::string name = {});

/// F*1 + A with the new unit as basis vector 0, degree identity.
GradedAlgebra unitalization(const GradedAlgebra& a);
GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b, std::string name = {});
/// [x, y] = xy - yx on an associative algebra.
GradedAlgebra commutator_algebra(const GradedAlgebra& a, std::string name = {});
/// Same structure, degrees pushed through a relabelling (used to regrade trivially).
GradedAlgebra with_trivial_grading(const GradedAlgebra& a);

} // namespace gradalg

namespace gradalg {

/// Two-sided identity of an associative algebra if it has one (solved for, not read off).
std::optional<Vec> find_unit(const GradedAlgebra& a);

/// Coordinates of v in a list of basis vectors that is in echelon form over
/// disjoint pivot columns (as produced by restrict_to_subalgebra).
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, std::span<const Rat> v);

} // namespace gradalg
