#pragma once

#include "gradalg/algebra.hpp"

#include <string>
#include <vector>

namespace gradalg {

enum class DecompositionKind { wedderburn_artin, malcev, levi };

struct GradedDecomposition {
  DecompositionKind kind;
  std::vector<Subspace> components;
};

/// Semisimple unital associative A as a direct sum of graded-simple graded
/// ideals. Each component is found by descending through graded ideals
/// generated by homogeneous elements (and, when those all generate the whole
/// ideal, by central elements of degree e minus a rational eigenvalue); the
/// rest of A is the two-sided annihilator of the component.
/// Throws InvariantViolation if A is not unital or not semisimple.
GradedDecomposition wedderburn_artin_graded(const GradedAlgebra& a);

/// Graded ideal B of A is graded-simple: every homogeneous basis vector of B
/// generates B, and the degree-e centre of B is a field.
bool is_graded_simple(const GradedAlgebra& a, const Subspace& b);

/// Center of the graded ideal B intersected with A^(e).
Subspace graded_center(const GradedAlgebra& a, const Subspace& b);

/// Graded subalgebra B with A = B + J(A) (direct), by lifting a homogeneous
/// section of A -> A/J and correcting it modulo J^2, J^4, ...
GradedDecomposition malcev_decomposition(const GradedAlgebra& a);
Subspace malcev_complement_graded(const GradedAlgebra& a);

/// Graded Levi subalgebra B with L = B + R, lifted along the derived series of R.
GradedDecomposition levi_decomposition(const GradedAlgebra& l);
Subspace levi_graded(const GradedAlgebra& l);

struct ComplementCheck {
  bool subalgebra = false;
  bool graded = false;
  bool direct = false;         // B meets the radical in 0
  bool spans = false;          // B + radical is everything
  bool multiplicative = false; // the section A/rad -> B is an algebra map
  bool semisimple = false;     // J(B) = 0, or Killing form of B nondegenerate for Lie
  bool ok() const { return subalgebra && graded && direct && spans && multiplicative && semisimple; }
};
ComplementCheck check_complement(const GradedAlgebra& a, const Subspace& b, const Subspace& radical);

struct DecompositionCheck {
  bool direct = false;             // dimensions add up and the sum is everything
  bool graded = false;
  bool ideals = false;
  bool orthogonal = false;         // B_i B_j = 0 for i != j
  bool graded_simple = false;
  bool ok() const { return direct && graded && ideals && orthogonal && graded_simple; }
};
DecompositionCheck check_wedderburn_artin(const GradedAlgebra& a, const GradedDecomposition& d);

std::string to_string(DecompositionKind k);

} // namespace gradalg
