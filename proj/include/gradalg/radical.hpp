#pragma once

#include "gradalg/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradalg {

/// J(A) as the kernel of the trace form (a, b) -> tr(Phi(ab)), computed on the
/// unitalization when A has no unit. Valid over Q (characteristic 0).
Subspace jacobson_radical(const GradedAlgebra& a);

/// sum_g pi_g(W).
Subspace graded_closure(const Subspace& w, const GradedAlgebra& a);
bool is_graded_subspace(const Subspace& w, const GradedAlgebra& a);
/// A homogeneous component pi_g(w) of some basis vector w that lies outside W.
std::optional<Vec> graded_witness(const Subspace& w, const GradedAlgebra& a);

/// kappa(x, y) = tr(ad x ad y) on the basis.
Mat killing_form(const GradedAlgebra& l);
/// Killing-orthogonal complement of [L, L].
Subspace solvable_radical(const GradedAlgebra& l);
/// Preimage under ad of the Jacobson radical of the associative envelope of ad L.
Subspace nilradical(const GradedAlgebra& l);
/// The associative subalgebra of End(L) generated by ad L, as an algebra on a
/// basis of matrices (flattened row-major), trivially graded.
struct AdjointEnvelope {
  GradedAlgebra algebra;
  std::vector<Vec> basis; // each of length dim(L)^2
};
AdjointEnvelope adjoint_envelope(const GradedAlgebra& l);

struct RadicalReport {
  std::string label; // "J", "R" or "N"
  Subspace radical;
  bool graded = false;
  bool hstar_closed = false;
  bool is_ideal = false;
  std::optional<std::size_t> nilpotency_index;
  std::optional<Vec> witness;
};

struct TheoremCheck {
  std::string name;
  bool passed = false;
};

struct TheoremReport {
  std::vector<RadicalReport> radicals;
  std::vector<TheoremCheck> checks;
  bool all_passed() const;
};

RadicalReport radical_report(const std::string& label, const Subspace& radical, const GradedAlgebra& a);

/// Computes the radicals of A (J) or L (R and N) and checks them: graded,
/// closed under H^*, ideals; J nilpotent with A/J semisimple; for Lie algebras
/// N inside R, R solvable, N nilpotent and [L, R] inside N.
TheoremReport verify_paper_theorems(const GradedAlgebra& a);

} // namespace gradalg
