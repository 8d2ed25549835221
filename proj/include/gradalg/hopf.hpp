#pragma once

#include "gradalg/algebra.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gradalg {

/// Element of (FG)^* known through finitely many nonzero values h(g).
/// Values outside the stored map are zero.
class DualFunctional {
 public:
  DualFunctional() = default;

  static DualFunctional delta(const GroupElem& g);
  /// Value 1 on each listed element. On the support of an algebra this acts
  /// as the counit (identity operator).
  static DualFunctional ones(const std::vector<GroupElem>& on);

  Rat operator()(const GroupElem& g) const;
  void set(const GroupElem& g, Rat value);
  const std::map<GroupElem, Rat>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  /// q -> h(g q), as a functional.
  DualFunctional translate(const Group& group, const GroupElem& g) const;

  friend DualFunctional operator+(const DualFunctional& a, const DualFunctional& b);
  friend DualFunctional operator*(const Rat& s, const DualFunctional& a);
  friend bool operator==(const DualFunctional&, const DualFunctional&) = default;

 private:
  std::map<GroupElem, Rat> values_; // no zero values stored
};

/// Finite piece H_1 of H = FG through which the coaction of A factors:
/// the support, its pairwise products, and inverses of all of those.
class CoalgebraWindow {
 public:
  CoalgebraWindow(const Group& group, const std::vector<GroupElem>& support);
  static CoalgebraWindow of(const GradedAlgebra& a) { return CoalgebraWindow(a.group(), a.support()); }

  const Group& group() const { return group_; }
  const std::vector<GroupElem>& basis() const { return basis_; }
  bool contains(const GroupElem& g) const;
  /// Whether g*h lies in the window again.
  bool product_closed(const GroupElem& g, const GroupElem& h) const;
  /// Antipode on group-likes.
  GroupElem antipode(const GroupElem& g) const { return group_.inv(g); }
  /// Counit on group-likes is 1; on the window it is evaluation at the identity
  /// of the dual pairing, i.e. epsilon(g) = 1 for every basis element.
  Rat counit(const GroupElem&) const { return 1; }

 private:
  Group group_;
  std::vector<GroupElem> basis_; // sorted
};

/// h^* a = sum_g h(g) pi_g(a).
Vec dual_action(const DualFunctional& h, std::span<const Rat> v, const GradedAlgebra& a);

/// Right-hand side of the generalized action law
///   h(ab) = sum_{j,k} h(g_j g_k) (pi_{g_j} a)(pi_{g_k} b).
Vec generalized_action_expansion(const DualFunctional& h, std::span<const Rat> x, std::span<const Rat> y,
                                 const GradedAlgebra& a);

using XiPair = std::pair<DualFunctional, DualFunctional>;

/// Pairs (h', h'') with h(g q) = sum_i h'_i(g) h''_i(q) for all g, q in the window:
/// (delta_g, translate_g(h)) for every window element g whose translate is nonzero.
std::vector<XiPair> xi_decompose(const DualFunctional& h, const CoalgebraWindow& w);

/// Checks the decomposition identity exhaustively over window x window.
bool verify_xi_certificate(const DualFunctional& h, const std::vector<XiPair>& pairs, const CoalgebraWindow& w);

/// Smallest subspace containing W and closed under every delta functional on the support.
Subspace hstar_closure(const Subspace& w, const GradedAlgebra& a);

/// Throws InvariantViolation if I is not a two-sided ideal; otherwise reports
/// whether H^* I is a two-sided ideal again.
bool verify_ideal_closure(const Subspace& ideal, const GradedAlgebra& a);

/// tr(Phi(h^* x)) == h(1) tr(Phi(x)), Phi = left multiplication (ad for Lie).
/// Non-unital associative algebras are unitalized first.
bool trace_identity_check(const DualFunctional& h, std::span<const Rat> x, const GradedAlgebra& a);

} // namespace gradalg
