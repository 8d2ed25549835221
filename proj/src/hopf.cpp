#include "gradalg/hopf.hpp"

#include "gradalg/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gradalg {

DualFunctional DualFunctional::delta(const GroupElem& g) {
  DualFunctional h;
  h.values_[g] = 1;
  return h;
}

DualFunctional DualFunctional::ones(const std::vector<GroupElem>& on) {
  DualFunctional h;
  for (const auto& g : on) h.values_[g] = 1;
  return h;
}

Rat DualFunctional::operator()(const GroupElem& g) const {
  auto it = values_.find(g);
  return it == values_.end() ? Rat(0) : it->second;
}

void DualFunctional::set(const GroupElem& g, Rat value) {
  if (sgn(value) == 0)
    values_.erase(g);
  else
    values_[g] = std::move(value);
}

DualFunctional DualFunctional::translate(const Group& group, const GroupElem& g) const {
  // h(g q) != 0 iff g q = s for s in supp h, i.e. q = g^{-1} s
  DualFunctional t;
  GroupElem gi = group.inv(g);
  for (const auto& [s, v] : values_) t.values_[group.mul(gi, s)] = v;
  return t;
}

DualFunctional operator+(const DualFunctional& a, const DualFunctional& b) {
  DualFunctional r = a;
  for (const auto& [g, v] : b.values_) r.set(g, r(g) + v);
  return r;
}

DualFunctional operator*(const Rat& s, const DualFunctional& a) {
  DualFunctional r;
  if (sgn(s) == 0) return r;
  for (const auto& [g, v] : a.values_) r.values_[g] = s * v;
  return r;
}

CoalgebraWindow::CoalgebraWindow(const Group& group, const std::vector<GroupElem>& support) : group_(group) {
  std::set<GroupElem> elems(support.begin(), support.end());
  for (const auto& g : support)
    for (const auto& h : support) elems.insert(group.mul(g, h));
  std::set<GroupElem> with_inverses = elems;
  for (const auto& g : elems) with_inverses.insert(group.inv(g));
  basis_.assign(with_inverses.begin(), with_inverses.end());
}

bool CoalgebraWindow::contains(const GroupElem& g) const {
  return std::binary_search(basis_.begin(), basis_.end(), g);
}

bool CoalgebraWindow::product_closed(const GroupElem& g, const GroupElem& h) const {
  return contains(group_.mul(g, h));
}

Vec dual_action(const DualFunctional& h, std::span<const Rat> v, const GradedAlgebra& a) {
  if (v.size() != a.dim()) throw std::invalid_argument("vector dimension mismatch");
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sgn(v[i]) != 0) out[i] = h(a.degree(i)) * v[i];
  return out;
}

Vec generalized_action_expansion(const DualFunctional& h, std::span<const Rat> x, std::span<const Rat> y,
                                 const GradedAlgebra& a) {
  Vec out(a.dim());
  const auto& sup = a.support();
  for (const auto& gj : sup) {
    Vec xj = a.homogeneous_projection(x, gj);
    if (is_zero(xj)) continue;
    for (const auto& gk : sup) {
      Rat w = h(a.group().mul(gj, gk));
      if (sgn(w) == 0) continue;
      Vec yk = a.homogeneous_projection(y, gk);
      if (is_zero(yk)) continue;
      axpy(out, w, a.multiply(xj, yk));
    }
  }
  return out;
}

std::vector<XiPair> xi_decompose(const DualFunctional& h, const CoalgebraWindow& w) {
  std::vector<XiPair> pairs;
  for (const auto& g : w.basis()) {
    DualFunctional t = h.translate(w.group(), g);
    if (t.is_zero()) continue;
    pairs.emplace_back(DualFunctional::delta(g), std::move(t));
  }
  return pairs;
}

bool verify_xi_certificate(const DualFunctional& h, const std::vector<XiPair>& pairs, const CoalgebraWindow& w) {
  for (const auto& g : w.basis())
    for (const auto& q : w.basis()) {
      Rat rhs = 0;
      for (const auto& [hp, hpp] : pairs) rhs += hp(g) * hpp(q);
      if (h(w.group().mul(g, q)) != rhs) return false;
    }
  return true;
}

Subspace hstar_closure(const Subspace& w, const GradedAlgebra& a) {
  EchelonBuilder b(w);
  std::vector<Vec> frontier = w.vectors();
  std::vector<DualFunctional> deltas;
  for (const auto& g : a.support()) deltas.push_back(DualFunctional::delta(g));
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& h : deltas) {
        Vec hv = dual_action(h, v, a);
        if (b.insert(hv)) next.push_back(std::move(hv));
      }
    frontier = std::move(next);
  }
  return b.build();
}

bool verify_ideal_closure(const Subspace& ideal, const GradedAlgebra& a) {
  if (!is_ideal(a, ideal)) throw InvariantViolation("verify_ideal_closure: input is not a two-sided ideal");
  return is_ideal(a, hstar_closure(ideal, a));
}

bool trace_identity_check(const DualFunctional& h, std::span<const Rat> x, const GradedAlgebra& a) {
  if (!a.is_lie() && !a.unit()) {
    GradedAlgebra u = unitalization(a);
    Vec lifted(u.dim());
    std::copy(x.begin(), x.end(), lifted.begin() + 1);
    return trace_identity_check(h, lifted, u);
  }
  Rat lhs = a.left_mult_matrix(dual_action(h, x, a)).trace();
  Rat rhs = h(a.group().identity()) * a.left_mult_matrix(x).trace();
  return lhs == rhs;
}

} // namespace gradalg
