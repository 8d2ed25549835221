#include "gradalg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gradalg {

namespace {

void check_order(std::size_t n, const std::vector<std::size_t>& order) {
  if (order.size() != n) throw std::invalid_argument("monomial must use every variable exactly once");
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != i) throw std::invalid_argument("monomial order is not a permutation");
}

template <class Map, class Key>
void accumulate(Map& terms, Key key, const Rat& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms.emplace(std::move(key), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms.erase(it);
  }
}

// Left-normed product of the given vectors taken in `order`.
Vec word_value(const GradedAlgebra& a, const std::vector<Vec>& xs, const std::vector<std::size_t>& order) {
  Vec acc = xs[order[0]];
  for (std::size_t i = 1; i < order.size() && !is_zero(acc); ++i) acc = a.multiply(acc, xs[order[i]]);
  return acc;
}

// Calls f(tuple) for every tuple in the product of `choices`.
template <class F>
void for_each_tuple(const std::vector<std::vector<std::size_t>>& choices, F&& f) {
  for (const auto& c : choices)
    if (c.empty()) return;
  std::vector<std::size_t> pos(choices.size(), 0), tuple(choices.size());
  while (true) {
    for (std::size_t j = 0; j < choices.size(); ++j) tuple[j] = choices[j][pos[j]];
    if (!f(tuple)) return;
    std::size_t j = 0;
    while (j < choices.size() && ++pos[j] == choices[j].size()) pos[j++] = 0;
    if (j == choices.size()) return;
  }
}

} // namespace

void MultilinearGradedPoly::add_term(const Rat& coef, std::vector<std::size_t> order,
                                     std::vector<GroupElem> labels) {
  check_order(n_, order);
  if (labels.size() != n_) throw std::invalid_argument("one degree label per variable required");
  accumulate(terms_, GradedMonomial{std::move(order), std::move(labels)}, coef);
}

MultilinearGradedPoly operator-(const MultilinearGradedPoly& a, const MultilinearGradedPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("arity mismatch");
  MultilinearGradedPoly r = a;
  for (const auto& [m, c] : b.terms_) accumulate(r.terms_, m, Rat(-c));
  return r;
}

void HPoly::add_term(const Rat& coef, std::vector<std::size_t> order, std::vector<std::size_t> labels) {
  check_order(n_, order);
  if (labels.size() != n_) throw std::invalid_argument("one label per variable required");
  for (std::size_t l : labels)
    if (l >= support_.size()) throw std::invalid_argument("label index outside the support");
  accumulate(terms_, HMonomial{std::move(order), std::move(labels)}, coef);
}

void HPoly::add_functional_term(const Rat& coef, const std::vector<std::size_t>& order,
                                const std::vector<DualFunctional>& labels) {
  if (labels.size() != n_) throw std::invalid_argument("one label per variable required");
  std::vector<std::vector<std::size_t>> choices(n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < support_.size(); ++i)
      if (labels[j](support_[i]) != 0) choices[j].push_back(i);
  for_each_tuple(choices, [&](const std::vector<std::size_t>& t) {
    Rat c = coef;
    for (std::size_t j = 0; j < n_; ++j) c *= labels[j](support_[t[j]]);
    add_term(c, order, t);
    return true;
  });
}

HPoly gr_to_h(const MultilinearGradedPoly& f, const GradedAlgebra& a) {
  HPoly out(f.arity(), a.support());
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::size_t> labels;
    bool inside = true;
    for (const auto& g : m.labels) {
      auto s = a.find_support(g);
      if (!s) {
        inside = false;
        break;
      }
      labels.push_back(*s);
    }
    if (inside) out.add_term(c, m.order, std::move(labels));
  }
  return out;
}

MultilinearGradedPoly h_to_gr(const HPoly& f) {
  MultilinearGradedPoly out(f.arity());
  for (const auto& [m, c] : f.terms()) {
    std::vector<GroupElem> labels;
    for (std::size_t l : m.labels) labels.push_back(f.support()[l]);
    out.add_term(c, m.order, std::move(labels));
  }
  return out;
}

bool is_graded_identity(const MultilinearGradedPoly& f, const GradedAlgebra& a) {
  std::map<std::vector<GroupElem>, std::vector<std::pair<std::vector<std::size_t>, Rat>>> by_labels;
  for (const auto& [m, c] : f.terms()) by_labels[m.labels].emplace_back(m.order, c);

  for (const auto& [labels, words] : by_labels) {
    std::vector<std::vector<std::size_t>> choices;
    bool inside = true;
    for (const auto& g : labels) {
      auto s = a.find_support(g);
      if (!s) {
        inside = false;
        break;
      }
      choices.push_back(a.component(*s));
    }
    if (!inside) continue;
    bool vanishes = true;
    for_each_tuple(choices, [&](const std::vector<std::size_t>& t) {
      std::vector<Vec> xs;
      for (std::size_t b : t) xs.push_back(a.basis_vector(b));
      Vec total = zero_vec(a.dim());
      for (const auto& [order, c] : words) axpy(total, c, word_value(a, xs, order));
      vanishes = is_zero(total);
      return vanishes;
    });
    if (!vanishes) return false;
  }
  return true;
}

bool is_h_identity(const HPoly& f, const GradedAlgebra& a) {
  if (f.is_zero()) return true;
  const std::size_t n = f.arity();
  std::vector<DualFunctional> deltas;
  for (const auto& g : f.support()) deltas.push_back(DualFunctional::delta(g));
  std::vector<std::size_t> all(a.dim());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::size_t>> choices(n, all);

  bool vanishes = true;
  for_each_tuple(choices, [&](const std::vector<std::size_t>& t) {
    Vec total = zero_vec(a.dim());
    for (const auto& [m, c] : f.terms()) {
      std::vector<Vec> xs;
      for (std::size_t j = 0; j < n; ++j) xs.push_back(dual_action(deltas[m.labels[j]], a.basis_vector(t[j]), a));
      axpy(total, c, word_value(a, xs, m.order));
    }
    vanishes = is_zero(total);
    return vanishes;
  });
  return vanishes;
}

} // namespace gradalg
