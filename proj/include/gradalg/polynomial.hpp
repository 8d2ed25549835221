#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/hopf.hpp"

#include <compare>
#include <map>
#include <vector>

namespace gradalg {

/// One multilinear graded monomial on x_0..x_{n-1}: the variables in product
/// order, and the degree label carried by each variable (indexed by variable).
struct GradedMonomial {
  std::vector<std::size_t> order;
  std::vector<GroupElem> labels;
  friend auto operator<=>(const GradedMonomial&, const GradedMonomial&) = default;
  friend bool operator==(const GradedMonomial&, const GradedMonomial&) = default;
};

class MultilinearGradedPoly {
 public:
  explicit MultilinearGradedPoly(std::size_t n = 0) : n_(n) {}

  std::size_t arity() const { return n_; }
  const std::map<GradedMonomial, Rat>& terms() const { return terms_; }
  /// Throws std::invalid_argument unless `order` is a permutation of 0..n-1
  /// and there is one label per variable.
  void add_term(const Rat& coef, std::vector<std::size_t> order, std::vector<GroupElem> labels);
  bool is_zero() const { return terms_.empty(); }

  friend MultilinearGradedPoly operator-(const MultilinearGradedPoly& a, const MultilinearGradedPoly& b);
  friend bool operator==(const MultilinearGradedPoly&, const MultilinearGradedPoly&) = default;

 private:
  std::size_t n_;
  std::map<GradedMonomial, Rat> terms_;
};

/// Multilinear H-monomial for H = (FG)^*: labels are delta functions h_{g_i},
/// stored as indices into the support list the polynomial was built over.
struct HMonomial {
  std::vector<std::size_t> order;
  std::vector<std::size_t> labels;
  friend auto operator<=>(const HMonomial&, const HMonomial&) = default;
  friend bool operator==(const HMonomial&, const HMonomial&) = default;
};

class HPoly {
 public:
  HPoly(std::size_t n, std::vector<GroupElem> support) : n_(n), support_(std::move(support)) {}

  std::size_t arity() const { return n_; }
  const std::vector<GroupElem>& support() const { return support_; }
  const std::map<HMonomial, Rat>& terms() const { return terms_; }
  void add_term(const Rat& coef, std::vector<std::size_t> order, std::vector<std::size_t> labels);
  /// Adds coef * x^{h_0}... with arbitrary functional labels, rewriting each
  /// x^h as sum_i h(g_i) x^{h_{g_i}} over the support.
  void add_functional_term(const Rat& coef, const std::vector<std::size_t>& order,
                           const std::vector<DualFunctional>& labels);
  bool is_zero() const { return terms_.empty(); }

 private:
  std::size_t n_;
  std::vector<GroupElem> support_;
  std::map<HMonomial, Rat> terms_;
};

/// eta: x^(g) -> x^{h_g} for g in the support of A, and 0 otherwise.
HPoly gr_to_h(const MultilinearGradedPoly& f, const GradedAlgebra& a);
/// xi: x^{h} -> sum_i h(g_i) x^(g_i).
MultilinearGradedPoly h_to_gr(const HPoly& f);

/// f vanishes on every tuple of homogeneous basis vectors of matching degrees.
/// Variables whose label lies outside the support make their terms vanish.
bool is_graded_identity(const MultilinearGradedPoly& f, const GradedAlgebra& a);
/// f vanishes under x_j -> b_j, x_j^h -> h b_j for all basis tuples.
bool is_h_identity(const HPoly& f, const GradedAlgebra& a);

} // namespace gradalg
