#include "gradalg/builders.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/identities.hpp"
#include "gradalg/polynomial.hpp"
#include "gradalg/radical.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gradalg;

namespace {

GroupElem z2(long r) { return Group::cyclic(2).cyclic_elem(r); }

MultilinearGradedPoly commutator(const GroupElem& gx, const GroupElem& gy) {
  MultilinearGradedPoly f(2);
  f.add_term(1, {0, 1}, {gx, gy});
  f.add_term(-1, {1, 0}, {gx, gy});
  return f;
}

GradedAlgebra nilpotent_part_of_free_trunc() {
  GradedAlgebra f = free_group_truncation(2, 3);
  return restrict_to_subalgebra(f, jacobson_radical(f), "J").algebra;
}

// Random multilinear polynomial with labels drawn from `degrees`.
MultilinearGradedPoly random_poly(std::mt19937& rng, std::size_t n, const std::vector<GroupElem>& degrees) {
  MultilinearGradedPoly f(n);
  std::vector<GroupElem> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(degrees[rng() % degrees.size()]);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t t = 0, terms = 1 + rng() % 4; t < terms; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    auto ls = labels;
    if (rng() % 3 == 0) ls[rng() % n] = degrees[rng() % degrees.size()];
    f.add_term(static_cast<long>(rng() % 5) - 2, perm, ls);
  }
  return f;
}

bool evaluation_equal(const MultilinearGradedPoly& f, const MultilinearGradedPoly& g, const GradedAlgebra& a) {
  return is_graded_identity(f - g, a);
}

} // namespace

TEST_CASE("graded identities of M2") {
  GradedAlgebra m = matrix_algebra_z2(2);
  CHECK(is_graded_identity(commutator(z2(0), z2(0)), m));
  CHECK_FALSE(is_graded_identity(commutator(z2(0), z2(1)), m));

  GradedAlgebra plain = matrix_algebra_trivial(2);
  const GroupElem e = plain.group().identity();
  CHECK_FALSE(is_graded_identity(commutator(e, e), plain));
}

TEST_CASE("variables outside the support are identities") {
  GradedAlgebra f = free_group_truncation(2, 2);
  GroupElem far = f.group().free_word({2, 2, 1});
  MultilinearGradedPoly x(1);
  x.add_term(1, {0}, {far});
  CHECK(is_graded_identity(x, f));
  CHECK(gr_to_h(x, f).is_zero());
}

TEST_CASE("polynomials reject malformed monomials") {
  MultilinearGradedPoly f(2);
  CHECK_THROWS_AS(f.add_term(1, {0, 0}, {z2(0), z2(0)}), std::invalid_argument);
  CHECK_THROWS_AS(f.add_term(1, {0, 1}, {z2(0)}), std::invalid_argument);
  f.add_term(1, {0, 1}, {z2(0), z2(1)});
  f.add_term(-1, {0, 1}, {z2(0), z2(1)});
  CHECK(f.is_zero());
}

TEST_CASE("functional labels reduce to delta labels") {
  GradedAlgebra m = matrix_algebra_z2(2);
  HPoly p(1, m.support());
  p.add_functional_term(1, {0}, {DualFunctional::ones(m.support())});
  CHECK(p.terms().size() == 2);
  MultilinearGradedPoly back = h_to_gr(p);
  // x^(0) + x^(1) is not an identity: it evaluates to b on each homogeneous b
  CHECK_FALSE(is_graded_identity(back, m));
  CHECK_FALSE(is_h_identity(p, m));
}

TEST_CASE("gr and H translations are inverse modulo identities") {
  GradedAlgebra m = matrix_algebra_z2(2);
  MultilinearGradedPoly c = commutator(z2(0), z2(0));
  CHECK(evaluation_equal(h_to_gr(gr_to_h(c, m)), c, m));
  CHECK(is_h_identity(gr_to_h(c, m), m));

  std::mt19937 rng(9);
  std::vector<std::string> names{"m2_z2", "ut2", "free_trunc_2_2", "fz3", "gl2_z2", "aff1"};
  for (int trial = 0; trial < 100; ++trial) {
    GradedAlgebra a = builtin(names[trial % names.size()]);
    std::vector<GroupElem> degrees = a.support();
    if (a.group().kind() == GroupKind::free) degrees.push_back(a.group().free_word({1, 1, 1, 2}));
    MultilinearGradedPoly f = random_poly(rng, 1 + rng() % 3, degrees);
    HPoly h = gr_to_h(f, a);
    CHECK(evaluation_equal(h_to_gr(h), f, a));
    CHECK(is_graded_identity(f, a) == is_h_identity(h, a));
    HPoly h2 = gr_to_h(h_to_gr(h), a);
    CHECK(h2.terms() == h.terms());
  }
}

TEST_CASE("codim blocks") {
  GradedAlgebra m = matrix_algebra_z2(2);
  for (const auto& g : m.support()) CHECK(codim_block(m, make_assignment(m, {g})) == 1);
  CHECK(codim_block(m, make_assignment(m, {z2(0), z2(0)})) == 1);
  CHECK(codim_block(m, make_assignment(m, {z2(0), z2(1)})) == 2);
  CHECK_THROWS_AS(make_assignment(builtin("free_trunc_2_2"), {Group::free(2).free_word({2, 2})}),
                  std::invalid_argument);
}

TEST_CASE("graded codimension small values") {
  GradedAlgebra m = matrix_algebra_z2(2);
  CHECK(graded_codimension(m, 1).value == 2);
  CHECK(graded_codimension(m, 2).value == 7);
  CHECK(graded_codimension(matrix_algebra_trivial(2), 1).value == 1);
  CHECK(graded_codimension(matrix_algebra_trivial(2), 2).value == 2);
  CHECK(graded_codimension(free_group_truncation(2, 2), 1).value == 3);
  // M2 satisfies no identity of degree 3
  CHECK(graded_codimension(matrix_algebra_trivial(2), 3).value == 6);
}

TEST_CASE("free group truncation codimensions follow 3n^2 + 3n + 1") {
  GradedAlgebra f = free_group_truncation(2, 3);
  for (std::uint64_t n = 1; n <= 4; ++n) CHECK(graded_codimension(f, n).value == 3 * n * n + 3 * n + 1);
}

TEST_CASE("serial and parallel agree") {
  for (const auto& name : builtin_names()) {
    GradedAlgebra a = builtin(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      CodimValue p = graded_codimension(a, n), s = graded_codimension_serial(a, n);
      CHECK(p.value == s.value);
      CHECK(p.stats.nonzero_blocks == s.stats.nonzero_blocks);
      CHECK(p.stats.max_rank == s.stats.max_rank);
    }
  }
}

TEST_CASE("codimension bounds and global oracle") {
  for (const auto& name : builtin_names()) {
    GradedAlgebra a = builtin(name);
    std::uint64_t m = a.support().size(), fact = 1, mn = 1;
    for (std::size_t n = 1; n <= 3; ++n) {
      fact *= n;
      mn *= m;
      const std::uint64_t c = graded_codimension(a, n).value;
      CAPTURE(name);
      CAPTURE(n);
      CHECK(c <= mn * fact);
      if (a.unit()) CHECK(c >= 1);
      if (n <= 2 || a.dim() <= 4) CHECK(c == oracle::global_codimension(a, n));
    }
  }
}

TEST_CASE("dropping a zero component does not change codimensions") {
  // Z4 with vertex degrees 0 and 2: components of degrees 1 and 3 are zero.
  Group z4 = Group::cyclic(4);
  GradedAlgebra a = matrix_algebra(2, z4, {z4.cyclic_elem(0), z4.cyclic_elem(2)});
  GradedAlgebra b = matrix_algebra_z2(2);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(graded_codimension(a, n).value == graded_codimension(b, n).value);
}

TEST_CASE("H-codimension equals graded codimension") {
  for (const auto& name : builtin_names()) {
    GradedAlgebra a = builtin(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      CAPTURE(name);
      CHECK(h_codimension(a, n).value == graded_codimension(a, n).value);
    }
  }
  CHECK(h_codimension(matrix_algebra_z2(2), 2).value == 7);
}

TEST_CASE("nilpotent shortcut") {
  GradedAlgebra j = nilpotent_part_of_free_trunc();
  CHECK(nilpotent_shortcut(j, 3) == 0u);
  CHECK_FALSE(nilpotent_shortcut(j, 2).has_value());
  CHECK(graded_codimension(j, 2).value > 0);
  CHECK(graded_codimension(j, 3).value == 0);
  CHECK_FALSE(nilpotent_shortcut(matrix_algebra_z2(2), 5).has_value());
}

TEST_CASE("resource caps") {
  GradedAlgebra m = matrix_algebra_z2(2);
  CHECK_THROWS_AS(graded_codimension(m, 7), ResourceCapExceeded);
  CodimOptions tight;
  tight.max_blocks = 3;
  CHECK_THROWS_AS(graded_codimension(m, 2, tight), ResourceCapExceeded);
  CHECK_THROWS_AS(h_codimension(m, 2, tight), ResourceCapExceeded);
  CHECK_THROWS_AS(graded_codimension(m, 0), std::invalid_argument);
}

TEST_CASE("nth roots are truncated exactly") {
  CHECK(nth_root_truncated(8, 3) == 2);
  CHECK(to_decimal(nth_root_truncated(2, 2)) == "1.414213");
  CHECK(to_decimal(nth_root_truncated(19, 2)) == "4.358898");
  CHECK(nth_root_truncated(0, 4) == 0);
}

TEST_CASE("exponent estimates") {
  GradedAlgebra f = free_group_truncation(2, 3);
  CodimReport r = codimension_report(f, 5, CodimMode::gr);
  ExponentVerdict v = exponent_estimate(r, 1);
  CHECK(v.kind == ExponentVerdictKind::consistent);
  CHECK(v.roots.size() == 5);
  REQUIRE(v.c_lower.has_value());
  for (const auto& e : r.entries) {
    Rat n = static_cast<long>(e.n);
    Rat poly = 1;
    for (long i = 0; i < v.r_bound; ++i) poly *= n;
    CHECK(*v.c_lower / poly <= Rat(static_cast<long>(e.value)));
    CHECK(Rat(static_cast<long>(e.value)) <= *v.c_upper * poly);
  }
  // exponential growth is not polynomially bracketed around d = 1 with a small degree
  CodimReport m = codimension_report(matrix_algebra_z2(2), 5, CodimMode::gr);
  CHECK(exponent_estimate(m, 4).kind == ExponentVerdictKind::consistent);
  CHECK(exponent_estimate(m, 1, 1).kind == ExponentVerdictKind::inconsistent);
  CHECK(exponent_estimate(m, std::nullopt).kind == ExponentVerdictKind::no_prediction);

  CodimReport nil = codimension_report(nilpotent_part_of_free_trunc(), 4, CodimMode::gr);
  CHECK(exponent_estimate(nil, 1).kind == ExponentVerdictKind::nilpotent);
  CHECK(to_string(ExponentVerdictKind::nilpotent) == "nilpotent, exponent undefined");

  CodimReport short_report = codimension_report(f, 2, CodimMode::gr);
  CHECK_THROWS_AS(exponent_estimate(short_report, 1), std::invalid_argument);
}

TEST_CASE("report in both modes") {
  CodimReport r = codimension_report(builtin("ut2"), 3, CodimMode::both);
  for (const auto& e : r.entries) {
    REQUIRE(e.h_value.has_value());
    CHECK(*e.h_value == e.value);
  }
}
