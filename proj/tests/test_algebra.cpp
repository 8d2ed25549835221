#include "gradalg/builders.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/radical.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace gradalg;
using namespace testing_support;

namespace {

Vec random_in(std::mt19937& rng, const GradedAlgebra& a) { return random_vec(rng, a.dim()); }

// e11, e12, e21, e22 in matrix_algebra order
constexpr std::size_t E11 = 0, E12 = 1, E21 = 2, E22 = 3;

} // namespace

TEST_CASE("constructor rejects bad structure constants") {
  Group z2 = Group::cyclic(2);
  std::vector<GroupElem> degs{z2.cyclic_elem(1)};
  // x*x = x with deg x = 1 breaks the grading
  CHECK_THROWS_AS(GradedAlgebra(AlgebraKind::associative, z2, degs, {Rat(1)}), InvariantViolation);
  // non-associative: on span{x, y}: x*x = y, x*y = x, y*x = 0
  std::vector<Rat> s(8);
  s[(0 * 2 + 0) * 2 + 1] = 1;
  s[(0 * 2 + 1) * 2 + 0] = 1;
  Group t = Group::trivial();
  CHECK_THROWS_AS(GradedAlgebra(AlgebraKind::associative, t, {t.identity(), t.identity()}, s), InvariantViolation);
  // Lie bracket that is not antisymmetric
  std::vector<Rat> l(8);
  l[(0 * 2 + 1) * 2 + 0] = 1;
  CHECK_THROWS_AS(GradedAlgebra(AlgebraKind::lie, t, {t.identity(), t.identity()}, l), InvariantViolation);
  // wrong unit
  CHECK_THROWS_AS(GradedAlgebra(AlgebraKind::associative, t, {t.identity()}, {Rat(1)}, Vec{Rat(2)}),
                  InvariantViolation);
}

TEST_CASE("matrix units multiply") {
  GradedAlgebra m = matrix_algebra_trivial(2);
  CHECK(m.multiply(m.basis_vector(E11), m.basis_vector(E12)) == m.basis_vector(E12));
  CHECK(is_zero(m.multiply(m.basis_vector(E12), m.basis_vector(E11))));
  for (std::size_t b = 0; b < 4; ++b) {
    CHECK(m.multiply(*m.unit(), m.basis_vector(b)) == m.basis_vector(b));
    CHECK(m.multiply(m.basis_vector(b), *m.unit()) == m.basis_vector(b));
  }
}

TEST_CASE("lie products vanish on the diagonal") {
  std::mt19937 rng(4);
  for (const auto& name : lie_builtin_names()) {
    GradedAlgebra l = builtin(name);
    for (int i = 0; i < 20; ++i) {
      Vec v = random_in(rng, l);
      CHECK(is_zero(l.multiply(v, v)));
    }
  }
}

TEST_CASE("left multiplication matrices") {
  GradedAlgebra m = matrix_algebra_trivial(2);
  CHECK(m.left_mult_matrix(*m.unit()) == Mat::identity(4));
  Mat phi = m.left_mult_matrix(m.basis_vector(E12));
  CHECK(rank(phi) == 2);  // e12 * (e21, e22) -> (e11, e12)
  CHECK(phi.trace() == 0);
  std::mt19937 rng(8);
  for (const auto& name : associative_builtin_names()) {
    GradedAlgebra a = builtin(name);
    for (int i = 0; i < 10; ++i) {
      Vec x = random_in(rng, a), y = random_in(rng, a);
      CHECK(a.left_mult_matrix(x) * a.left_mult_matrix(y) == a.left_mult_matrix(a.multiply(x, y)));
    }
  }
}

TEST_CASE("homogeneous projections") {
  GradedAlgebra m = matrix_algebra_z2(2);
  Group z2 = m.group();
  Vec v = add(m.basis_vector(E11), m.basis_vector(E12));
  CHECK(m.homogeneous_projection(v, z2.cyclic_elem(0)) == m.basis_vector(E11));
  CHECK(m.homogeneous_projection(v, z2.cyclic_elem(1)) == m.basis_vector(E12));
  CHECK(m.homogeneous_projection(m.basis_vector(E21), z2.cyclic_elem(1)) == m.basis_vector(E21));
  CHECK(is_zero(m.homogeneous_projection(m.basis_vector(E21), z2.cyclic_elem(0))));

  std::mt19937 rng(5);
  for (const auto& name : builtin_names()) {
    GradedAlgebra a = builtin(name);
    for (int i = 0; i < 10; ++i) {
      Vec x = random_in(rng, a);
      Vec total = zero_vec(a.dim());
      for (const auto& g : a.support()) total = add(total, a.homogeneous_projection(x, g));
      CHECK(total == x);
    }
    // products of homogeneous elements are homogeneous of the product degree
    for (std::size_t s = 0; s < a.support().size(); ++s)
      for (std::size_t t = 0; t < a.support().size(); ++t) {
        Vec x = zero_vec(a.dim()), y = zero_vec(a.dim());
        for (auto i : a.component(s)) x[i] = small_rat(rng);
        for (auto j : a.component(t)) y[j] = small_rat(rng);
        Vec p = a.multiply(x, y);
        GroupElem g = a.group().mul(a.support()[s], a.support()[t]);
        CHECK(a.homogeneous_projection(p, g) == p);
      }
  }
}

TEST_CASE("generated ideals and subalgebras") {
  GradedAlgebra m = matrix_algebra_trivial(2);
  CHECK(ideal_generated(m, {m.basis_vector(E12)}).is_full());
  GradedAlgebra ut = upper_triangular_z2(2);  // e11, e12, e22
  Subspace i = ideal_generated(ut, {ut.basis_vector(1)});
  CHECK(i == Subspace::span(3, {ut.basis_vector(1)}));
  CHECK(subalgebra_generated(ut, {*ut.unit()}) == Subspace::span(3, {*ut.unit()}));
  CHECK(is_ideal(ut, i));
  CHECK_FALSE(is_ideal(ut, Subspace::span(3, {ut.basis_vector(0)})));
  CHECK(is_subalgebra(ut, Subspace::span(3, {ut.basis_vector(0)})));
}

TEST_CASE("quotients") {
  GradedAlgebra ut = upper_triangular_z2(2);
  GradedAlgebra same = quotient_algebra(ut, Subspace::zero(3));
  CHECK(same.dim() == 3);
  CHECK(same.structure() == ut.structure());

  Subspace j = Subspace::span(3, {ut.basis_vector(1)});
  Quotient q = quotient_with_projection(ut, j);
  CHECK(q.algebra.dim() == 2);
  // F x F: commutative, two orthogonal idempotents
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      CHECK(q.algebra.multiply(q.algebra.basis_vector(x), q.algebra.basis_vector(y)) ==
            q.algebra.multiply(q.algebra.basis_vector(y), q.algebra.basis_vector(x)));
  CHECK(jacobson_radical(q.algebra).is_zero());

  std::mt19937 rng(12);
  for (int i = 0; i < 20; ++i) {
    Vec a = random_in(rng, ut), b = random_in(rng, ut);
    CHECK(q.projection.apply(ut.multiply(a, b)) == q.algebra.multiply(q.projection.apply(a), q.projection.apply(b)));
  }

  GradedAlgebra f = free_group_truncation(2, 3);
  GradedAlgebra top = quotient_algebra(f, jacobson_radical(f));
  CHECK(top.dim() == 1);

  CHECK_THROWS_AS(quotient_algebra(ut, Subspace::span(3, {ut.basis_vector(0)})), InvariantViolation);
  GradedAlgebra fz2 = builtin("fz2");
  Subspace plus = Subspace::span(2, {add(fz2.basis_vector(0), fz2.basis_vector(1))});
  REQUIRE(is_ideal(fz2, plus));
  CHECK_THROWS_AS(quotient_algebra(fz2, plus), InvariantViolation);
}

TEST_CASE("builders") {
  GradedAlgebra m = matrix_algebra_z2(2);
  CHECK(m.support().size() == 2);
  CHECK(m.multiply(m.basis_vector(E12), m.basis_vector(E21)) == m.basis_vector(E11));
  CHECK(m.degree(E12) == m.group().cyclic_elem(1));
  CHECK(jacobson_radical(m).is_zero());

  for (auto [k, d] : {std::pair{2u, 3u}, std::pair{3u, 7u}}) {
    GradedAlgebra f = free_group_truncation(2, k);
    CHECK(f.dim() == d);
    CHECK(f.support().size() == d);
    for (std::size_t s = 0; s < f.support().size(); ++s) CHECK(f.component(s).size() == 1);
  }

  GradedAlgebra s = sl2();
  CHECK(s.dim() == 3);
  CHECK(determinant(killing_form(s)) != 0);

  GradedAlgebra aff = two_dim_nonabelian_lie();
  CHECK(aff.multiply(aff.basis_vector(0), aff.basis_vector(1)) == aff.basis_vector(0));

  CHECK(direct_sum(m, m).dim() == 8);
  CHECK(direct_sum(m, m).unit().has_value());
  CHECK(group_algebra(klein_four()).dim() == 4);
  CHECK(gl2_z2().dim() == 4);
  CHECK(heisenberg3().dim() == 3);
  CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
  CHECK(builtin("free_trunc_2_2").dim() == 3);
}

TEST_CASE("unitalization and find_unit") {
  GradedAlgebra f = free_group_truncation(2, 3);
  Subspace j = jacobson_radical(f);
  GradedAlgebra jalg = restrict_to_subalgebra(f, j).algebra;
  CHECK_FALSE(jalg.unit().has_value());
  GradedAlgebra u = unitalization(jalg);
  CHECK(u.dim() == 7);
  REQUIRE(u.unit().has_value());
  CHECK(*u.unit() == unit_vec(7, 0));
  CHECK(find_unit(builtin("m2_z2")) == builtin("m2_z2").unit());
  CHECK_FALSE(find_unit(jalg).has_value());
}

TEST_CASE("restriction keeps structure") {
  GradedAlgebra m = matrix_algebra_z2(2);
  Subspace diag = Subspace::span(4, {m.basis_vector(E11), m.basis_vector(E22)});
  Restriction r = restrict_to_subalgebra(m, diag);
  CHECK(r.algebra.dim() == 2);
  REQUIRE(r.algebra.unit().has_value());
  std::mt19937 rng(6);
  for (int i = 0; i < 10; ++i) {
    Vec x = random_vec(rng, 2), y = random_vec(rng, 2);
    auto embed = [&](const Vec& c) {
      Vec v = zero_vec(4);
      for (std::size_t k = 0; k < 2; ++k) axpy(v, c[k], r.basis[k]);
      return v;
    };
    CHECK(embed(r.algebra.multiply(x, y)) == m.multiply(embed(x), embed(y)));
  }
}

TEST_CASE("nilpotency index and derived series") {
  GradedAlgebra f = free_group_truncation(2, 3);
  CHECK(nilpotency_index(f, jacobson_radical(f)) == 3u);
  CHECK_FALSE(nilpotency_index(f, f.whole()).has_value());
  GradedAlgebra h = heisenberg3();
  CHECK(nilpotency_index(h, h.whole()) == 3u);
  auto series = derived_series(h, h.whole());
  CHECK(series.back().is_zero());
}
