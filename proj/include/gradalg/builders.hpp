#pragma once

#include "gradalg/algebra.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace gradalg {

/// M_n(F) with the elementary grading deg(e_ij) = g_i^{-1} g_j. Basis e_ij row-major.
GradedAlgebra matrix_algebra(std::size_t n, const Group& group, const std::vector<GroupElem>& vertex_degrees,
                             std::string name = {});
/// M_n(F) graded by Z2 via deg(e_ij) = j - i mod 2 (diagonal even, off-diagonal parity).
GradedAlgebra matrix_algebra_z2(std::size_t n = 2);
GradedAlgebra matrix_algebra_trivial(std::size_t n);

/// Upper triangular n x n matrices, elementary grading; basis e_ij (i <= j) row-major.
GradedAlgebra upper_triangular(std::size_t n, const Group& group, const std::vector<GroupElem>& vertex_degrees,
                               std::string name = {});
/// UT_n graded by Z2 with deg(e_ij) = j - i mod 2.
GradedAlgebra upper_triangular_z2(std::size_t n = 2);

/// FG for a finite group with its natural grading (FG)^(g) = Fg.
GradedAlgebra group_algebra(const Group& g, std::string name = {});

/// Words of length < k in a_1..a_l inside F<free group>, product = concatenation,
/// zero once the length reaches k. Degree of a word is the word itself.
GradedAlgebra free_group_truncation(std::size_t letters, std::size_t k);

struct Bracket {
  std::size_t i, j, k;
  Rat coef; // [e_i, e_j] has coefficient coef on e_k
};
/// Antisymmetric extension of the listed brackets (pairs with i < j).
GradedAlgebra lie_from_brackets(const Group& group, std::vector<GroupElem> degrees,
                                const std::vector<Bracket>& brackets, std::string name = {});

/// sl2 with basis (e, h, f), graded by Z = free(1): deg e = a1, deg h = 1, deg f = a1'.
GradedAlgebra sl2();
/// gl2 = [M2, M2] with the Z2 grading of matrix_algebra_z2.
GradedAlgebra gl2_z2();
/// Heisenberg algebra [x, y] = z graded by Z2 x Z2: x (1,0), y (0,1), z (1,1).
GradedAlgebra heisenberg3();
/// [x, y] = x, graded by Z3 with deg x = 1, deg y = 0.
GradedAlgebra two_dim_nonabelian_lie();

/// Registry names: m2_z2, m2, ut2, fz2, fz3, fz2xz2, free_trunc_<l>_<k>, sl2,
/// gl2_z2, heis3, aff1. Throws std::invalid_argument for unknown names.
GradedAlgebra builtin(const std::string& name);
std::vector<std::string> builtin_names();
std::vector<std::string> associative_builtin_names();
std::vector<std::string> lie_builtin_names();

Group klein_four();

} // namespace gradalg
