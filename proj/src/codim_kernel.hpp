#pragma once

#include "gradalg/algebra.hpp"

#include <cstdint>
#include <vector>

namespace gradalg::detail {

std::uint64_t ipow_checked(std::uint64_t base, std::size_t exp, std::uint64_t cap);

/// Labels of block `index` in lexicographic order over {0..m-1}^n.
std::vector<std::size_t> decode_block(std::uint64_t index, std::size_t m, std::size_t n);

/// All permutations of 0..n-1 in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

/// Rank of the rows-by-permutation evaluation matrix of one degree block.
std::uint64_t block_rank(const GradedAlgebra& a, const std::vector<std::size_t>& labels,
                         const std::vector<std::vector<std::size_t>>& perms);

/// Rank of a set of rows given column-wise: every column has one entry per row.
/// Zero columns are dropped and proportional columns merged first.
std::uint64_t rank_of_columns(std::vector<std::vector<Rat>> columns, std::size_t rows);

} // namespace gradalg::detail
