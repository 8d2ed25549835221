#pragma once

#include "gradalg/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gradalg {

/// Degree label of each variable x_0..x_{n-1}, as indices into A.support().
struct DegreeAssignment {
  std::vector<std::size_t> labels;
  std::size_t arity() const { return labels.size(); }
};

struct CodimOptions {
  std::size_t max_n = 6;
  std::uint64_t max_blocks = 100000;
};

struct BlockStats {
  std::uint64_t blocks = 0;
  std::uint64_t nonzero_blocks = 0;
  std::uint64_t max_rank = 0;
};

struct CodimValue {
  std::uint64_t value = 0;
  BlockStats stats;
};

/// Rank of the evaluation matrix of the n! monomials with this labelling:
/// rows are permutations, columns (basis tuple matching the labels) x output coordinate.
std::uint64_t codim_block(const GradedAlgebra& a, const DegreeAssignment& tau);
DegreeAssignment make_assignment(const GradedAlgebra& a, const std::vector<GroupElem>& degrees);

/// c_n^gr(A) = sum over labellings of codim_block. Blocks are evaluated in parallel.
CodimValue graded_codimension(const GradedAlgebra& a, std::size_t n, const CodimOptions& opts = {});
/// Single-threaded reference for graded_codimension.
CodimValue graded_codimension_serial(const GradedAlgebra& a, std::size_t n, const CodimOptions& opts = {});

/// 0 when A^p = 0 for some p <= n, nullopt otherwise.
std::optional<std::uint64_t> nilpotent_shortcut(const GradedAlgebra& a, std::size_t n);

/// c_n^H(A) for H = (FG)^* acting through delta functions. Evaluates H-monomials
/// on arbitrary basis tuples through the dual action and ranks the connected
/// pieces of the resulting evaluation matrix.
CodimValue h_codimension(const GradedAlgebra& a, std::size_t n, const CodimOptions& opts = {});

/// Throws ResourceCapExceeded if (n, m^n) exceeds the caps.
void check_codim_caps(const GradedAlgebra& a, std::size_t n, const CodimOptions& opts);

enum class CodimMode { gr, h, both };

struct CodimEntry {
  std::size_t n = 0;
  std::uint64_t value = 0;
  std::optional<std::uint64_t> h_value;
  BlockStats stats;
  bool shortcut = false; // value certified by nilpotency, no ranks computed
};

struct CodimReport {
  std::string algebra;
  std::size_t algebra_dim = 0;
  std::vector<CodimEntry> entries; // n = 1..N
};

CodimReport codimension_report(const GradedAlgebra& a, std::size_t n_max, CodimMode mode,
                               const CodimOptions& opts = {});

/// floor(c^(1/n) * 10^digits) / 10^digits, exactly.
Rat nth_root_truncated(std::uint64_t c, std::size_t n, unsigned digits = 6);

enum class ExponentVerdictKind { consistent, inconsistent, nilpotent, no_prediction };
std::string to_string(ExponentVerdictKind k);

struct ExponentVerdict {
  ExponentVerdictKind kind = ExponentVerdictKind::no_prediction;
  std::vector<std::string> roots;  // c_n^(1/n), truncated decimals
  std::vector<std::optional<Rat>> ratios; // c_{n+1} / c_n, nullopt when c_n = 0
  std::optional<std::uint64_t> predicted_d;
  long r_bound = 0;
  std::optional<Rat> c_lower; // C1 for C1 n^-R d^n <= c_n
  std::optional<Rat> c_upper; // C2 for c_n <= C2 n^R d^n
  std::string detail;
};

/// Checks the finite range against C1 n^{-R} d^n <= c_n <= C2 n^{R} d^n through
/// the normalised ratios q_{n+1}/q_n (q_n = c_n / d^n), which must lie in
/// [(n/(n+1))^R, ((n+1)/n)^R]. R defaults to dim A. Never claims a limit.
ExponentVerdict exponent_estimate(const CodimReport& report, std::optional<std::uint64_t> predicted_d,
                                  std::optional<long> r_bound = std::nullopt);

} // namespace gradalg
