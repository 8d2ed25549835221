#include "gradalg/identities.hpp"

#include "codim_kernel.hpp"
#include "gradalg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gradalg {

namespace detail {

std::uint64_t ipow_checked(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::vector<std::size_t> decode_block(std::uint64_t index, std::size_t m, std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t j = n; j-- > 0;) {
    labels[j] = static_cast<std::size_t>(index % m);
    index /= m;
  }
  return labels;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

using Sparse = std::vector<std::pair<std::size_t, Rat>>;

// (sum of v) * e_b, left-normed.
Sparse times_basis(const GradedAlgebra& a, const Sparse& v, std::size_t b) {
  Sparse out;
  for (const auto& [i, c] : v)
    for (const auto& t : a.product_terms(i, b)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == t.k; });
      if (it == out.end()) out.emplace_back(t.k, c * t.coef);
      else it->second += c * t.coef;
    }
  std::erase_if(out, [](const auto& p) { return p.second == 0; });
  return out;
}

void normalize(std::vector<Rat>& col) {
  auto it = std::find_if(col.begin(), col.end(), [](const Rat& x) { return x != 0; });
  if (it == col.end()) return;
  Rat lead = *it;
  for (auto& x : col) x /= lead;
}

} // namespace

std::uint64_t rank_of_columns(std::vector<std::vector<Rat>> columns, std::size_t rows) {
  std::set<std::vector<Rat>> unique;
  for (auto& c : columns) {
    if (is_zero(c)) continue;
    normalize(c);
    unique.insert(std::move(c));
  }
  if (unique.empty()) return 0;
  std::vector<Vec> vs(unique.begin(), unique.end());
  return rank(Mat::from_rows(rows, vs));
}

std::uint64_t block_rank(const GradedAlgebra& a, const std::vector<std::size_t>& labels,
                         const std::vector<std::vector<std::size_t>>& perms) {
  const std::size_t n = labels.size();
  const std::size_t d = a.dim();
  std::vector<const std::vector<std::size_t>*> comps;
  std::size_t tuples = 1;
  for (std::size_t l : labels) {
    comps.push_back(&a.component(l));
    tuples *= comps.back()->size();
  }
  std::vector<std::vector<Rat>> columns(tuples * d, std::vector<Rat>(perms.size()));
  std::vector<std::size_t> pos(n, 0), tuple(n);
  for (std::size_t t = 0; t < tuples; ++t) {
    for (std::size_t j = 0; j < n; ++j) tuple[j] = (*comps[j])[pos[j]];
    for (std::size_t r = 0; r < perms.size(); ++r) {
      const auto& p = perms[r];
      Sparse acc{{tuple[p[0]], Rat(1)}};
      for (std::size_t i = 1; i < n && !acc.empty(); ++i) acc = times_basis(a, acc, tuple[p[i]]);
      for (const auto& [k, c] : acc) columns[t * d + k][r] = c;
    }
    std::size_t j = 0;
    while (j < n && ++pos[j] == comps[j]->size()) pos[j++] = 0;
  }
  return rank_of_columns(std::move(columns), perms.size());
}

} // namespace detail

void check_codim_caps(const GradedAlgebra& a, std::size_t n, const CodimOptions& opts) {
  if (n == 0) throw std::invalid_argument("codimension needs n >= 1");
  if (n > opts.max_n)
    throw ResourceCapExceeded("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(opts.max_n));
  std::uint64_t blocks = detail::ipow_checked(a.support().size(), n, opts.max_blocks);
  if (blocks > opts.max_blocks)
    throw ResourceCapExceeded("m^n blocks exceed the cap " + std::to_string(opts.max_blocks));
}

DegreeAssignment make_assignment(const GradedAlgebra& a, const std::vector<GroupElem>& degrees) {
  DegreeAssignment tau;
  for (const auto& g : degrees) {
    auto s = a.find_support(g);
    if (!s) throw std::invalid_argument("degree " + a.group().to_string(g) + " is outside the support");
    tau.labels.push_back(*s);
  }
  return tau;
}

std::uint64_t codim_block(const GradedAlgebra& a, const DegreeAssignment& tau) {
  if (tau.arity() == 0) throw std::invalid_argument("empty degree assignment");
  for (std::size_t l : tau.labels)
    if (l >= a.support().size()) throw std::invalid_argument("degree label outside the support");
  return detail::block_rank(a, tau.labels, detail::permutations(tau.arity()));
}

CodimValue graded_codimension_serial(const GradedAlgebra& a, std::size_t n, const CodimOptions& opts) {
  check_codim_caps(a, n, opts);
  const std::size_t m = a.support().size();
  const std::uint64_t blocks = detail::ipow_checked(m, n, opts.max_blocks);
  const auto perms = detail::permutations(n);
  CodimValue out;
  out.stats.blocks = blocks;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    std::uint64_t r = detail::block_rank(a, detail::decode_block(b, m, n), perms);
    out.value += r;
    if (r > 0) ++out.stats.nonzero_blocks;
    out.stats.max_rank = std::max(out.stats.max_rank, r);
  }
  return out;
}

std::optional<std::uint64_t> nilpotent_shortcut(const GradedAlgebra& a, std::size_t n) {
  auto p = nilpotency_index(a, a.whole());
  if (p && *p <= n) return 0;
  return std::nullopt;
}

} // namespace gradalg
