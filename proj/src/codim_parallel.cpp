#include "gradalg/identities.hpp"

#include "codim_kernel.hpp"
#include "gradalg/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <omp.h>

namespace gradalg {

CodimValue graded_codimension(const GradedAlgebra& a, std::size_t n, const CodimOptions& opts) {
  check_codim_caps(a, n, opts);
  const std::size_t m = a.support().size();
  const std::int64_t blocks = static_cast<std::int64_t>(detail::ipow_checked(m, n, opts.max_blocks));
  const auto perms = detail::permutations(n);

  std::uint64_t total = 0, nonzero = 0, max_rank = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total, nonzero) reduction(max : max_rank)
  for (std::int64_t b = 0; b < blocks; ++b) {
    std::uint64_t r = detail::block_rank(a, detail::decode_block(static_cast<std::uint64_t>(b), m, n), perms);
    total += r;
    if (r > 0) ++nonzero;
    max_rank = std::max(max_rank, r);
  }
  CodimValue out;
  out.value = total;
  out.stats = {static_cast<std::uint64_t>(blocks), nonzero, max_rank};
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

// Basis vectors b with h.b != 0, and the images h.b.
struct LabelImages {
  std::vector<std::size_t> basis;
  std::vector<Vec> images;
};

std::uint64_t tuple_key(const std::vector<std::size_t>& t, std::size_t d) {
  std::uint64_t key = 0;
  for (std::size_t b : t) key = key * d + b;
  return key;
}

template <class F>
void for_each_tuple(const std::vector<LabelImages>& lists, const std::vector<std::size_t>& labels, F&& f) {
  const std::size_t n = labels.size();
  for (std::size_t l : labels)
    if (lists[l].basis.empty()) return;
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    f(pos);
    std::size_t j = 0;
    while (j < n && ++pos[j] == lists[labels[j]].basis.size()) pos[j++] = 0;
    if (j == n) return;
  }
}

} // namespace

CodimValue h_codimension(const GradedAlgebra& a, std::size_t n, const CodimOptions& opts) {
  check_codim_caps(a, n, opts);
  const std::size_t m = a.support().size();
  const std::size_t d = a.dim();
  const std::uint64_t label_tuples = detail::ipow_checked(m, n, opts.max_blocks);

  std::vector<LabelImages> lists(m);
  for (std::size_t s = 0; s < m; ++s) {
    DualFunctional h = DualFunctional::delta(a.support()[s]);
    for (std::size_t b = 0; b < d; ++b) {
      Vec img = dual_action(h, a.basis_vector(b), a);
      if (is_zero(img)) continue;
      lists[s].basis.push_back(b);
      lists[s].images.push_back(std::move(img));
    }
  }

  // Rows for label tuples that reach a common basis tuple share columns; group them.
  UnionFind uf(label_tuples);
  std::unordered_map<std::uint64_t, std::size_t> owner;
  for (std::uint64_t l = 0; l < label_tuples; ++l) {
    auto labels = detail::decode_block(l, m, n);
    std::vector<std::size_t> t(n);
    for_each_tuple(lists, labels, [&](const std::vector<std::size_t>& pos) {
      for (std::size_t j = 0; j < n; ++j) t[j] = lists[labels[j]].basis[pos[j]];
      auto [it, fresh] = owner.emplace(tuple_key(t, d), l);
      if (!fresh) uf.unite(l, it->second);
    });
  }
  std::map<std::size_t, std::vector<std::uint64_t>> groups;
  for (std::uint64_t l = 0; l < label_tuples; ++l) groups[uf.find(l)].push_back(l);
  std::vector<std::vector<std::uint64_t>> group_list;
  for (auto& [root, members] : groups) group_list.push_back(std::move(members));

  const auto perms = detail::permutations(n);
  std::uint64_t total = 0, nonzero = 0, max_rank = 0;
  const std::int64_t count = static_cast<std::int64_t>(group_list.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total, nonzero) reduction(max : max_rank)
  for (std::int64_t g = 0; g < count; ++g) {
    const auto& members = group_list[static_cast<std::size_t>(g)];
    const std::size_t rows = members.size() * perms.size();
    std::unordered_map<std::uint64_t, std::vector<Rat>> columns;
    for (std::size_t mi = 0; mi < members.size(); ++mi) {
      auto labels = detail::decode_block(members[mi], m, n);
      std::vector<std::size_t> t(n);
      for_each_tuple(lists, labels, [&](const std::vector<std::size_t>& pos) {
        for (std::size_t j = 0; j < n; ++j) t[j] = lists[labels[j]].basis[pos[j]];
        const std::uint64_t key = tuple_key(t, d);
        for (std::size_t r = 0; r < perms.size(); ++r) {
          const auto& p = perms[r];
          Vec acc = lists[labels[p[0]]].images[pos[p[0]]];
          for (std::size_t i = 1; i < n && !is_zero(acc); ++i)
            acc = a.multiply(acc, lists[labels[p[i]]].images[pos[p[i]]]);
          for (std::size_t k = 0; k < d; ++k) {
            if (acc[k] == 0) continue;
            auto& col = columns[key * d + k];
            if (col.empty()) col.assign(rows, Rat(0));
            col[mi * perms.size() + r] += acc[k];
          }
        }
      });
    }
    std::vector<std::vector<Rat>> cols;
    cols.reserve(columns.size());
    for (auto& [key, col] : columns) cols.push_back(std::move(col));
    std::uint64_t r = detail::rank_of_columns(std::move(cols), rows);
    total += r;
    if (r > 0) ++nonzero;
    max_rank = std::max(max_rank, r);
  }
  CodimValue out;
  out.value = total;
  out.stats = {static_cast<std::uint64_t>(group_list.size()), nonzero, max_rank};
  return out;
}

} // namespace gradalg
