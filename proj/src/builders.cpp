#include "gradalg/builders.hpp"

#include <map>
#include <regex>
#include <stdexcept>

namespace gradalg {

namespace {

GradedAlgebra matrix_like(std::size_t n, bool upper, const Group& group,
                          const std::vector<GroupElem>& vertex, std::string name) {
  if (vertex.size() != n) throw std::invalid_argument("need one vertex degree per row");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = upper ? i : 0; j < n; ++j) units.emplace_back(i, j);
  const std::size_t d = units.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t t = 0; t < d; ++t) index[units[t]] = t;
  std::vector<Rat> s(d * d * d);
  std::vector<GroupElem> degrees;
  for (const auto& [i, j] : units) degrees.push_back(group.mul(group.inv(vertex[i]), vertex[j]));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (units[a].second == units[b].first)
        s[(a * d + b) * d + index.at({units[a].first, units[b].second})] = 1;
  Vec unit(d);
  for (std::size_t i = 0; i < n; ++i) unit[index.at({i, i})] = 1;
  return GradedAlgebra(AlgebraKind::associative, group, std::move(degrees), std::move(s), std::move(unit),
                       std::move(name));
}

std::vector<GroupElem> parity_vertices(const Group& z2, std::size_t n) {
  std::vector<GroupElem> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(z2.cyclic_elem(static_cast<std::int64_t>(i)));
  return v;
}

} // namespace

GradedAlgebra matrix_algebra(std::size_t n, const Group& group, const std::vector<GroupElem>& vertex_degrees,
                             std::string name) {
  return matrix_like(n, false, group, vertex_degrees, std::move(name));
}

GradedAlgebra matrix_algebra_z2(std::size_t n) {
  Group z2 = Group::cyclic(2);
  return matrix_algebra(n, z2, parity_vertices(z2, n), n == 2 ? "m2_z2" : "m" + std::to_string(n) + "_z2");
}

GradedAlgebra matrix_algebra_trivial(std::size_t n) {
  Group t = Group::trivial();
  return matrix_algebra(n, t, std::vector<GroupElem>(n, t.identity()), "m" + std::to_string(n));
}

GradedAlgebra upper_triangular(std::size_t n, const Group& group, const std::vector<GroupElem>& vertex_degrees,
                               std::string name) {
  return matrix_like(n, true, group, vertex_degrees, std::move(name));
}

GradedAlgebra upper_triangular_z2(std::size_t n) {
  Group z2 = Group::cyclic(2);
  return upper_triangular(n, z2, parity_vertices(z2, n), "ut" + std::to_string(n));
}

GradedAlgebra group_algebra(const Group& g, std::string name) {
  auto elems = g.elements();
  const std::size_t d = elems.size();
  std::map<GroupElem, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[elems[i]] = i;
  std::vector<Rat> s(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s[(i * d + j) * d + index.at(g.mul(elems[i], elems[j]))] = 1;
  Vec unit = unit_vec(d, index.at(g.identity()));
  return GradedAlgebra(AlgebraKind::associative, g, elems, std::move(s), std::move(unit), std::move(name));
}

GradedAlgebra free_group_truncation(std::size_t letters, std::size_t k) {
  if (letters < 1 || k < 1) throw std::invalid_argument("free_group_truncation needs l >= 1 and k >= 1");
  Group g = Group::free(static_cast<std::int32_t>(letters));
  std::vector<std::vector<std::int32_t>> words{{}};
  for (std::size_t len = 1, first = 0; len < k; ++len) {
    std::size_t last = words.size();
    for (std::size_t w = first; w < last; ++w)
      for (std::int32_t a = 1; a <= static_cast<std::int32_t>(letters); ++a) {
        auto u = words[w];
        u.push_back(a);
        words.push_back(std::move(u));
      }
    first = last;
  }
  const std::size_t d = words.size();
  std::map<std::vector<std::int32_t>, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[words[i]] = i;
  std::vector<Rat> s(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (words[i].size() + words[j].size() >= k) continue;
      auto w = words[i];
      w.insert(w.end(), words[j].begin(), words[j].end());
      s[(i * d + j) * d + index.at(w)] = 1;
    }
  std::vector<GroupElem> degrees;
  for (const auto& w : words) degrees.push_back(g.free_word(w));
  return GradedAlgebra(AlgebraKind::associative, g, std::move(degrees), std::move(s), unit_vec(d, 0),
                       "free_trunc_" + std::to_string(letters) + "_" + std::to_string(k));
}

GradedAlgebra lie_from_brackets(const Group& group, std::vector<GroupElem> degrees,
                                const std::vector<Bracket>& brackets, std::string name) {
  const std::size_t d = degrees.size();
  std::vector<Rat> s(d * d * d);
  for (const auto& b : brackets) {
    if (b.i >= d || b.j >= d || b.k >= d) throw std::invalid_argument("bracket index out of range");
    if (b.i == b.j) throw std::invalid_argument("bracket of a basis vector with itself");
    s[(b.i * d + b.j) * d + b.k] += b.coef;
    s[(b.j * d + b.i) * d + b.k] -= b.coef;
  }
  return GradedAlgebra(AlgebraKind::lie, group, std::move(degrees), std::move(s), std::nullopt, std::move(name));
}

GradedAlgebra sl2() {
  Group z = Group::free(1);
  // e = 0, h = 1, f = 2
  return lie_from_brackets(z, {z.free_word({1}), z.identity(), z.free_word({-1})},
                           {{1, 0, 0, 2}, {1, 2, 2, -2}, {0, 2, 1, 1}}, "sl2");
}

GradedAlgebra gl2_z2() { return commutator_algebra(matrix_algebra_z2(2), "gl2_z2"); }

Group klein_four() { return Group::product({Group::cyclic(2), Group::cyclic(2)}); }

GradedAlgebra heisenberg3() {
  Group k = klein_four();
  Group z2 = Group::cyclic(2);
  auto deg = [&](int a, int b) { return k.product_elem({z2.cyclic_elem(a), z2.cyclic_elem(b)}); };
  return lie_from_brackets(k, {deg(1, 0), deg(0, 1), deg(1, 1)}, {{0, 1, 2, 1}}, "heis3");
}

GradedAlgebra two_dim_nonabelian_lie() {
  Group z3 = Group::cyclic(3);
  return lie_from_brackets(z3, {z3.cyclic_elem(1), z3.cyclic_elem(0)}, {{0, 1, 0, 1}}, "aff1");
}

GradedAlgebra builtin(const std::string& name) {
  if (name == "m2_z2") return matrix_algebra_z2(2);
  if (name == "m2") return matrix_algebra_trivial(2);
  if (name == "ut2") return upper_triangular_z2(2);
  if (name == "fz2") return group_algebra(Group::cyclic(2), "fz2");
  if (name == "fz3") return group_algebra(Group::cyclic(3), "fz3");
  if (name == "fz2xz2") return group_algebra(klein_four(), "fz2xz2");
  if (name == "sl2") return sl2();
  if (name == "gl2_z2") return gl2_z2();
  if (name == "heis3") return heisenberg3();
  if (name == "aff1") return two_dim_nonabelian_lie();
  static const std::regex trunc(R"(free_trunc_(\d+)_(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, trunc)) {
    auto l = std::stoul(m[1]);
    auto k = std::stoul(m[2]);
    if (l < 1 || k < 1 || l > 4 || k > 4) throw std::invalid_argument("free_trunc parameters out of range 1..4");
    return free_group_truncation(l, k);
  }
  throw std::invalid_argument("unknown builtin \"" + name + "\"");
}

std::vector<std::string> associative_builtin_names() {
  return {"m2_z2", "m2", "ut2", "fz2", "fz3", "fz2xz2", "free_trunc_2_2", "free_trunc_2_3"};
}

std::vector<std::string> lie_builtin_names() { return {"sl2", "gl2_z2", "heis3", "aff1"}; }

std::vector<std::string> builtin_names() {
  auto names = associative_builtin_names();
  for (auto& n : lie_builtin_names()) names.push_back(n);
  return names;
}

} // namespace gradalg
