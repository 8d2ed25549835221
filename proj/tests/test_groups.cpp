#include "gradalg/builders.hpp"
#include "gradalg/group.hpp"

#include <doctest.h>

#include <random>

using namespace gradalg;

namespace {

// S3 as permutations of {0,1,2}, listed in a fixed order.
std::vector<std::array<int, 3>> s3_perms() {
  return {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
}

Group s3() {
  auto ps = s3_perms();
  std::vector<std::vector<std::int32_t>> mult(6, std::vector<std::int32_t>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = ps[i][ps[j][x]];
      mult[i][j] = static_cast<std::int32_t>(std::find(ps.begin(), ps.end(), c) - ps.begin());
    }
  return Group::table(mult);
}

void check_axioms_exhaustive(const Group& g) {
  auto els = g.elements();
  for (const auto& a : els) {
    CHECK(g.mul(a, g.identity()) == a);
    CHECK(g.mul(g.identity(), a) == a);
    CHECK(g.is_identity(g.mul(g.inv(a), a)));
    for (const auto& b : els)
      for (const auto& c : els) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

} // namespace

TEST_CASE("cyclic groups") {
  Group z2 = Group::cyclic(2);
  CHECK(z2.mul(z2.cyclic_elem(1), z2.cyclic_elem(1)) == z2.cyclic_elem(0));
  CHECK(z2.cyclic_elem(-1) == z2.cyclic_elem(1));
  check_axioms_exhaustive(Group::cyclic(5));
  CHECK(Group::cyclic(4).order() == 4u);
}

TEST_CASE("free group reduction") {
  Group f = Group::free(2);
  GroupElem a1a2 = f.free_word({1, 2});
  GroupElem a2inv = f.free_word({-2});
  CHECK(f.mul(a1a2, a2inv) == f.free_word({1}));
  CHECK(f.to_string(f.free_word({1, -2})) == "a1.a2'");
  CHECK(f.to_string(f.identity()) == "e");
  CHECK(f.free_word({1, 2, -2, -1}) == f.identity());
  CHECK_FALSE(f.order().has_value());

  std::mt19937 rng(1);
  auto random_word = [&] {
    std::vector<std::int32_t> w;
    std::size_t len = rng() % 6;
    for (std::size_t i = 0; i < len; ++i) w.push_back((rng() % 2 ? 1 : -1) * static_cast<std::int32_t>(1 + rng() % 2));
    return f.free_word(w);
  };
  for (int i = 0; i < 1000; ++i) {
    auto a = random_word(), b = random_word(), c = random_word();
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.is_identity(f.mul(f.inv(a), a)));
    CHECK(f.mul(a, f.identity()) == a);
    const auto& code = f.mul(a, b).code();
    for (std::size_t k = 1; k < code.size(); ++k) CHECK(code[k] != -code[k - 1]);
  }
}

TEST_CASE("table group S3") {
  Group g = s3();
  check_axioms_exhaustive(g);
  auto ps = s3_perms();
  // two transpositions compose to a 3-cycle
  GroupElem t1 = g.table_elem(1), t2 = g.table_elem(2);
  GroupElem p = g.mul(t1, t2);
  std::array<int, 3> c{};
  for (int x = 0; x < 3; ++x) c[x] = ps[1][ps[2][x]];
  CHECK(p == g.table_elem(static_cast<std::int32_t>(std::find(ps.begin(), ps.end(), c) - ps.begin())));
  CHECK((p == g.table_elem(4) || p == g.table_elem(5)));
  CHECK_FALSE(g.mul(t1, t2) == g.mul(t2, t1));
}

TEST_CASE("bad tables are rejected") {
  CHECK_THROWS(Group::table({{0, 1}, {1, 1}}));
  CHECK_THROWS(Group::table({{0, 1, 2}, {1, 1, 2}, {2, 2, 0}}));
  CHECK_NOTHROW(Group::table({{1, 0}, {0, 1}}));  // identity at index 1
  CHECK_THROWS(Group::table({{0, 1}, {1, 0}}, std::vector<std::int32_t>{1, 0}));
}

TEST_CASE("product groups") {
  Group k = klein_four();
  check_axioms_exhaustive(k);
  CHECK(k.order() == 4u);
  Group mixed = Group::product({Group::cyclic(2), Group::free(1)});
  GroupElem x = mixed.product_elem({Group::cyclic(2).cyclic_elem(1), Group::free(1).free_word({1})});
  GroupElem y = mixed.mul(x, x);
  CHECK(mixed.components(y)[0] == Group::cyclic(2).cyclic_elem(0));
  CHECK(mixed.components(y)[1] == Group::free(1).free_word({1, 1}));
  CHECK(mixed.is_identity(mixed.mul(x, mixed.inv(x))));
  CHECK(mixed.to_string(x) == "(1,a1)");
}

TEST_CASE("element validation") {
  Group z3 = Group::cyclic(3);
  CHECK(z3.is_element(z3.cyclic_elem(2)));
  CHECK_FALSE(z3.is_element(GroupElem({5})));
  CHECK_THROWS_AS(z3.validate(GroupElem({5})), std::invalid_argument);
  CHECK_THROWS(Group::free(2).free_word({3}));
}
