#include "gradalg/group.hpp"

#include <stdexcept>

namespace gradalg {

std::size_t GroupElemHash::operator()(const GroupElem& g) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : g.code()) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

struct Group::Impl {
  GroupKind kind = GroupKind::trivial;
  std::int32_t n = 1; // cyclic order or free rank
  std::vector<std::vector<std::int32_t>> mult;
  std::vector<std::int32_t> inverse;
  std::int32_t identity_index = 0;
  std::vector<Group> factors;
};

Group Group::trivial() { return Group(std::make_shared<Impl>()); }

Group Group::cyclic(std::int32_t n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::cyclic;
  impl->n = n;
  return Group(std::move(impl));
}

Group Group::table(std::vector<std::vector<std::int32_t>> mult,
                   std::optional<std::vector<std::int32_t>> inverse) {
  const auto n = static_cast<std::int32_t>(mult.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  for (const auto& row : mult) {
    if (static_cast<std::int32_t>(row.size()) != n)
      throw std::invalid_argument("multiplication table is not square");
    for (auto x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("multiplication table entry out of range");
  }
  std::int32_t e = -1;
  for (std::int32_t i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (std::int32_t j = 0; j < n && ok; ++j) ok = mult[i][j] == j && mult[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw std::invalid_argument("multiplication table has no identity");
  for (std::int32_t a = 0; a < n; ++a)
    for (std::int32_t b = 0; b < n; ++b)
      for (std::int32_t c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw std::invalid_argument("multiplication table is not associative");
  std::vector<std::int32_t> inv(n, -1);
  for (std::int32_t a = 0; a < n; ++a)
    for (std::int32_t b = 0; b < n; ++b)
      if (mult[a][b] == e && mult[b][a] == e) inv[a] = b;
  for (auto x : inv)
    if (x < 0) throw std::invalid_argument("multiplication table element without inverse");
  if (inverse && *inverse != inv) throw std::invalid_argument("inverse table disagrees with multiplication");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::table;
  impl->n = n;
  impl->mult = std::move(mult);
  impl->inverse = std::move(inv);
  impl->identity_index = e;
  return Group(std::move(impl));
}

Group Group::free(std::int32_t rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::free;
  impl->n = rank;
  return Group(std::move(impl));
}

Group Group::product(std::vector<Group> factors) {
  if (factors.empty()) throw std::invalid_argument("direct product needs at least one factor");
  auto impl = std::make_shared<Impl>();
  impl->kind = GroupKind::product;
  impl->factors = std::move(factors);
  return Group(std::move(impl));
}

GroupKind Group::kind() const { return impl_->kind; }

std::optional<std::size_t> Group::order() const {
  switch (impl_->kind) {
    case GroupKind::trivial: return 1;
    case GroupKind::cyclic:
    case GroupKind::table: return static_cast<std::size_t>(impl_->n);
    case GroupKind::free: return std::nullopt;
    case GroupKind::product: {
      std::size_t total = 1;
      for (const auto& f : impl_->factors) {
        auto o = f.order();
        if (!o) return std::nullopt;
        total *= *o;
      }
      return total;
    }
  }
  return std::nullopt;
}

std::int32_t Group::cyclic_order() const { return impl_->n; }
std::int32_t Group::free_rank() const { return impl_->n; }
const std::vector<std::vector<std::int32_t>>& Group::table_mult() const { return impl_->mult; }
const std::vector<Group>& Group::factors() const { return impl_->factors; }

GroupElem Group::identity() const {
  switch (impl_->kind) {
    case GroupKind::trivial:
    case GroupKind::free: return GroupElem{};
    case GroupKind::cyclic: return GroupElem({0});
    case GroupKind::table: return GroupElem({impl_->identity_index});
    case GroupKind::product: {
      std::vector<GroupElem> parts;
      for (const auto& f : impl_->factors) parts.push_back(f.identity());
      return product_elem(parts);
    }
  }
  return GroupElem{};
}

namespace {

std::vector<GroupElem> split_product(const std::vector<std::int32_t>& code, std::size_t count) {
  std::vector<GroupElem> parts;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (pos >= code.size()) throw std::invalid_argument("truncated product element");
    auto len = code[pos++];
    if (len < 0 || pos + static_cast<std::size_t>(len) > code.size())
      throw std::invalid_argument("malformed product element");
    parts.emplace_back(std::vector<std::int32_t>(code.begin() + static_cast<std::ptrdiff_t>(pos),
                                                 code.begin() + static_cast<std::ptrdiff_t>(pos) + len));
    pos += static_cast<std::size_t>(len);
  }
  if (pos != code.size()) throw std::invalid_argument("trailing data in product element");
  return parts;
}

} // namespace

bool Group::is_element(const GroupElem& a) const {
  const auto& c = a.code();
  switch (impl_->kind) {
    case GroupKind::trivial: return c.empty();
    case GroupKind::cyclic:
    case GroupKind::table: return c.size() == 1 && c[0] >= 0 && c[0] < impl_->n;
    case GroupKind::free:
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0 || c[i] > impl_->n || c[i] < -impl_->n) return false;
        if (i > 0 && c[i] == -c[i - 1]) return false;
      }
      return true;
    case GroupKind::product: {
      try {
        auto parts = split_product(c, impl_->factors.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (!impl_->factors[i].is_element(parts[i])) return false;
        return true;
      } catch (const std::invalid_argument&) {
        return false;
      }
    }
  }
  return false;
}

void Group::validate(const GroupElem& a) const {
  if (!is_element(a)) throw std::invalid_argument("element does not belong to this group");
}

GroupElem Group::mul(const GroupElem& a, const GroupElem& b) const {
  validate(a);
  validate(b);
  switch (impl_->kind) {
    case GroupKind::trivial: return a;
    case GroupKind::cyclic: return GroupElem({(a.code()[0] + b.code()[0]) % impl_->n});
    case GroupKind::table: return GroupElem({impl_->mult[a.code()[0]][b.code()[0]]});
    case GroupKind::free: {
      std::vector<std::int32_t> w = a.code();
      for (auto x : b.code()) {
        if (!w.empty() && w.back() == -x)
          w.pop_back();
        else
          w.push_back(x);
      }
      return GroupElem(std::move(w));
    }
    case GroupKind::product: {
      auto pa = split_product(a.code(), impl_->factors.size());
      auto pb = split_product(b.code(), impl_->factors.size());
      std::vector<GroupElem> parts;
      for (std::size_t i = 0; i < pa.size(); ++i) parts.push_back(impl_->factors[i].mul(pa[i], pb[i]));
      return product_elem(parts);
    }
  }
  return a;
}

GroupElem Group::inv(const GroupElem& a) const {
  validate(a);
  switch (impl_->kind) {
    case GroupKind::trivial: return a;
    case GroupKind::cyclic: return GroupElem({(impl_->n - a.code()[0]) % impl_->n});
    case GroupKind::table: return GroupElem({impl_->inverse[a.code()[0]]});
    case GroupKind::free: {
      std::vector<std::int32_t> w(a.code().rbegin(), a.code().rend());
      for (auto& x : w) x = -x;
      return GroupElem(std::move(w));
    }
    case GroupKind::product: {
      auto pa = split_product(a.code(), impl_->factors.size());
      std::vector<GroupElem> parts;
      for (std::size_t i = 0; i < pa.size(); ++i) parts.push_back(impl_->factors[i].inv(pa[i]));
      return product_elem(parts);
    }
  }
  return a;
}

GroupElem Group::cyclic_elem(std::int64_t residue) const {
  if (impl_->kind != GroupKind::cyclic) throw std::invalid_argument("not a cyclic group");
  auto r = residue % impl_->n;
  if (r < 0) r += impl_->n;
  return GroupElem({static_cast<std::int32_t>(r)});
}

GroupElem Group::table_elem(std::int32_t index) const {
  if (impl_->kind != GroupKind::table) throw std::invalid_argument("not a table group");
  GroupElem g({index});
  validate(g);
  return g;
}

GroupElem Group::free_word(const std::vector<std::int32_t>& letters) const {
  if (impl_->kind != GroupKind::free) throw std::invalid_argument("not a free group");
  std::vector<std::int32_t> w;
  for (auto x : letters) {
    if (x == 0 || x > impl_->n || x < -impl_->n) throw std::invalid_argument("free generator out of range");
    if (!w.empty() && w.back() == -x)
      w.pop_back();
    else
      w.push_back(x);
  }
  return GroupElem(std::move(w));
}

GroupElem Group::product_elem(const std::vector<GroupElem>& parts) const {
  if (impl_->kind != GroupKind::product) throw std::invalid_argument("not a product group");
  if (parts.size() != impl_->factors.size()) throw std::invalid_argument("wrong number of product components");
  std::vector<std::int32_t> code;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    impl_->factors[i].validate(parts[i]);
    code.push_back(static_cast<std::int32_t>(parts[i].code().size()));
    code.insert(code.end(), parts[i].code().begin(), parts[i].code().end());
  }
  return GroupElem(std::move(code));
}

std::vector<GroupElem> Group::components(const GroupElem& a) const {
  if (impl_->kind != GroupKind::product) throw std::invalid_argument("not a product group");
  validate(a);
  return split_product(a.code(), impl_->factors.size());
}

std::vector<GroupElem> Group::elements() const {
  switch (impl_->kind) {
    case GroupKind::trivial: return {GroupElem{}};
    case GroupKind::cyclic:
    case GroupKind::table: {
      std::vector<GroupElem> out;
      for (std::int32_t i = 0; i < impl_->n; ++i) out.emplace_back(std::vector<std::int32_t>{i});
      return out;
    }
    case GroupKind::free: throw std::invalid_argument("free group is infinite");
    case GroupKind::product: {
      std::vector<std::vector<GroupElem>> per;
      for (const auto& f : impl_->factors) per.push_back(f.elements());
      std::vector<std::vector<GroupElem>> tuples{{}};
      for (const auto& elems : per) {
        std::vector<std::vector<GroupElem>> next;
        for (const auto& t : tuples)
          for (const auto& g : elems) {
            auto u = t;
            u.push_back(g);
            next.push_back(std::move(u));
          }
        tuples = std::move(next);
      }
      std::vector<GroupElem> out;
      for (const auto& t : tuples) out.push_back(product_elem(t));
      return out;
    }
  }
  return {};
}

std::string Group::to_string(const GroupElem& a) const {
  validate(a);
  switch (impl_->kind) {
    case GroupKind::trivial: return "e";
    case GroupKind::cyclic:
    case GroupKind::table: return std::to_string(a.code()[0]);
    case GroupKind::free: {
      if (a.code().empty()) return "e";
      std::string s;
      for (auto x : a.code()) {
        if (!s.empty()) s += '.';
        s += "a" + std::to_string(x > 0 ? x : -x);
        if (x < 0) s += '\'';
      }
      return s;
    }
    case GroupKind::product: {
      auto parts = split_product(a.code(), impl_->factors.size());
      std::string s = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += impl_->factors[i].to_string(parts[i]);
      }
      return s + ")";
    }
  }
  return "";
}

bool operator==(const Group& a, const Group& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = *a.impl_;
  const auto& y = *b.impl_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case GroupKind::trivial: return true;
    case GroupKind::cyclic:
    case GroupKind::free: return x.n == y.n;
    case GroupKind::table: return x.mult == y.mult;
    case GroupKind::product: return x.factors == y.factors;
  }
  return false;
}

} // namespace gradalg
