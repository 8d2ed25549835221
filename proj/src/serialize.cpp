#include "gradalg/serialize.hpp"

#include "gradalg/errors.hpp"

#include <map>
#include <set>
#include <tuple>

namespace gradalg {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

Rat as_rat(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) fail(where, "expected a rational \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

std::size_t as_index(const Json& j, std::size_t bound, const std::string& where) {
  std::int64_t v = as_int(j, where);
  if (v < 0 || static_cast<std::uint64_t>(v) >= bound)
    fail(where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

GroupElem parse_free_word(const Group& g, const std::string& s, const std::string& where) {
  if (s.empty() || s == "e") return g.identity();
  std::vector<std::int32_t> letters;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t dot = s.find('.', i);
    std::string tok = s.substr(i, dot == std::string::npos ? std::string::npos : dot - i);
    bool inverse = !tok.empty() && tok.back() == '\'';
    if (inverse) tok.pop_back();
    if (tok.size() < 2 || tok[0] != 'a' || tok.find_first_not_of("0123456789", 1) != std::string::npos)
      fail(where, "malformed free-group letter in \"" + s + "\"");
    long k = std::stol(tok.substr(1));
    if (k < 1 || k > g.free_rank()) fail(where, "generator a" + std::to_string(k) + " outside the free group");
    letters.push_back(static_cast<std::int32_t>(inverse ? -k : k));
    if (dot == std::string::npos) break;
    i = dot + 1;
  }
  return g.free_word(letters);
}

} // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json group_to_json(const Group& g) {
  Json j;
  switch (g.kind()) {
    case GroupKind::trivial: j["type"] = "trivial"; break;
    case GroupKind::cyclic:
      j["type"] = "cyclic";
      j["order"] = g.cyclic_order();
      break;
    case GroupKind::table:
      j["type"] = "table";
      j["table"] = g.table_mult();
      break;
    case GroupKind::free:
      j["type"] = "free";
      j["rank"] = g.free_rank();
      break;
    case GroupKind::product: {
      j["type"] = "product";
      Json fs = Json::array();
      for (const auto& f : g.factors()) fs.push_back(group_to_json(f));
      j["factors"] = fs;
      break;
    }
  }
  return j;
}

Group group_from_json(const Json& j, const std::string& where) {
  const Json& type = field(j, "type", where);
  if (!type.is_string()) fail(where + "/type", "expected a string");
  const std::string t = type.get<std::string>();
  try {
    if (t == "trivial") return Group::trivial();
    if (t == "cyclic") {
      std::int64_t n = as_int(field(j, "order", where), where + "/order");
      if (n < 1 || n > 1000000) fail(where + "/order", "cyclic order must be in 1..10^6");
      return Group::cyclic(static_cast<std::int32_t>(n));
    }
    if (t == "free") {
      std::int64_t r = as_int(field(j, "rank", where), where + "/rank");
      if (r < 1 || r > 64) fail(where + "/rank", "free rank must be in 1..64");
      return Group::free(static_cast<std::int32_t>(r));
    }
    if (t == "table") {
      const Json& tab = field(j, "table", where);
      if (!tab.is_array() || tab.empty()) fail(where + "/table", "expected a non-empty square array");
      std::vector<std::vector<std::int32_t>> mult;
      for (std::size_t r = 0; r < tab.size(); ++r) {
        const std::string w = where + "/table/" + std::to_string(r);
        if (!tab[r].is_array() || tab[r].size() != tab.size()) fail(w, "row length differs from table size");
        std::vector<std::int32_t> row;
        for (std::size_t c = 0; c < tab[r].size(); ++c)
          row.push_back(static_cast<std::int32_t>(as_index(tab[r][c], tab.size(), w + "/" + std::to_string(c))));
        mult.push_back(std::move(row));
      }
      return Group::table(std::move(mult));
    }
    if (t == "product") {
      const Json& fs = field(j, "factors", where);
      if (!fs.is_array() || fs.empty()) fail(where + "/factors", "expected a non-empty array");
      std::vector<Group> factors;
      for (std::size_t i = 0; i < fs.size(); ++i)
        factors.push_back(group_from_json(fs[i], where + "/factors/" + std::to_string(i)));
      return Group::product(std::move(factors));
    }
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  fail(where + "/type", "unknown group type \"" + t + "\"");
}

Json element_to_json(const Group& g, const GroupElem& x) {
  switch (g.kind()) {
    case GroupKind::trivial: return 0;
    case GroupKind::cyclic:
    case GroupKind::table: return x.code()[0];
    case GroupKind::free: return g.to_string(x);
    case GroupKind::product: {
      Json parts = Json::array();
      auto cs = g.components(x);
      for (std::size_t i = 0; i < cs.size(); ++i) parts.push_back(element_to_json(g.factors()[i], cs[i]));
      return parts;
    }
  }
  return nullptr;
}

GroupElem element_from_json(const Group& g, const Json& j, const std::string& where) {
  switch (g.kind()) {
    case GroupKind::trivial:
      if ((j.is_number_integer() && j.get<std::int64_t>() == 0) || (j.is_string() && j.get<std::string>() == "e"))
        return g.identity();
      fail(where, "the trivial group has only 0 (or \"e\")");
    case GroupKind::cyclic: return g.cyclic_elem(as_int(j, where));
    case GroupKind::table:
      return g.table_elem(static_cast<std::int32_t>(as_index(j, *g.order(), where)));
    case GroupKind::free:
      if (!j.is_string()) fail(where, "expected a free-group word such as \"a1.a2'\"");
      return parse_free_word(g, j.get<std::string>(), where);
    case GroupKind::product: {
      if (!j.is_array() || j.size() != g.factors().size())
        fail(where, "expected an array with one entry per factor");
      std::vector<GroupElem> parts;
      for (std::size_t i = 0; i < j.size(); ++i)
        parts.push_back(element_from_json(g.factors()[i], j[i], where + "/" + std::to_string(i)));
      return g.product_elem(parts);
    }
  }
  fail(where, "unsupported group");
}

Json algebra_to_json(const GradedAlgebra& a) {
  Json j;
  j["kind"] = to_string(a.kind());
  j["dim"] = a.dim();
  j["group"] = group_to_json(a.group());
  Json degs = Json::array();
  for (const auto& g : a.degrees()) degs.push_back(element_to_json(a.group(), g));
  j["degrees"] = degs;
  Json st = Json::array();
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l)
        if (a.coef(i, k, l) != 0) st.push_back(Json::array({i, k, l, to_string(a.coef(i, k, l))}));
  j["structure"] = st;
  if (a.unit()) {
    Json u = Json::array();
    for (const auto& x : *a.unit()) u.push_back(to_string(x));
    j["unit"] = u;
  }
  if (!a.name().empty()) j["name"] = a.name();
  return j;
}

GradedAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an algebra object");
  const Json& kind_j = field(j, "kind", "");
  AlgebraKind kind;
  if (kind_j == "associative") kind = AlgebraKind::associative;
  else if (kind_j == "lie") kind = AlgebraKind::lie;
  else fail("/kind", "expected \"associative\" or \"lie\"");

  std::int64_t dim_i = as_int(field(j, "dim", ""), "/dim");
  if (dim_i < 1 || dim_i > 64) fail("/dim", "dimension must be in 1..64");
  const auto d = static_cast<std::size_t>(dim_i);
  Group group = group_from_json(field(j, "group", ""), "/group");

  const Json& degs = field(j, "degrees", "");
  if (!degs.is_array() || degs.size() != d) fail("/degrees", "expected " + std::to_string(d) + " entries");
  std::vector<GroupElem> degrees;
  for (std::size_t i = 0; i < d; ++i) {
    const std::string w = "/degrees/" + std::to_string(i);
    try {
      degrees.push_back(element_from_json(group, degs[i], w));
    } catch (const std::invalid_argument& e) {
      fail(w, e.what());
    }
  }

  const Json& st = field(j, "structure", "");
  if (!st.is_array()) fail("/structure", "expected an array of [i, j, k, \"p/q\"]");
  std::vector<Rat> structure(d * d * d);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < st.size(); ++e) {
    const std::string w = "/structure/" + std::to_string(e);
    if (!st[e].is_array() || st[e].size() != 4) fail(w, "expected [i, j, k, \"p/q\"]");
    std::size_t i = as_index(st[e][0], d, w + "/0");
    std::size_t k = as_index(st[e][1], d, w + "/1");
    std::size_t l = as_index(st[e][2], d, w + "/2");
    if (!seen.emplace(i, k, l).second) fail(w, "duplicate entry");
    structure[(i * d + k) * d + l] = as_rat(st[e][3], w + "/3");
  }

  std::optional<Vec> unit;
  if (auto it = j.find("unit"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != d) fail("/unit", "expected " + std::to_string(d) + " coordinates");
    Vec u;
    for (std::size_t i = 0; i < d; ++i) u.push_back(as_rat((*it)[i], "/unit/" + std::to_string(i)));
    unit = std::move(u);
  }
  std::string name;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail("/name", "expected a string");
    name = it->get<std::string>();
  }
  return GradedAlgebra(kind, std::move(group), std::move(degrees), std::move(structure), std::move(unit),
                       std::move(name));
}

GradedAlgebra parse_algebra(std::string_view text) { return algebra_from_json(parse_json_text(text)); }

std::string emit_algebra(const GradedAlgebra& a) { return algebra_to_json(a).dump(2); }

MultilinearGradedPoly parse_polynomial(std::string_view text, const Group& g) {
  Json doc = parse_json_text(text);
  const Json* terms = &doc;
  std::optional<std::size_t> n;
  std::string base;
  if (doc.is_object()) {
    terms = &field(doc, "terms", "");
    base = "/terms";
    if (auto it = doc.find("n"); it != doc.end()) {
      std::int64_t v = as_int(*it, "/n");
      if (v < 1 || v > 16) fail("/n", "arity must be in 1..16");
      n = static_cast<std::size_t>(v);
    }
  }
  if (!terms->is_array()) fail(base, "expected an array of monomials");
  if (!n) {
    if (terms->empty()) fail(base, "cannot infer the arity of an empty polynomial");
    const Json& p = field((*terms)[0], "perm", base + "/0");
    if (!p.is_array() || p.empty()) fail(base + "/0/perm", "expected a non-empty array");
    n = p.size();
  }
  MultilinearGradedPoly f(*n);
  for (std::size_t t = 0; t < terms->size(); ++t) {
    const std::string w = base + "/" + std::to_string(t);
    const Json& m = (*terms)[t];
    Rat c = as_rat(field(m, "coef", w), w + "/coef");
    const Json& p = field(m, "perm", w);
    const Json& ls = field(m, "labels", w);
    if (!p.is_array() || p.size() != *n) fail(w + "/perm", "expected " + std::to_string(*n) + " entries");
    if (!ls.is_array() || ls.size() != *n) fail(w + "/labels", "expected " + std::to_string(*n) + " entries");
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < *n; ++i) {
      std::int64_t v = as_int(p[i], w + "/perm/" + std::to_string(i));
      if (v < 1 || static_cast<std::size_t>(v) > *n) fail(w + "/perm/" + std::to_string(i), "variable out of range");
      order.push_back(static_cast<std::size_t>(v - 1));
    }
    std::vector<GroupElem> labels;
    for (std::size_t i = 0; i < *n; ++i) {
      const std::string wl = w + "/labels/" + std::to_string(i);
      try {
        labels.push_back(element_from_json(g, ls[i], wl));
      } catch (const std::invalid_argument& e) {
        fail(wl, e.what());
      }
    }
    try {
      f.add_term(c, std::move(order), std::move(labels));
    } catch (const std::invalid_argument& e) {
      fail(w, e.what());
    }
  }
  return f;
}

Json polynomial_to_json(const MultilinearGradedPoly& f, const Group& g) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json perm = Json::array(), labels = Json::array();
    for (auto v : m.order) perm.push_back(v + 1);
    for (const auto& l : m.labels) labels.push_back(element_to_json(g, l));
    terms.push_back({{"coef", to_string(c)}, {"perm", perm}, {"labels", labels}});
  }
  return {{"n", f.arity()}, {"terms", terms}};
}

} // namespace gradalg
