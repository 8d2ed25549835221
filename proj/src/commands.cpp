#include "gradalg/commands.hpp"

#include "gradalg/builders.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/radical.hpp"
#include "gradalg/structure.hpp"

#include <fstream>
#include <sstream>

namespace gradalg {

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Input load_builtin(const std::string& name) {
  GradedAlgebra a = builtin(name);
  std::string digest = fnv1a_hex(algebra_to_json(a).dump());
  return Input{std::move(a), "builtin:" + name, std::move(digest)};
}

Input load_file(const std::string& path) {
  GradedAlgebra a = parse_algebra(read_file(path));
  std::string digest = fnv1a_hex(algebra_to_json(a).dump());
  return Input{std::move(a), path, std::move(digest)};
}

CodimMode parse_codim_mode(const std::string& s) {
  if (s == "gr") return CodimMode::gr;
  if (s == "h") return CodimMode::h;
  if (s == "both") return CodimMode::both;
  throw std::invalid_argument("mode must be gr, h or both");
}

namespace {

std::string yes(bool b) { return b ? "yes" : "no"; }

Json vec_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

std::vector<GroupElem> degrees_present(const GradedAlgebra& a, const Subspace& w) {
  std::vector<GroupElem> out;
  for (const auto& g : a.support())
    if (!intersect(w, a.component_space(g)).is_zero()) out.push_back(g);
  return out;
}

Json subspace_json(const GradedAlgebra& a, const Subspace& w) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < w.dim(); ++i) basis.push_back(vec_json(w.vector(i)));
  Json degs = Json::array();
  for (const auto& g : degrees_present(a, w)) degs.push_back(element_to_json(a.group(), g));
  return {{"dim", w.dim()}, {"basis", basis}, {"degrees_present", degs}};
}

std::string degree_list(const GradedAlgebra& a, const Subspace& w) {
  std::string s;
  for (const auto& g : degrees_present(a, w)) s += (s.empty() ? "" : ", ") + a.group().to_string(g);
  return "{" + s + "}";
}

std::string group_label(const Group& g) {
  switch (g.kind()) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::cyclic: return "Z" + std::to_string(g.cyclic_order());
    case GroupKind::table: return "table(" + std::to_string(*g.order()) + ")";
    case GroupKind::free: return "free(" + std::to_string(g.free_rank()) + ")";
    case GroupKind::product: {
      std::string s;
      for (const auto& f : g.factors()) s += (s.empty() ? "" : "x") + group_label(f);
      return s;
    }
  }
  return "?";
}

RunReport start(const std::string& command, const Input& in) {
  RunReport r;
  const auto& a = in.algebra;
  r.json["command"] = command;
  r.json["input"] = {{"source", in.source},
                     {"digest", in.digest},
                     {"name", a.name()},
                     {"kind", to_string(a.kind())},
                     {"dim", a.dim()},
                     {"group", group_label(a.group())}};
  std::ostringstream t;
  t << (a.name().empty() ? in.source : a.name()) << ": " << to_string(a.kind()) << ", dim " << a.dim()
    << ", graded by " << group_label(a.group()) << ", support size " << a.support().size() << "\n";
  r.text = t.str();
  return r;
}

Json radical_json(const GradedAlgebra& a, const RadicalReport& rr) {
  Json j = subspace_json(a, rr.radical);
  j["graded"] = rr.graded;
  j["hstar_closed"] = rr.hstar_closed;
  j["ideal"] = rr.is_ideal;
  j["nilpotency_index"] = rr.nilpotency_index ? Json(*rr.nilpotency_index) : Json(nullptr);
  j["witness"] = rr.witness ? vec_json(*rr.witness) : Json(nullptr);
  return j;
}

std::string radical_text(const GradedAlgebra& a, const RadicalReport& rr) {
  std::ostringstream t;
  t << rr.label << ": dim " << rr.radical.dim() << ", graded " << yes(rr.graded) << ", H*-closed "
    << yes(rr.hstar_closed) << ", ideal " << yes(rr.is_ideal) << ", nilpotency index "
    << (rr.nilpotency_index ? std::to_string(*rr.nilpotency_index) : "none") << ", degrees "
    << degree_list(a, rr.radical) << "\n";
  if (rr.witness) {
    t << "  non-graded witness:";
    for (const auto& x : *rr.witness) t << " " << to_string(x);
    t << "\n";
  }
  return t.str();
}

void add_components(RunReport& r, const GradedAlgebra& a, const std::string& key,
                    const std::vector<std::pair<std::string, Subspace>>& parts) {
  Json arr = Json::array();
  for (const auto& [label, w] : parts) {
    Json c = subspace_json(a, w);
    c["label"] = label;
    arr.push_back(c);
    r.text += "  " + label + ": dim " + std::to_string(w.dim()) + ", degrees " + degree_list(a, w) + "\n";
  }
  r.json["results"][key] = arr;
}

} // namespace

RunReport cmd_radical(const Input& in) {
  RunReport r = start("radical", in);
  const auto& a = in.algebra;
  std::vector<RadicalReport> reports;
  if (a.is_lie()) {
    reports.push_back(radical_report("R", solvable_radical(a), a));
    reports.push_back(radical_report("N", nilradical(a), a));
  } else {
    reports.push_back(radical_report("J", jacobson_radical(a), a));
  }
  for (const auto& rr : reports) {
    r.json["results"]["radicals"][rr.label] = radical_json(a, rr);
    r.text += radical_text(a, rr);
    r.ok = r.ok && rr.graded && rr.hstar_closed && rr.is_ideal;
  }
  r.json["ok"] = r.ok;
  return r;
}

RunReport cmd_decompose(const Input& in) {
  RunReport r = start("decompose", in);
  const auto& a = in.algebra;
  if (a.is_lie()) {
    Subspace rad = solvable_radical(a);
    auto d = levi_decomposition(a);
    auto chk = check_complement(a, d.components[0], rad);
    r.json["results"]["kind"] = to_string(d.kind);
    r.text += to_string(d.kind) + " decomposition L = B + R\n";
    add_components(r, a, "components", {{"B", d.components[0]}, {"R", d.components[1]}});
    r.json["results"]["checks"] = {{"subalgebra", chk.subalgebra}, {"graded", chk.graded},
                                   {"direct", chk.direct},         {"spans", chk.spans},
                                   {"multiplicative", chk.multiplicative}, {"semisimple", chk.semisimple}};
    r.ok = chk.ok();
    r.text += "  checks: " + std::string(chk.ok() ? "all pass" : "FAILED") + "\n";
  } else {
    Subspace j = jacobson_radical(a);
    if (j.is_zero()) {
      auto d = wedderburn_artin_graded(a);
      auto chk = check_wedderburn_artin(a, d);
      r.json["results"]["kind"] = to_string(d.kind);
      r.text += to_string(d.kind) + " decomposition into " + std::to_string(d.components.size()) +
                " graded-simple ideals\n";
      std::vector<std::pair<std::string, Subspace>> parts;
      for (std::size_t i = 0; i < d.components.size(); ++i)
        parts.emplace_back("B" + std::to_string(i + 1), d.components[i]);
      add_components(r, a, "components", parts);
      r.json["results"]["checks"] = {{"direct", chk.direct},         {"graded", chk.graded},
                                     {"ideals", chk.ideals},         {"orthogonal", chk.orthogonal},
                                     {"graded_simple", chk.graded_simple}};
      r.ok = chk.ok();
      r.text += "  checks: " + std::string(chk.ok() ? "all pass" : "FAILED") + "\n";
    } else {
      auto d = malcev_decomposition(a);
      auto chk = check_complement(a, d.components[0], j);
      r.json["results"]["kind"] = to_string(d.kind);
      r.text += to_string(d.kind) + " decomposition A = B + J\n";
      add_components(r, a, "components", {{"B", d.components[0]}, {"J", d.components[1]}});
      r.json["results"]["checks"] = {{"subalgebra", chk.subalgebra}, {"graded", chk.graded},
                                     {"direct", chk.direct},         {"spans", chk.spans},
                                     {"multiplicative", chk.multiplicative}, {"semisimple", chk.semisimple}};
      r.ok = chk.ok();
      r.text += "  checks: " + std::string(chk.ok() ? "all pass" : "FAILED") + "\n";
      if (!d.components[0].is_zero()) {
        auto sub = restrict_to_subalgebra(a, d.components[0]);
        auto wa = wedderburn_artin_graded(sub.algebra);
        auto wchk = check_wedderburn_artin(sub.algebra, wa);
        std::vector<std::pair<std::string, Subspace>> parts;
        for (std::size_t i = 0; i < wa.components.size(); ++i) {
          std::vector<Vec> vs;
          const auto& c = wa.components[i];
          for (std::size_t k = 0; k < c.dim(); ++k) {
            Vec v = zero_vec(a.dim());
            for (std::size_t b = 0; b < sub.basis.size(); ++b) axpy(v, c.vector(k)[b], sub.basis[b]);
            vs.push_back(std::move(v));
          }
          parts.emplace_back("B" + std::to_string(i + 1), Subspace::span(a.dim(), vs));
        }
        r.text += "  B splits into " + std::to_string(parts.size()) + " graded-simple ideals\n";
        add_components(r, a, "semisimple_part", parts);
        r.json["results"]["semisimple_part_ok"] = wchk.ok();
        r.ok = r.ok && wchk.ok();
      }
    }
  }
  r.json["ok"] = r.ok;
  return r;
}

RunReport cmd_codim(const Input& in, const CodimFlags& flags) {
  RunReport r = start("codim", in);
  const char* mode = flags.mode == CodimMode::gr ? "gr" : flags.mode == CodimMode::h ? "h" : "both";
  r.json["flags"] = {{"n_max", flags.n_max},
                     {"mode", mode},
                     {"predicted_d", flags.predicted_d ? Json(*flags.predicted_d) : Json(nullptr)},
                     {"max_blocks", flags.caps.max_blocks}};
  CodimReport rep = codimension_report(in.algebra, flags.n_max, flags.mode, flags.caps);

  std::optional<ExponentVerdict> verdict;
  if (rep.entries.size() >= 3) verdict = exponent_estimate(rep, flags.predicted_d, flags.r_bound);

  std::ostringstream t;
  t << "  n  c_n" << (flags.mode == CodimMode::both ? "  c_n^H" : "") << "  c_n^(1/n)  c_n/c_(n-1)\n";
  Json rows = Json::array();
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const auto& e = rep.entries[i];
    std::string root = to_decimal(nth_root_truncated(e.value, e.n));
    Json ratio = nullptr;
    std::string ratio_s = "-";
    if (i > 0 && rep.entries[i - 1].value != 0) {
      Rat q = Rat(mpz_class(std::to_string(e.value))) / Rat(mpz_class(std::to_string(rep.entries[i - 1].value)));
      q.canonicalize();
      ratio = to_string(q);
      ratio_s = to_string(q);
    }
    rows.push_back({{"n", e.n},
                    {"c_n", e.value},
                    {"c_n_h", e.h_value ? Json(*e.h_value) : Json(nullptr)},
                    {"root", root},
                    {"ratio", ratio},
                    {"blocks", e.stats.blocks},
                    {"nonzero_blocks", e.stats.nonzero_blocks},
                    {"max_block_rank", e.stats.max_rank},
                    {"nilpotent_shortcut", e.shortcut}});
    t << "  " << e.n << "  " << e.value;
    if (flags.mode == CodimMode::both) t << "  " << *e.h_value;
    t << "  " << root << "  " << ratio_s << "\n";
  }
  r.json["results"]["table"] = rows;
  if (verdict) {
    Json v = {{"verdict", to_string(verdict->kind)}, {"detail", verdict->detail}, {"r_bound", verdict->r_bound}};
    v["c_lower"] = verdict->c_lower ? Json(to_string(*verdict->c_lower)) : Json(nullptr);
    v["c_upper"] = verdict->c_upper ? Json(to_string(*verdict->c_upper)) : Json(nullptr);
    r.json["results"]["exponent"] = v;
    t << "exponent: " << to_string(verdict->kind);
    if (flags.predicted_d) t << " with d = " << *flags.predicted_d;
    if (!verdict->detail.empty()) t << " (" << verdict->detail << ")";
    t << "\n";
    r.ok = verdict->kind != ExponentVerdictKind::inconsistent;
  } else {
    r.json["results"]["exponent"] = nullptr;
  }
  r.text += t.str();
  r.json["ok"] = r.ok;
  return r;
}

RunReport cmd_check_identity(const Input& in, const std::string& poly_text) {
  RunReport r = start("check-identity", in);
  const auto& a = in.algebra;
  MultilinearGradedPoly f = parse_polynomial(poly_text, a.group());
  bool graded = is_graded_identity(f, a);
  bool via_h = is_h_identity(gr_to_h(f, a), a);
  if (graded != via_h) throw InvariantViolation("graded and H-identity verdicts disagree");
  r.json["polynomial"] = polynomial_to_json(f, a.group());
  r.json["results"] = {{"identity", graded}, {"h_identity", via_h}};
  r.text += std::string("graded identity: ") + yes(graded) + "\n";
  r.json["ok"] = true;
  return r;
}

RunReport cmd_verify(const Input& in) {
  RunReport r = start("verify", in);
  const auto& a = in.algebra;
  TheoremReport rep = verify_paper_theorems(a);
  for (const auto& rr : rep.radicals) {
    r.json["results"]["radicals"][rr.label] = radical_json(a, rr);
    r.text += radical_text(a, rr);
  }
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}});
    r.text += "  [" + std::string(c.passed ? "pass" : "FAIL") + "] " + c.name + "\n";
  }
  r.json["results"]["checks"] = checks;
  r.ok = rep.all_passed();
  r.json["ok"] = r.ok;
  return r;
}

Json cmd_builtin(const std::string& name) { return algebra_to_json(builtin(name)); }

} // namespace gradalg
