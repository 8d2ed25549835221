// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "gradalg/builders.hpp"
#include "gradalg/hopf.hpp"
#include "gradalg/identities.hpp"
#include "gradalg/radical.hpp"
#include "gradalg/structure.hpp"

#include "corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace gradalg;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && passed) note << "first failure: " << what;
    passed = passed && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.passed = false;
    out.note << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    out.passed = false;
    out.note << " over time budget " << budget_s << " s";
  }
  if (!out.passed) ++failures;
  std::printf("%s %2d  %-44s %8.2f s  %s\n", out.passed ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.note.str().c_str());
  std::fflush(stdout);
}

DualFunctional random_functional(std::mt19937& rng, const std::vector<GroupElem>& on) {
  DualFunctional h;
  for (const auto& g : on)
    if (rng() % 4 != 0) h.set(g, testing_support::small_rat(rng));
  return h;
}

bool same_components(std::vector<Subspace> a, std::vector<Subspace> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

std::vector<GradedAlgebra> lie_cases() {
  std::vector<GradedAlgebra> out;
  for (const auto& name : lie_builtin_names()) out.push_back(builtin(name));
  out.push_back(direct_sum(gl2_z2(), gl2_z2(), "gl2_z2+gl2_z2"));
  out.push_back(direct_sum(heisenberg3(), heisenberg3(), "heis3+heis3"));
  out.push_back(direct_sum(with_trivial_grading(sl2()), with_trivial_grading(two_dim_nonabelian_lie()), "sl2+aff1"));
  out.push_back(direct_sum(with_trivial_grading(gl2_z2()), with_trivial_grading(heisenberg3()), "gl2+heis3"));
  return out;
}

} // namespace

int main() {
  const auto corpus = corpus::associative();

  criterion(1, "graded Jacobson radical on the corpus", 60, [&](Outcome& o) {
    o.require(corpus.size() >= 200, "corpus too small");
    for (const auto& item : corpus) {
      const GradedAlgebra& a = item.algebra;
      Subspace j = jacobson_radical(a);
      o.require(graded_closure(j, a) == j, item.label + " J not graded");
      o.require(is_ideal(a, j), item.label + " J not an ideal");
    }
    o.note << corpus.size() << " algebras ";
  });

  criterion(2, "Lie radicals graded and [L,R] in N", 10, [&](Outcome& o) {
    for (const auto& l : lie_cases()) {
      Subspace r = solvable_radical(l), n = nilradical(l);
      o.require(graded_closure(r, l) == r, l.name() + " R not graded");
      o.require(graded_closure(n, l) == n, l.name() + " N not graded");
      o.require(is_ideal(l, r) && is_ideal(l, n), l.name() + " radical not an ideal");
      o.require(n.contains(product_space(l, l.whole(), r)), l.name() + " [L,R] not in N");
    }
  });

  criterion(3, "Dickson radical equals largest nilpotent ideal", 0, [&](Outcome& o) {
    std::size_t checked = 0;
    for (const auto& item : corpus) {
      if (item.algebra.dim() > 4) continue;
      ++checked;
      o.require(jacobson_radical(item.algebra) == oracle::largest_nilpotent_ideal(item.algebra),
                item.label + " radical differs from oracle");
    }
    o.note << checked << " algebras ";
  });

  criterion(4, "trace identity, 1000 pairs per builtin", 0, [&](Outcome& o) {
    std::mt19937 rng(4);
    for (const auto& name : builtin_names()) {
      GradedAlgebra a = builtin(name);
      CoalgebraWindow w = CoalgebraWindow::of(a);
      for (int t = 0; t < 1000; ++t) {
        DualFunctional h = random_functional(rng, w.basis());
        o.require(trace_identity_check(h, testing_support::random_vec(rng, a.dim()), a), name + " trace identity");
      }
    }
  });

  criterion(5, "comultiplication certificates", 0, [&](Outcome& o) {
    std::mt19937 rng(5);
    Group z2 = Group::cyclic(2), z3 = Group::cyclic(3);
    std::vector<CoalgebraWindow> windows{
        CoalgebraWindow(z2, z2.elements()), CoalgebraWindow(z3, z3.elements()),
        CoalgebraWindow::of(free_group_truncation(2, 2)), CoalgebraWindow::of(free_group_truncation(2, 3))};
    for (const auto& w : windows)
      for (int t = 0; t < 100; ++t) {
        DualFunctional h = random_functional(rng, w.basis());
        o.require(verify_xi_certificate(h, xi_decompose(h, w), w), "certificate rejected");
      }
  });

  criterion(6, "graded Wedderburn-Artin vs minimal ideals", 0, [&](Outcome& o) {
    std::vector<GradedAlgebra> cases;
    for (const auto& name : associative_builtin_names()) {
      GradedAlgebra a = builtin(name);
      if (a.dim() <= 6 && jacobson_radical(a).is_zero()) cases.push_back(a);
    }
    cases.push_back(direct_sum(matrix_algebra_z2(2), builtin("fz2"), "m2_z2+fz2"));
    cases.push_back(direct_sum(builtin("fz3"), builtin("fz3"), "fz3+fz3"));
    cases.push_back(with_trivial_grading(builtin("fz2xz2")));
    cases.push_back(with_trivial_grading(builtin("fz3")));
    o.require(cases.size() >= 5, "too few semisimple cases");
    for (const auto& a : cases) {
      auto d = wedderburn_artin_graded(a);
      o.require(check_wedderburn_artin(a, d).ok(), a.name() + " decomposition checks");
      o.require(same_components(d.components, oracle::minimal_graded_ideals(a)), a.name() + " differs from oracle");
    }
    o.note << cases.size() << " algebras ";
  });

  criterion(7, "graded Mal'cev and Levi complements", 0, [&](Outcome& o) {
    for (const auto& name : {"ut2", "free_trunc_2_3"}) {
      GradedAlgebra a = builtin(name);
      auto d = malcev_decomposition(a);
      o.require(check_complement(a, d.components[0], d.components[1]).ok(), std::string(name) + " complement");
      o.require(d.components[1] == jacobson_radical(a), std::string(name) + " radical");
    }
    GradedAlgebra f = builtin("free_trunc_2_3");
    auto d = malcev_decomposition(f);
    o.require(d.components[0] == Subspace::span(f.dim(), {*f.unit()}), "B is not span{1}");
    o.require(d.components[1].dim() == 6, "dim J != 6");
    o.require(nilpotency_index(f, d.components[1]) == std::optional<std::size_t>(3), "nilpotency index != 3");
    GradedAlgebra gl = gl2_z2();
    auto l = levi_decomposition(gl);
    o.require(check_complement(gl, l.components[0], l.components[1]).ok(), "gl2_z2 Levi complement");
    o.require(l.components[1] == solvable_radical(gl), "gl2_z2 radical");
  });

  criterion(8, "codimension golden values", 10, [&](Outcome& o) {
    struct Golden {
      const char* name;
      std::size_t n, value;
    };
    for (const Golden& g : {Golden{"m2_z2", 1, 2}, Golden{"m2_z2", 2, 7}, Golden{"m2", 1, 1}, Golden{"m2", 2, 2},
                            Golden{"free_trunc_2_2", 1, 3}}) {
      GradedAlgebra a = builtin(g.name);
      std::size_t oracle_value = oracle::global_codimension(a, g.n);
      o.require(oracle_value == g.value, std::string(g.name) + " oracle disagrees with golden");
      o.require(graded_codimension(a, g.n).value == g.value, std::string(g.name) + " golden mismatch");
    }
  });

  criterion(9, "graded and H-codimensions agree, n <= 3", 0, [&](Outcome& o) {
    std::size_t algebras = 0;
    for (const auto& name : builtin_names()) {
      GradedAlgebra a = builtin(name);
      for (std::size_t n = 1; n <= 3; ++n)
        o.require(graded_codimension(a, n).value == h_codimension(a, n).value,
                  name + " n=" + std::to_string(n));
      ++algebras;
    }
    o.require(algebras >= 5, "fewer than 5 builtins");
    o.note << algebras << " builtins ";
  });

  criterion(10, "block ranks sum to global rank, n <= 3", 0, [&](Outcome& o) {
    for (const auto& name : builtin_names()) {
      GradedAlgebra a = builtin(name);
      for (std::size_t n = 1; n <= 3; ++n)
        o.require(graded_codimension(a, n).value == oracle::global_codimension(a, n),
                  name + " n=" + std::to_string(n));
    }
  });

  criterion(11, "nilpotent ideal has vanishing codimensions", 0, [&](Outcome& o) {
    GradedAlgebra f = builtin("free_trunc_2_3");
    GradedAlgebra j = restrict_to_subalgebra(f, jacobson_radical(f), "J").algebra;
    o.require(j.dim() == 6, "dim J != 6");
    std::size_t c2 = graded_codimension(j, 2).value;
    o.require(c2 > 0, "c_2(J) = 0");
    o.require(oracle::global_codimension(j, 2) == c2, "c_2(J) oracle mismatch");
    for (std::size_t n = 3; n <= 5; ++n)
      o.require(graded_codimension(j, n).value == 0, "c_" + std::to_string(n) + "(J) != 0");
    // J^3 = 0 makes every product of three or more elements vanish, so c_n = 0 beyond the range above.
    o.require(nilpotency_index(j, j.whole()) == std::optional<std::size_t>(3), "J^3 != 0");
    o.note << "c_2 = " << c2 << " ";
  });

  criterion(12, "exponent verdict for free_trunc_2_3, n <= 5", 300, [&](Outcome& o) {
    GradedAlgebra f = builtin("free_trunc_2_3");
    CodimReport r = codimension_report(f, 5, CodimMode::gr);
    ExponentVerdict v = exponent_estimate(r, 1);
    o.require(v.kind == ExponentVerdictKind::consistent, "verdict " + to_string(v.kind) + ": " + v.detail);
    o.require(v.roots.size() == 5, "missing roots");
    o.note << "c_n =";
    for (const auto& e : r.entries) o.note << " " << e.value;
    o.note << " ";
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
