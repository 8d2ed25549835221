#include "gradalg/radical.hpp"

#include "gradalg/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradalg {

Subspace jacobson_radical(const GradedAlgebra& a) {
  if (a.is_lie()) throw std::invalid_argument("jacobson_radical needs an associative algebra");
  if (!a.unit()) {
    GradedAlgebra u = unitalization(a);
    Subspace ju = jacobson_radical(u);
    // J(A#) lies inside A, i.e. has zero unit coordinate
    std::vector<Vec> rows;
    for (const auto& v : ju.vectors()) rows.emplace_back(v.begin() + 1, v.end());
    return Subspace::span(a.dim(), rows);
  }
  const std::size_t d = a.dim();
  std::vector<Mat> phi;
  phi.reserve(d);
  for (std::size_t i = 0; i < d; ++i) phi.push_back(a.left_mult_matrix(a.basis_vector(i)));
  Mat form(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      // tr(Phi(e_i e_j)) = sum_k c_ijk tr(Phi(e_k))
      Rat t = 0;
      for (const auto& [k, c] : a.product_terms(i, j)) t += c * phi[k].trace();
      form(i, j) = t;
      form(j, i) = t;
    }
  return kernel(form);
}

Subspace graded_closure(const Subspace& w, const GradedAlgebra& a) {
  std::vector<Vec> parts;
  for (std::size_t s = 0; s < a.support().size(); ++s) {
    // pi_g(W) read off by restricting basis rows to the component's coordinates
    for (const auto& v : w.vectors()) {
      Vec p(a.dim());
      for (auto i : a.component(s)) p[i] = v[i];
      if (!is_zero(p)) parts.push_back(std::move(p));
    }
  }
  return Subspace::span(a.dim(), parts);
}

std::optional<Vec> graded_witness(const Subspace& w, const GradedAlgebra& a) {
  for (const auto& v : w.vectors())
    for (const auto& g : a.support()) {
      Vec p = a.homogeneous_projection(v, g);
      if (!w.contains(p)) return p;
    }
  return std::nullopt;
}

bool is_graded_subspace(const Subspace& w, const GradedAlgebra& a) { return graded_closure(w, a) == w; }

Mat killing_form(const GradedAlgebra& l) {
  if (!l.is_lie()) throw std::invalid_argument("killing_form needs a Lie algebra");
  const std::size_t d = l.dim();
  std::vector<Mat> ad;
  for (std::size_t i = 0; i < d; ++i) ad.push_back(l.left_mult_matrix(l.basis_vector(i)));
  Mat k(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rat t = (ad[i] * ad[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

Subspace solvable_radical(const GradedAlgebra& l) {
  Mat kappa = killing_form(l);
  Subspace derived = product_space(l, l.whole(), l.whole());
  // x in R iff kappa(x, y) = 0 for y in a basis of [L, L]
  Mat cond(derived.dim(), l.dim());
  for (std::size_t r = 0; r < derived.dim(); ++r) {
    Vec ky = kappa.apply(derived.basis().row(r));
    for (std::size_t j = 0; j < l.dim(); ++j) cond(r, j) = ky[j];
  }
  return kernel(cond);
}

namespace {

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Mat unflatten(std::span<const Rat> v, std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

} // namespace

AdjointEnvelope adjoint_envelope(const GradedAlgebra& l) {
  if (!l.is_lie()) throw std::invalid_argument("adjoint_envelope needs a Lie algebra");
  const std::size_t n = l.dim();
  const std::size_t nn = n * n;
  // closure of span(ad e_i) under matrix products
  EchelonBuilder b(nn);
  std::vector<Mat> accepted;
  std::vector<Mat> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Mat m = l.left_mult_matrix(l.basis_vector(i));
    if (b.insert(flatten(m))) queue.push_back(std::move(m));
  }
  while (!queue.empty()) {
    Mat m = std::move(queue.back());
    queue.pop_back();
    accepted.push_back(m);
    for (const auto& u : accepted) {
      Mat x = u * m;
      if (b.insert(flatten(x))) queue.push_back(std::move(x));
      Mat y = m * u;
      if (b.insert(flatten(y))) queue.push_back(std::move(y));
    }
  }
  Subspace env = b.build();
  std::vector<Vec> basis = env.vectors();
  const std::size_t q = basis.size();
  std::vector<Mat> mats;
  for (const auto& v : basis) mats.push_back(unflatten(v, n));
  std::vector<Rat> s(q * q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      auto c = env.coordinates(flatten(mats[x] * mats[y]));
      for (std::size_t z = 0; z < q; ++z) s[(x * q + y) * q + z] = (*c)[z];
    }
  Group t = Group::trivial();
  GradedAlgebra alg(AlgebraKind::associative, t, std::vector<GroupElem>(q, t.identity()), std::move(s));
  if (auto u = find_unit(alg))
    alg = GradedAlgebra(AlgebraKind::associative, t, std::vector<GroupElem>(q, t.identity()), alg.structure(), u);
  return {std::move(alg), std::move(basis)};
}

Subspace nilradical(const GradedAlgebra& l) {
  if (!l.is_lie()) throw std::invalid_argument("nilradical needs a Lie algebra");
  const std::size_t n = l.dim();
  if (n == 0) return Subspace(0);
  AdjointEnvelope env = adjoint_envelope(l);
  Subspace j = jacobson_radical(env.algebra);
  // J(Ad L) back in End(L) coordinates
  std::vector<Vec> jm;
  for (const auto& c : j.vectors()) {
    Vec m(n * n);
    for (std::size_t t = 0; t < c.size(); ++t) axpy(m, c[t], env.basis[t]);
    jm.push_back(std::move(m));
  }
  Subspace jspace = Subspace::span(n * n, jm);
  // x -> residue of ad x modulo J is linear; N is its kernel
  Mat map(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec r = jspace.reduce(flatten(l.left_mult_matrix(l.basis_vector(i))));
    for (std::size_t t = 0; t < n * n; ++t) map(t, i) = r[t];
  }
  return kernel(map);
}

bool TheoremReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

RadicalReport radical_report(const std::string& label, const Subspace& radical, const GradedAlgebra& a) {
  RadicalReport r;
  r.label = label;
  r.radical = radical;
  r.graded = is_graded_subspace(radical, a);
  if (!r.graded) r.witness = graded_witness(radical, a);
  r.hstar_closed = hstar_closure(radical, a) == radical;
  r.is_ideal = is_ideal(a, radical);
  r.nilpotency_index = nilpotency_index(a, radical);
  return r;
}

TheoremReport verify_paper_theorems(const GradedAlgebra& a) {
  TheoremReport rep;
  auto check = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };
  if (!a.is_lie()) {
    Subspace j = jacobson_radical(a);
    RadicalReport r = radical_report("J", j, a);
    check("J is a two-sided ideal", r.is_ideal);
    check("J is nilpotent", r.nilpotency_index.has_value());
    check("J is graded", r.graded);
    check("H*J = J", r.hstar_closed);
    check("H*J is an ideal", verify_ideal_closure(j, a));
    GradedAlgebra q = quotient_algebra(a, j);
    check("A/J is semisimple", jacobson_radical(q).is_zero());
    rep.radicals.push_back(std::move(r));
  } else {
    Subspace rad = solvable_radical(a);
    Subspace nil = nilradical(a);
    RadicalReport rr = radical_report("R", rad, a);
    RadicalReport nr = radical_report("N", nil, a);
    check("R is an ideal", rr.is_ideal);
    check("N is an ideal", nr.is_ideal);
    auto ds = derived_series(a, rad);
    check("R is solvable", ds.back().is_zero());
    check("N is nilpotent", nr.nilpotency_index.has_value());
    check("N is contained in R", rad.contains(nil));
    check("R is graded", rr.graded);
    check("N is graded", nr.graded);
    check("H*R = R", rr.hstar_closed);
    check("H*N = N", nr.hstar_closed);
    check("[L,R] is contained in N", nil.contains(product_space(a, a.whole(), rad)));
    GradedAlgebra q = quotient_algebra(a, rad);
    check("L/R has zero solvable radical", solvable_radical(q).is_zero());
    rep.radicals.push_back(std::move(rr));
    rep.radicals.push_back(std::move(nr));
  }
  return rep;
}

} // namespace gradalg
