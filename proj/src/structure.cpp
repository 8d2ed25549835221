#include "gradalg/structure.hpp"

#include "gradalg/errors.hpp"
#include "gradalg/radical.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradalg {

std::string to_string(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::wedderburn_artin: return "wedderburn_artin";
    case DecompositionKind::malcev: return "malcev";
    case DecompositionKind::levi: return "levi";
  }
  return "";
}

namespace {

// coefficients low -> high
using Poly = std::vector<Rat>;

Rat eval(const Poly& p, const Rat& x) {
  Rat v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::vector<Rat> rational_roots(Poly p) {
  std::vector<Rat> roots;
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
  if (p.size() <= 1) return roots;
  std::size_t shift = 0;
  while (sgn(p[shift]) == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  Poly q(p.begin() + static_cast<std::ptrdiff_t>(shift), p.end());
  if (q.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  mpz_class a0 = Rat(q.front() * l).get_num();
  mpz_class an = Rat(q.back() * l).get_num();
  auto ps = divisors(a0);
  auto qs = divisors(an);
  std::vector<Rat> seen;
  for (const auto& num : ps)
    for (const auto& den : qs)
      for (int sign : {1, -1}) {
        Rat cand(sign * num, den);
        cand.canonicalize();
        if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
        seen.push_back(cand);
        if (sgn(eval(q, cand)) == 0) roots.push_back(cand);
      }
  return roots;
}

// Minimal polynomial of z in a unital associative algebra, monic, low -> high.
Poly minimal_polynomial(const GradedAlgebra& r, const Vec& unit, const Vec& z) {
  std::vector<Vec> powers{unit};
  while (true) {
    Vec next = r.multiply(powers.back(), z);
    Mat m = Mat::from_columns(r.dim(), powers);
    if (auto c = solve(m, next)) {
      Poly p(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) p[i] = -(*c)[i];
      p.back() = 1;
      return p;
    }
    powers.push_back(std::move(next));
  }
}

std::vector<Vec> homogeneous_basis(const GradedAlgebra& a, const Subspace& w) {
  std::vector<Vec> out;
  for (const auto& g : a.support()) {
    std::vector<Vec> proj;
    for (const auto& v : w.vectors()) proj.push_back(a.homogeneous_projection(v, g));
    for (auto& v : Subspace::span(a.dim(), proj).vectors()) out.push_back(std::move(v));
  }
  return out;
}

Subspace annihilator(const GradedAlgebra& a, const Subspace& b) {
  std::vector<Vec> rows;
  for (const auto& v : b.vectors()) {
    Mat r = a.right_mult_matrix(v);
    Mat l = a.left_mult_matrix(v);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      rows.push_back(r.row_vec(i));
      rows.push_back(l.row_vec(i));
    }
  }
  return kernel(Mat::from_rows(a.dim(), rows));
}

Vec lift(const Restriction& r, std::span<const Rat> coords, std::size_t ambient) {
  Vec v(ambient);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], r.basis[i]);
  return v;
}

Subspace center_in_restriction(const GradedAlgebra& r) {
  // z of degree e with z x = x z for all basis x
  auto e = r.find_support(r.group().identity());
  if (!e) return Subspace(r.dim());
  const auto& comp = r.component(*e);
  std::vector<Vec> rows;
  for (std::size_t x = 0; x < r.dim(); ++x) {
    Mat diff = r.right_mult_matrix(r.basis_vector(x)) - r.left_mult_matrix(r.basis_vector(x));
    for (std::size_t i = 0; i < r.dim(); ++i) {
      Vec row(comp.size());
      for (std::size_t t = 0; t < comp.size(); ++t) row[t] = diff(i, comp[t]);
      rows.push_back(std::move(row));
    }
  }
  Subspace k = kernel(Mat::from_rows(comp.size(), rows));
  std::vector<Vec> out;
  for (const auto& c : k.vectors()) {
    Vec z(r.dim());
    for (std::size_t t = 0; t < comp.size(); ++t) z[comp[t]] = c[t];
    out.push_back(std::move(z));
  }
  return Subspace::span(r.dim(), out);
}

struct CenterSplit {
  std::optional<Subspace> proper_ideal; // inside the restriction
  bool certified_field = false;
};

// Looks for a central element of degree e with a rational eigenvalue that is
// not a scalar. Without one, the degree-e centre is a field when a sampled
// element has an irreducible minimal polynomial of full degree; irreducibility
// is only certified up to degree 3 (no rational root suffices there).
CenterSplit split_by_center(const GradedAlgebra& r) {
  CenterSplit out;
  Subspace z = center_in_restriction(r);
  if (z.dim() <= 1) {
    out.certified_field = true;
    return out;
  }
  auto unit = find_unit(r);
  if (!unit) throw InvariantViolation("graded ideal without a unit");
  std::vector<Vec> candidates = z.vectors();
  for (int shift = 1; shift <= 3; ++shift) {
    Vec g(r.dim());
    for (std::size_t i = 0; i < z.dim(); ++i) axpy(g, Rat(static_cast<long>(i * i + shift * i + 1)), z.vector(i));
    candidates.push_back(std::move(g));
  }
  std::size_t best_degree = 0;
  bool best_rootless = false;
  for (const auto& c : candidates) {
    Poly mu = minimal_polynomial(r, *unit, c);
    auto roots = rational_roots(mu);
    for (const auto& lambda : roots) {
      Vec w = sub(c, scale(*unit, lambda));
      if (is_zero(w)) continue;
      Subspace ideal = ideal_generated(r, {w});
      if (!ideal.is_zero() && ideal.dim() < r.dim()) {
        out.proper_ideal = ideal;
        return out;
      }
    }
    std::size_t degree = mu.size() - 1;
    if (degree > best_degree) {
      best_degree = degree;
      best_rootless = roots.empty();
    }
  }
  out.certified_field = best_degree == z.dim() && best_rootless && best_degree <= 3;
  if (!out.certified_field)
    throw InvariantViolation("cannot split the degree-e centre (dimension " + std::to_string(z.dim()) +
                             ") without factoring a minimal polynomial of degree " + std::to_string(best_degree));
  return out;
}

Subspace minimal_graded_ideal(const GradedAlgebra& a, Subspace b) {
  while (true) {
    bool descended = false;
    for (const auto& v : homogeneous_basis(a, b)) {
      Subspace i = ideal_generated(a, {v});
      if (i.dim() < b.dim()) {
        b = std::move(i);
        descended = true;
        break;
      }
    }
    if (descended) continue;
    Restriction r = restrict_to_subalgebra(a, b);
    CenterSplit split = split_by_center(r.algebra);
    if (!split.proper_ideal) return b;
    std::vector<Vec> lifted;
    for (const auto& c : split.proper_ideal->vectors()) lifted.push_back(lift(r, c, a.dim()));
    b = Subspace::span(a.dim(), lifted);
  }
}

// One lifting round: adjust c_a by elements of `level` (homogeneous of the same
// degree as c_a) so that every defect c_a c_b - sum s^d_ab c_d drops into `next`.
void correct_section(const GradedAlgebra& a, std::vector<Vec>& section, const std::vector<std::vector<Rat>>& s,
                     const Subspace& level, const Subspace& next, const char* what) {
  const std::size_t q = section.size();
  auto defect = [&](std::size_t x, std::size_t y) {
    Vec d = a.multiply(section[x], section[y]);
    for (std::size_t z = 0; z < q; ++z) axpy(d, -s[x * q + y][z], section[z]);
    return d;
  };
  bool clean = true;
  for (std::size_t x = 0; x < q && clean; ++x)
    for (std::size_t y = 0; y < q && clean; ++y) clean = next.contains(defect(x, y));
  if (clean) return;

  // unknowns: for each a, coordinates over a homogeneous basis of level ∩ A^(deg c_a)
  std::vector<std::vector<Vec>> unknowns(q);
  std::vector<std::size_t> offset(q + 1, 0);
  for (std::size_t x = 0; x < q; ++x) {
    GroupElem g;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (sgn(section[x][i]) != 0) {
        g = a.degree(i);
        break;
      }
    unknowns[x] = intersect(level, a.component_space(g)).vectors();
    offset[x + 1] = offset[x] + unknowns[x].size();
  }
  const std::size_t n = a.dim();
  Mat sys(q * q * n, offset[q]);
  Vec rhs(q * q * n);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      const std::size_t row0 = (x * q + y) * n;
      Vec d = next.reduce(defect(x, y));
      for (std::size_t r = 0; r < n; ++r) rhs[row0 + r] = -d[r];
      auto add_column = [&](std::size_t col, const Vec& v) {
        Vec red = next.reduce(v);
        for (std::size_t r = 0; r < n; ++r) sys(row0 + r, col) += red[r];
      };
      // c_x j_y
      for (std::size_t t = 0; t < unknowns[y].size(); ++t)
        add_column(offset[y] + t, a.multiply(section[x], unknowns[y][t]));
      // j_x c_y
      for (std::size_t t = 0; t < unknowns[x].size(); ++t)
        add_column(offset[x] + t, a.multiply(unknowns[x][t], section[y]));
      // - sum_z s^z_xy j_z
      for (std::size_t z = 0; z < q; ++z) {
        if (sgn(s[x * q + y][z]) == 0) continue;
        for (std::size_t t = 0; t < unknowns[z].size(); ++t)
          add_column(offset[z] + t, scale(unknowns[z][t], -s[x * q + y][z]));
      }
    }
  auto sol = solve(sys, rhs);
  if (!sol) throw InvariantViolation(std::string(what) + ": lifting system is inconsistent");
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t t = 0; t < unknowns[x].size(); ++t) axpy(section[x], (*sol)[offset[x] + t], unknowns[x][t]);
}

// Section c_a = e_{C[a]} over the standard complement of `radical`, with the
// structure constants of A/radical in that basis.
std::pair<std::vector<Vec>, std::vector<std::vector<Rat>>> initial_section(const GradedAlgebra& a,
                                                                           const Subspace& radical) {
  auto comp = homogeneous_complement(a, radical);
  const std::size_t q = comp.size();
  std::vector<Vec> section;
  for (auto c : comp) section.push_back(a.basis_vector(c));
  std::vector<std::vector<Rat>> s(q * q, std::vector<Rat>(q));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      Vec r = radical.reduce(a.multiply(section[x], section[y]));
      for (std::size_t z = 0; z < q; ++z) s[x * q + y][z] = r[comp[z]];
    }
  return {std::move(section), std::move(s)};
}

} // namespace

Subspace graded_center(const GradedAlgebra& a, const Subspace& b) {
  Restriction r = restrict_to_subalgebra(a, b);
  Subspace z = center_in_restriction(r.algebra);
  std::vector<Vec> lifted;
  for (const auto& c : z.vectors()) {
    auto coords = coordinates_in(r.basis, lift(r, c, a.dim()));
    lifted.push_back(lift(r, c, a.dim()));
  }
  return Subspace::span(a.dim(), lifted);
}

GradedDecomposition wedderburn_artin_graded(const GradedAlgebra& a) {
  if (a.is_lie()) throw std::invalid_argument("wedderburn_artin_graded needs an associative algebra");
  GradedDecomposition out{DecompositionKind::wedderburn_artin, {}};
  if (a.dim() == 0) return out;
  if (!find_unit(a)) throw InvariantViolation("wedderburn_artin_graded: algebra is not unital");
  if (!jacobson_radical(a).is_zero()) throw InvariantViolation("wedderburn_artin_graded: algebra is not semisimple");
  Subspace remaining = a.whole();
  while (!remaining.is_zero()) {
    Subspace b = minimal_graded_ideal(a, remaining);
    remaining = intersect(remaining, annihilator(a, b));
    out.components.push_back(std::move(b));
  }
  return out;
}

bool is_graded_simple(const GradedAlgebra& a, const Subspace& b) {
  if (b.is_zero()) return false;
  for (const auto& v : homogeneous_basis(a, b))
    if (!(ideal_generated(a, {v}) == b)) return false;
  Restriction r = restrict_to_subalgebra(a, b);
  try {
    return !split_by_center(r.algebra).proper_ideal.has_value();
  } catch (const InvariantViolation&) {
    return false;
  }
}

GradedDecomposition malcev_decomposition(const GradedAlgebra& a) {
  if (a.is_lie()) throw std::invalid_argument("malcev_complement_graded needs an associative algebra");
  if (!find_unit(a)) throw InvariantViolation("malcev_complement_graded: algebra is not unital");
  Subspace j = jacobson_radical(a);
  if (j.is_zero()) return {DecompositionKind::malcev, {a.whole(), j}};
  auto [section, s] = initial_section(a, j);
  // J, J^2, J^3, ... up to the first zero power
  std::vector<Subspace> powers{j};
  while (!powers.back().is_zero()) powers.push_back(product_space(a, powers.back(), j));
  std::size_t m = 1;
  while (m <= powers.size() && !powers[m - 1].is_zero()) {
    std::size_t m2 = 2 * m;
    Subspace next = m2 <= powers.size() ? powers[m2 - 1] : Subspace(a.dim());
    correct_section(a, section, s, powers[m - 1], next, "malcev");
    m = m2;
  }
  return {DecompositionKind::malcev, {Subspace::span(a.dim(), section), j}};
}

Subspace malcev_complement_graded(const GradedAlgebra& a) { return malcev_decomposition(a).components.front(); }

GradedDecomposition levi_decomposition(const GradedAlgebra& l) {
  if (!l.is_lie()) throw std::invalid_argument("levi_graded needs a Lie algebra");
  Subspace r = solvable_radical(l);
  if (r.is_zero()) return {DecompositionKind::levi, {l.whole(), r}};
  if (r.is_full()) return {DecompositionKind::levi, {Subspace(l.dim()), r}};
  auto [section, s] = initial_section(l, r);
  auto series = derived_series(l, r);
  if (!series.back().is_zero()) throw InvariantViolation("levi: solvable radical is not solvable");
  for (std::size_t i = 0; i + 1 < series.size(); ++i) correct_section(l, section, s, series[i], series[i + 1], "levi");
  return {DecompositionKind::levi, {Subspace::span(l.dim(), section), r}};
}

Subspace levi_graded(const GradedAlgebra& l) { return levi_decomposition(l).components.front(); }

ComplementCheck check_complement(const GradedAlgebra& a, const Subspace& b, const Subspace& radical) {
  ComplementCheck c;
  c.subalgebra = is_subalgebra(a, b);
  c.graded = is_graded_subspace(b, a);
  c.direct = intersect(b, radical).is_zero();
  c.spans = sum(b, radical).is_full();
  if (!(c.subalgebra && c.graded && c.direct && c.spans)) return c;

  // section A/rad -> B: quotient basis vector x lifts to the unique b in B with b = e_x mod rad
  Quotient q = quotient_with_projection(a, radical);
  const std::size_t n = q.algebra.dim();
  std::vector<Vec> bvecs = b.vectors();
  Mat proj_b(n, bvecs.size());
  for (std::size_t t = 0; t < bvecs.size(); ++t) {
    Vec p = q.projection.apply(bvecs[t]);
    for (std::size_t i = 0; i < n; ++i) proj_b(i, t) = p[i];
  }
  auto sigma = [&](const Vec& x) -> std::optional<Vec> {
    auto coeff = solve(proj_b, x);
    if (!coeff) return std::nullopt;
    Vec v(a.dim());
    for (std::size_t t = 0; t < bvecs.size(); ++t) axpy(v, (*coeff)[t], bvecs[t]);
    return v;
  };
  c.multiplicative = true;
  for (std::size_t x = 0; x < n && c.multiplicative; ++x)
    for (std::size_t y = 0; y < n && c.multiplicative; ++y) {
      auto sx = sigma(q.algebra.basis_vector(x));
      auto sy = sigma(q.algebra.basis_vector(y));
      auto sxy = sigma(q.algebra.multiply(q.algebra.basis_vector(x), q.algebra.basis_vector(y)));
      c.multiplicative = sx && sy && sxy && *sxy == a.multiply(*sx, *sy);
    }

  if (b.is_zero()) {
    c.semisimple = true;
  } else {
    Restriction r = restrict_to_subalgebra(a, b);
    if (a.is_lie())
      c.semisimple = sgn(determinant(killing_form(r.algebra))) != 0;
    else
      c.semisimple = jacobson_radical(r.algebra).is_zero();
  }
  return c;
}

DecompositionCheck check_wedderburn_artin(const GradedAlgebra& a, const GradedDecomposition& d) {
  DecompositionCheck c;
  std::size_t total = 0;
  Subspace all(a.dim());
  for (const auto& b : d.components) {
    total += b.dim();
    all = sum(all, b);
  }
  c.direct = total == a.dim() && all.is_full();
  c.graded = std::all_of(d.components.begin(), d.components.end(),
                         [&](const auto& b) { return is_graded_subspace(b, a); });
  c.ideals = std::all_of(d.components.begin(), d.components.end(), [&](const auto& b) { return is_ideal(a, b); });
  c.orthogonal = true;
  for (std::size_t i = 0; i < d.components.size(); ++i)
    for (std::size_t j = 0; j < d.components.size(); ++j)
      if (i != j && !product_space(a, d.components[i], d.components[j]).is_zero()) c.orthogonal = false;
  c.graded_simple = c.ideals && std::all_of(d.components.begin(), d.components.end(),
                                            [&](const auto& b) { return is_graded_simple(a, b); });
  return c;
}

} // namespace gradalg
