#include "gradalg/identities.hpp"

#include "gradalg/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gradalg {

std::string to_string(ExponentVerdictKind k) {
  switch (k) {
    case ExponentVerdictKind::consistent: return "consistent";
    case ExponentVerdictKind::inconsistent: return "inconsistent";
    case ExponentVerdictKind::nilpotent: return "nilpotent, exponent undefined";
    case ExponentVerdictKind::no_prediction: return "no prediction";
  }
  return "unknown";
}

CodimReport codimension_report(const GradedAlgebra& a, std::size_t n_max, CodimMode mode,
                               const CodimOptions& opts) {
  if (n_max == 0) throw std::invalid_argument("n-max must be at least 1");
  for (std::size_t n = 1; n <= n_max; ++n) check_codim_caps(a, n, opts);
  CodimReport report;
  report.algebra = a.name();
  report.algebra_dim = a.dim();
  for (std::size_t n = 1; n <= n_max; ++n) {
    CodimEntry e;
    e.n = n;
    if (auto zero = nilpotent_shortcut(a, n)) {
      e.value = *zero;
      e.shortcut = true;
      if (mode != CodimMode::gr) e.h_value = *zero;
    } else if (mode == CodimMode::h) {
      CodimValue h = h_codimension(a, n, opts);
      e.value = h.value;
      e.h_value = h.value;
      e.stats = h.stats;
    } else {
      CodimValue g = graded_codimension(a, n, opts);
      e.value = g.value;
      e.stats = g.stats;
      if (mode == CodimMode::both) {
        e.h_value = h_codimension(a, n, opts).value;
        if (*e.h_value != e.value)
          throw InvariantViolation("graded and H-codimension differ at n = " + std::to_string(n));
      }
    }
    report.entries.push_back(e);
  }
  return report;
}

Rat nth_root_truncated(std::uint64_t c, std::size_t n, unsigned digits) {
  if (n == 0) throw std::invalid_argument("root index must be positive");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled_pow;
  mpz_pow_ui(scaled_pow.get_mpz_t(), scale.get_mpz_t(), n);
  mpz_class x = mpz_class(std::to_string(c)) * scaled_pow;
  mpz_class root;
  mpz_root(root.get_mpz_t(), x.get_mpz_t(), n);
  Rat r(root, scale);
  r.canonicalize();
  return r;
}

namespace {

Rat rat_pow(const Rat& base, long e) {
  Rat r = 1;
  Rat b = e < 0 ? Rat(1 / base) : base;
  for (long i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

Rat big(std::uint64_t v) { return Rat(mpz_class(std::to_string(v))); }

} // namespace

ExponentVerdict exponent_estimate(const CodimReport& report, std::optional<std::uint64_t> predicted_d,
                                  std::optional<long> r_bound) {
  const auto& es = report.entries;
  if (es.size() < 3) throw std::invalid_argument("exponent estimate needs at least three codimensions");
  ExponentVerdict v;
  v.predicted_d = predicted_d;
  v.r_bound = r_bound.value_or(static_cast<long>(report.algebra_dim));
  if (v.r_bound < 0) throw std::invalid_argument("polynomial degree bound must be non-negative");

  for (std::size_t i = 0; i < es.size(); ++i) {
    v.roots.push_back(to_decimal(nth_root_truncated(es[i].value, es[i].n)));
    if (i + 1 < es.size())
      v.ratios.push_back(es[i].value == 0 ? std::nullopt : std::optional<Rat>(big(es[i + 1].value) / big(es[i].value)));
  }

  if (es.back().value == 0) {
    std::size_t first_zero = es.size();
    while (first_zero > 0 && es[first_zero - 1].value == 0) --first_zero;
    v.kind = ExponentVerdictKind::nilpotent;
    v.detail = "c_n = 0 for n >= " + std::to_string(es[first_zero].n);
    return v;
  }
  if (!predicted_d) {
    v.kind = ExponentVerdictKind::no_prediction;
    return v;
  }
  if (*predicted_d == 0) throw std::invalid_argument("predicted exponent must be positive");

  const Rat d = big(*predicted_d);
  const long r = v.r_bound;
  std::vector<Rat> q;
  for (const auto& e : es) {
    if (e.value == 0) {
      v.kind = ExponentVerdictKind::inconsistent;
      v.detail = "c_" + std::to_string(e.n) + " = 0 before a nonzero value";
      return v;
    }
    q.push_back(big(e.value) / rat_pow(d, static_cast<long>(e.n)));
  }

  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    const Rat n = static_cast<long>(es[i].n);
    const Rat step = (n + 1) / n;
    const Rat rho = q[i + 1] / q[i];
    if (rho > rat_pow(step, r) || rho < rat_pow(step, -r)) {
      v.kind = ExponentVerdictKind::inconsistent;
      v.detail = "q_" + std::to_string(es[i + 1].n) + " / q_" + std::to_string(es[i].n) + " = " + to_string(rho) +
                 " leaves [(n/(n+1))^R, ((n+1)/n)^R] with R = " + std::to_string(r);
      return v;
    }
  }

  Rat lo, hi;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Rat nr = rat_pow(Rat(static_cast<long>(es[i].n)), r);
    Rat c1 = q[i] * nr, c2 = q[i] / nr;
    if (i == 0 || c1 < lo) lo = c1;
    if (i == 0 || c2 > hi) hi = c2;
  }
  v.c_lower = lo;
  v.c_upper = hi;
  v.kind = ExponentVerdictKind::consistent;
  v.detail = "C1 n^-R d^n <= c_n <= C2 n^R d^n on n = 1.." + std::to_string(es.back().n) +
             " with R = " + std::to_string(r);
  return v;
}

} // namespace gradalg
