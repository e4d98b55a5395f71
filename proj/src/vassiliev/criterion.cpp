#include <algorithm>

#include <Eigen/Eigenvalues>

#include "knotinv/error.hpp"
#include "knotinv/vassiliev.hpp"

namespace knotinv {

namespace {

// Zero test that refuses to decide inside the roundoff band.
enum class Zero { Yes, No, Unclear };

Zero zero_test(const Scalar& v, double tol) {
  if (v.is_exact()) return v.exact().is_zero() ? Zero::Yes : Zero::No;
  double m = v.abs();
  if (m <= tol) return Zero::Yes;
  if (m > 10 * tol) return Zero::No;
  return Zero::Unclear;
}

bool surely_nonzero(const Scalar& v, double tol) { return zero_test(v, tol) == Zero::No; }

bool surely_not_zero_or_one(const Scalar& v, double tol) {
  return surely_nonzero(v, tol) && surely_nonzero(v - Scalar(1), tol);
}

// ---- exact dense polynomials for root finding

using Dense = std::vector<mpq_class>;

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Dense dense_derivative(const Dense& p) {
  Dense d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {Dense{}, a};
  Dense q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::complex<double> horner(const std::vector<std::complex<double>>& p, std::complex<double> x) {
  std::complex<double> acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

void add_distinct(std::vector<std::complex<double>>& set, std::complex<double> z, double tol) {
  for (const auto& w : set)
    if (std::abs(w - z) <= tol) return;
  set.push_back(z);
}

void sort_roots(std::vector<std::complex<double>>& roots) {
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    if (std::abs(x.real() - y.real()) > 1e-12) return x.real() < y.real();
    return x.imag() < y.imag();
  });
}

}  // namespace

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::NonVassilievFirstOrder: return "NonVassilievFirstOrder";
    case Hypothesis::NonVassilievSecondOrder: return "NonVassilievSecondOrder";
    case Hypothesis::Inconclusive: return "Inconclusive";
  }
  return {};
}

std::string to_string(TaylorOutcome o) {
  switch (o) {
    case TaylorOutcome::VassilievCoefficients: return "VassilievCoefficients";
    case TaylorOutcome::NotVassiliev: return "NotVassiliev";
    case TaylorOutcome::Inconclusive: return "Inconclusive";
  }
  return {};
}

std::vector<NamedKnot> default_witnesses() {
  const auto& table = default_table();
  return {table.named("3_1"), table.named("4_1"), table.named("6_1")};
}

CriterionVerdict criterion_point(const Scalar& b, const Scalar& y, int m, int n,
                                 const std::vector<NamedKnot>& witnesses, double tol, SkeinEngine& engine) {
  if (m < 0 || n < 0) throw Error(ErrorKind::InvalidArgument, "derivative orders must be nonnegative");
  if (witnesses.empty()) throw Error(ErrorKind::InvalidArgument, "at least one witness knot is required");
  if (b.is_zero(0.0)) throw Error(ErrorKind::PoleAtZero, "HOMFLY values have a pole at a = 0");

  CriterionVerdict verdict;
  verdict.b = b;
  verdict.y = y;
  verdict.m = m;
  verdict.n = n;
  for (const auto& w : witnesses) {
    const LaurentPoly2 p = engine.homfly(w.diagram);
    WitnessValues vals{w.name, evaluate(p, b, y), evaluate(derivative(p, "a", 1), b, y),
                       evaluate(derivative(p, "z", 1), b, y), evaluate(derivative(p, "z", 2), b, y)};
    verdict.evaluated.push_back(vals);
    if (verdict.hypothesis != Hypothesis::Inconclusive) continue;

    const bool base = surely_not_zero_or_one(vals.g, tol) && surely_nonzero(vals.g10, tol);
    if (base && surely_nonzero(vals.g01, tol)) {
      verdict.hypothesis = Hypothesis::NonVassilievFirstOrder;
      verdict.witness = w.name;
    } else if (base && n % 2 == 0 && zero_test(vals.g01, tol) == Zero::Yes && surely_nonzero(vals.g02, tol)) {
      verdict.hypothesis = Hypothesis::NonVassilievSecondOrder;
      verdict.witness = w.name;
    }
  }
  return verdict;
}

RootSet polynomial_roots(const LaurentPoly& p) {
  RootSet out;
  if (p.is_zero()) {
    out.everything = true;
    return out;
  }
  const int low = p.min_exponent()->twice();
  const int high = p.max_exponent()->twice();
  for (const auto& [e, c] : p.terms())
    if (!e.is_integer() || !c.is_exact() || sgn(c.exact().im) != 0)
      throw Error(ErrorKind::InvalidArgument, "root finding needs integral exponents and rational coefficients");
  Dense dense((high - low) / 2 + 1);
  for (const auto& [e, c] : p.terms()) dense[(e.twice() - low) / 2] = c.exact().re;

  Dense g = dense_gcd(dense, dense_derivative(dense));
  Dense sq = g.size() > 1 ? divmod(dense, g).first : dense;
  const std::size_t deg = sq.size() - 1;
  if (deg == 0) return out;

  std::vector<std::complex<double>> coeffs;
  for (const auto& c : sq) coeffs.emplace_back(mpq_class(c / sq.back()).get_d(), 0.0);
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<long>(deg), static_cast<long>(deg));
  for (std::size_t i = 1; i < deg; ++i) companion(static_cast<long>(i), static_cast<long>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) companion(static_cast<long>(i), static_cast<long>(deg - 1)) = -coeffs[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);

  std::vector<std::complex<double>> slope;
  for (std::size_t i = 1; i < coeffs.size(); ++i) slope.push_back(coeffs[i] * static_cast<double>(i));
  for (long i = 0; i < solver.eigenvalues().size(); ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    for (int step = 0; step < 8; ++step) {
      std::complex<double> d = horner(slope, z);
      if (std::abs(d) == 0.0) break;
      std::complex<double> delta = horner(coeffs, z) / d;
      z -= delta;
      if (std::abs(delta) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    if (std::abs(z.real()) < 1e-14) z.real(0.0);
    if (std::abs(z.imag()) < 1e-14) z.imag(0.0);
    add_distinct(out.roots, z, 1e-8);
  }
  sort_roots(out.roots);
  return out;
}

RootSet unite(const RootSet& a, const RootSet& b, double tol) {
  RootSet out;
  out.everything = a.everything || b.everything;
  if (out.everything) return out;
  out.roots = a.roots;
  for (const auto& z : b.roots) add_distinct(out.roots, z, tol);
  sort_roots(out.roots);
  return out;
}

RootSet intersect(const RootSet& a, const RootSet& b, double tol) {
  if (a.everything) return b;
  if (b.everything) return a;
  RootSet out;
  for (const auto& z : a.roots)
    if (std::any_of(b.roots.begin(), b.roots.end(), [&](const auto& w) { return std::abs(w - z) <= tol; }))
      add_distinct(out.roots, z, tol);
  sort_roots(out.roots);
  return out;
}

RootSet HomflyLocus::combined() const { return unite(unite(value, slope), curvature); }

HomflyLocus homfly_locus(const NamedKnot& k, SkeinEngine& engine) {
  const LaurentPoly2 p = engine.homfly(k.diagram);
  const LaurentPoly at_zero = p.coefficient_of("z", HalfInt::integer(0));
  const LaurentPoly one = LaurentPoly::constant(1, "a");
  HomflyLocus locus;
  locus.knot = k.name;
  locus.value = unite(polynomial_roots(at_zero), polynomial_roots(at_zero - one));
  locus.slope = polynomial_roots(derivative(at_zero, "a", 1));
  locus.curvature = polynomial_roots(p.coefficient_of("z", HalfInt::integer(2)) * Scalar(2));
  return locus;
}

TaylorVerdict taylor_criterion(const std::vector<Scalar>& g, Family family, double tol, SkeinEngine& engine) {
  if (g.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least g(a) and g'(a)");
  if (zero_test(g[1], tol) != Zero::No) throw Error(ErrorKind::DegenerateG, "g'(a) must be nonzero");

  TaylorVerdict verdict;
  verdict.family = family;
  verdict.g = g;
  const Scalar& g0 = g[0];
  const Zero at_one = zero_test(g0 - Scalar(1), tol);
  const Zero at_zero = zero_test(g0, tol);

  switch (family) {
    case Family::Jones:
      verdict.outcome = at_one == Zero::Yes ? TaylorOutcome::VassilievCoefficients
                        : at_one == Zero::No ? TaylorOutcome::NotVassiliev
                                             : TaylorOutcome::Inconclusive;
      break;
    case Family::Conway:
      verdict.outcome = at_zero == Zero::Yes ? TaylorOutcome::VassilievCoefficients
                        : at_zero == Zero::No ? TaylorOutcome::NotVassiliev
                                              : TaylorOutcome::Inconclusive;
      break;
    case Family::Alexander:
      verdict.outcome = at_one == Zero::Yes ? TaylorOutcome::VassilievCoefficients
                        : at_one == Zero::No ? TaylorOutcome::NotVassiliev
                                             : TaylorOutcome::Inconclusive;
      verdict.note =
          "Alexander coefficients are classified as finite type exactly when g(a) = 1, in line with "
          "the derivative dichotomy for the Alexander polynomial at t = 1; the opposite reading of the "
          "composed-variable statement contradicts that dichotomy and is not followed";
      break;
    case Family::Q: {
      const Zero at_minus_two = zero_test(g0 + Scalar(2), tol);
      if (at_one == Zero::No && at_minus_two == Zero::No)
        verdict.outcome = TaylorOutcome::NotVassiliev;
      else
        verdict.outcome = TaylorOutcome::Inconclusive;
      break;
    }
  }
  if (verdict.outcome == TaylorOutcome::Inconclusive && family != Family::Q && verdict.note.empty())
    verdict.note = "g(a) lies within the tolerance band of the critical value";
  if (verdict.outcome == TaylorOutcome::Inconclusive && family == Family::Q)
    verdict.note = "Q coefficients at g(a) = -2 or 1 are not settled by the growth argument";
  if (verdict.outcome != TaylorOutcome::NotVassiliev) return verdict;

  // Witness search: 3_1 and 4_1 first, then the rest of the table.
  const auto& table = default_table();
  std::vector<std::string> order{"3_1", "4_1"};
  for (const auto& e : table.entries())
    if (e.diagram.size() > 0 && std::find(order.begin(), order.end(), e.name) == order.end())
      order.push_back(e.name);
  for (const auto& name : order) {
    if (!table.find(name)) continue;
    const LaurentPoly f = family_polynomial(family, table.find(name)->diagram, engine);
    Scalar value, slope;
    try {
      value = evaluate(f, g0);
      slope = evaluate(derivative(f, f.var(), 1), g0);
    } catch (const Error&) {
      continue;
    }
    if (surely_not_zero_or_one(value, tol) && surely_nonzero(slope, tol)) {
      verdict.witness = name;
      verdict.witness_fired = true;
      verdict.f_value = value;
      verdict.f_slope = slope;
      verdict.composed = series_compose(f, g, static_cast<unsigned>(g.size() - 1));
      return verdict;
    }
  }
  std::string why = "no table knot L has f_L(g(a)) outside {0, 1} with f_L'(g(a)) != 0";
  verdict.note = verdict.note.empty() ? why : verdict.note + "; " + why;
  verdict.note += "; the classification rests on the value of g(a) alone";
  return verdict;
}

}  // namespace knotinv
