#include <algorithm>

#include "knotinv/error.hpp"
#include "knotinv/vassiliev.hpp"

namespace knotinv {

namespace {

ExponentialFit fit_law(const std::vector<Scalar>& values, const Scalar& base, int order, double tol) {
  ExponentialFit fit;
  fit.base = base;
  fit.order = order;
  if (base.is_exact() ? base.exact().is_zero() : base.abs() <= 10 * tol) {
    fit.reason = "base value is zero";
    return fit;
  }
  const int count = static_cast<int>(values.size());
  if (count < 2 * order + 2) {
    fit.reason = "need values up to i = " + std::to_string(2 * order + 1) + " plus one check point";
    return fit;
  }
  std::vector<Scalar> ratios;
  Scalar power(1);
  for (const auto& v : values) {
    ratios.push_back(v / power);
    power *= base;
  }
  std::vector<Scalar> window(ratios.begin() + order + 1, ratios.begin() + 2 * order + 2);
  fit.p = shift_argument(interp_grid(window, "i"), Scalar(-(order + 1)));

  double scale = 1.0;
  for (const auto& r : ratios) scale = std::max(scale, r.abs());
  fit.holds = true;
  for (int i = 2 * order + 2; i < count; ++i) {
    Scalar diff = ratios[i] - evaluate(fit.p, Scalar(i));
    fit.residual = std::max(fit.residual, diff.abs());
    bool ok = diff.is_exact() ? diff.exact().is_zero() : diff.abs() <= tol * scale;
    if (!ok) fit.holds = false;
  }
  if (!fit.holds) fit.reason = "ratios do not follow a polynomial of degree " + std::to_string(order);
  return fit;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Jones: return "jones";
    case Family::Conway: return "conway";
    case Family::Alexander: return "alexander";
    case Family::Q: return "q";
  }
  return {};
}

LaurentPoly family_polynomial(Family f, const LinkDiagram& k, SkeinEngine& engine) {
  switch (f) {
    case Family::Jones: return jones(k, engine);
    case Family::Conway: return conway(k, engine);
    case Family::Alexander: return alexander(k, engine);
    case Family::Q: return qpoly(k, engine);
  }
  return LaurentPoly();
}

GrowthReport growth_sequence(const DescriptorPtr& v, const NamedKnot& base, const NamedKnot& pattern, int i_max,
                             int degree, double tol, SkeinEngine& engine) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  if (i_max < degree + 2)
    throw Error(ErrorKind::TooFewValues, "growth test of degree " + std::to_string(degree) +
                                             " needs i_max >= " + std::to_string(degree + 2));
  if (!base.diagram.is_knot() || !pattern.diagram.is_knot())
    throw Error(ErrorKind::NotAKnot, "growth sequences are built from knots");

  GrowthReport report;
  report.descriptor = to_string(v);
  report.base_knot = base.name;
  report.pattern = pattern.name;
  report.degree = degree;
  LinkDiagram current = base.diagram;
  for (int i = 0; i <= i_max; ++i) {
    if (i > 0) current = connected_sum(current, pattern.diagram);
    report.values.push_back(eval_invariant(v, current, engine));
  }
  report.fit = finite_diff_degree(report.values, degree, tol);
  report.consistent = report.fit.fits;
  if (report.consistent) return report;

  using K = Descriptor::Kind;
  std::optional<Family> family;
  switch (v->kind()) {
    case K::JonesDeriv: family = Family::Jones; break;
    case K::AlexanderDeriv: family = Family::Alexander; break;
    case K::ConwayDeriv: family = Family::Conway; break;
    case K::QDeriv: family = Family::Q; break;
    default: break;
  }
  try {
    if (family) {
      Scalar c = evaluate(family_polynomial(*family, pattern.diagram, engine), v->point()[0]);
      report.exponential = fit_law(report.values, c, v->orders()[0], tol);
    } else if (v->kind() == K::HomflyDeriv) {
      Scalar c = evaluate(engine.homfly(pattern.diagram), v->point()[0], v->point()[1]);
      report.exponential = fit_law(report.values, c, v->orders()[0] + v->orders()[1], tol);
    }
  } catch (const Error& e) {
    ExponentialFit failed;
    failed.reason = e.what();
    report.exponential = failed;
  }
  return report;
}

LawReport growth_law_check(Family family, const NamedKnot& pattern, const Scalar& a, int m, int i_max, double tol,
                           SkeinEngine& engine) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "order must be nonnegative");
  if (i_max < 2 * m + 2)
    throw Error(ErrorKind::TooFewValues, "law check of order " + std::to_string(m) + " needs i_max >= " +
                                             std::to_string(2 * m + 2));
  if (!pattern.diagram.is_knot()) throw Error(ErrorKind::NotAKnot, "pattern must be a knot");

  LawReport report;
  report.family = family;
  report.pattern = pattern.name;
  report.point = a;
  report.order = m;
  LinkDiagram current = LinkDiagram::unknot();
  for (int i = 0; i <= i_max; ++i) {
    if (i > 0) current = connected_sum(current, pattern.diagram);
    LaurentPoly f = family_polynomial(family, current, engine);
    report.values.push_back(evaluate(derivative(f, f.var(), static_cast<unsigned>(m)), a));
  }
  const Scalar base = evaluate(family_polynomial(family, pattern.diagram, engine), a);
  report.law = fit_law(report.values, base, m, tol);
  return report;
}

}  // namespace knotinv
