#include <algorithm>
#include <random>

#include "knotinv/error.hpp"
#include "knotinv/vassiliev.hpp"

namespace knotinv {

namespace {

// Polynomials of one knot, computed on first use.
class KnotPolys {
 public:
  KnotPolys(const LinkDiagram& k, SkeinEngine& engine) : k_(k), engine_(engine) {}

  const LaurentPoly2& homfly() {
    if (!homfly_) homfly_ = engine_.homfly(k_);
    return *homfly_;
  }
  const LaurentPoly2& kauffman() {
    if (!kauffman_) kauffman_ = engine_.kauffman(k_);
    return *kauffman_;
  }
  const LaurentPoly& jones() {
    if (!jones_) jones_ = jones_from_homfly(homfly());
    return *jones_;
  }
  const LaurentPoly& conway() {
    if (!conway_) conway_ = conway_from_homfly(homfly());
    return *conway_;
  }
  const LaurentPoly& alexander() {
    if (!alexander_) alexander_ = alexander_from_homfly(homfly());
    return *alexander_;
  }
  const LaurentPoly& q() {
    if (!q_) q_ = q_from_kauffman(kauffman());
    return *q_;
  }

 private:
  const LinkDiagram& k_;
  SkeinEngine& engine_;
  std::optional<LaurentPoly2> homfly_, kauffman_;
  std::optional<LaurentPoly> jones_, conway_, alexander_, q_;
};

Scalar derivative_at(const LaurentPoly& p, unsigned order, const Scalar& x) {
  return evaluate(derivative(p, p.var(), order), x);
}

Scalar eval_tree(const DescriptorPtr& v, KnotPolys& polys) {
  using K = Descriptor::Kind;
  const auto& o = v->orders();
  const auto& pt = v->point();
  auto u = [](int x) { return static_cast<unsigned>(x); };
  switch (v->kind()) {
    case K::Const: return v->coefficient();
    case K::ConwayCoeff: return polys.conway().coeff(HalfInt::integer(o[0]));
    case K::JonesDeriv: return derivative_at(polys.jones(), u(o[0]), pt[0]);
    case K::AlexanderDeriv: return derivative_at(polys.alexander(), u(o[0]), pt[0]);
    case K::ConwayDeriv: return derivative_at(polys.conway(), u(o[0]), pt[0]);
    case K::QDeriv: return derivative_at(polys.q(), u(o[0]), pt[0]);
    case K::HomflyDeriv: {
      auto d = derivative(derivative(polys.homfly(), "a", u(o[0])), "z", u(o[1]));
      return evaluate(d, pt[0], pt[1]);
    }
    case K::HomflyCoeffDeriv:
      return derivative_at(polys.homfly().coefficient_of("z", HalfInt::integer(o[0])), u(o[1]), pt[0]);
    case K::KauffmanCoeffDeriv:
      return derivative_at(polys.kauffman().coefficient_of("x", HalfInt::integer(o[0])), u(o[1]), pt[0]);
    case K::Sum: return eval_tree(v->children()[0], polys) + eval_tree(v->children()[1], polys);
    case K::Product: return eval_tree(v->children()[0], polys) * eval_tree(v->children()[1], polys);
    case K::Scale: return v->coefficient() * eval_tree(v->children()[0], polys);
  }
  return {};
}

}  // namespace

Scalar eval_invariant(const DescriptorPtr& v, const LinkDiagram& k, SkeinEngine& engine) {
  if (!k.is_knot()) throw Error(ErrorKind::NotAKnot, "invariants are evaluated on knots only");
  KnotPolys polys(k, engine);
  return eval_tree(v, polys);
}

Scalar eval_singular(const DescriptorPtr& v, const SingularDiagram& s, SkeinEngine& engine) {
  if (!s.base().is_knot()) throw Error(ErrorKind::NotAKnot, "singular diagram is not a knot shadow");
  if (static_cast<int>(s.double_points().size()) > kMaxDoublePoints)
    throw Error(ErrorKind::DiagramTooLarge, std::to_string(s.double_points().size()) +
                                                " double points exceed the limit of " +
                                                std::to_string(kMaxDoublePoints));
  Scalar total;
  for (const auto& r : full_resolutions(s)) {
    Scalar value = eval_invariant(v, r.diagram, engine);
    if (r.negatives % 2) total -= value;
    else total += value;
  }
  return total;
}

SampleSet singular_samples(int double_points, int count, std::uint64_t seed, const KnotTable& table,
                           int max_summands) {
  if (double_points < 0 || count < 0 || max_summands < 1)
    throw Error(ErrorKind::InvalidArgument, "sample sizes must be nonnegative");
  std::vector<std::string> names;
  for (const auto& e : table.entries())
    if (e.diagram.size() > 0) names.push_back(e.name);
  if (names.empty()) throw Error(ErrorKind::InvalidArgument, "table has no knots with crossings");

  std::mt19937_64 rng(seed);
  SampleSet out;
  out.seed = seed;
  int attempts = 0;
  while (static_cast<int>(out.samples.size()) < count) {
    if (++attempts > 1000 * (count + 1))
      throw Error(ErrorKind::InvalidArgument, "cannot place that many double points on table knots");
    const int summands = std::uniform_int_distribution<int>(1, max_summands)(rng);
    std::string name;
    for (int i = 0; i < summands; ++i) {
      if (i) name += "#";
      name += names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)];
    }
    LinkDiagram d = table.resolve(name);
    if (static_cast<int>(d.size()) < double_points) continue;
    std::vector<int> idx(d.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::set<int> chosen(idx.begin(), idx.begin() + double_points);
    out.samples.push_back({name, SingularDiagram(std::move(d), std::move(chosen))});
  }
  return out;
}

DegreeBoundReport degree_bound_test(const DescriptorPtr& v, int degree, const SampleSet& samples,
                                    SkeinEngine& engine) {
  DegreeBoundReport report;
  report.degree = degree;
  report.seed = samples.seed;
  for (std::size_t i = 0; i < samples.samples.size(); ++i) {
    const auto& s = samples.samples[i];
    if (static_cast<int>(s.diagram.double_points().size()) != degree + 1)
      throw Error(ErrorKind::InvalidArgument, "sample " + std::to_string(i) + " does not have " +
                                                  std::to_string(degree + 1) + " double points");
    Scalar value = eval_singular(v, s.diagram, engine);
    ++report.tested;
    if (!value.is_zero()) {
      report.all_vanish = false;
      report.counterexample = i;
      report.counterexample_source = s.source;
      report.counterexample_value = value;
      break;
    }
  }
  return report;
}

}  // namespace knotinv
