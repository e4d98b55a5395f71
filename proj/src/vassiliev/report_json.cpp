#include "knotinv/vassiliev.hpp"

namespace knotinv {

namespace {

nlohmann::json scalars(const std::vector<Scalar>& xs) {
  auto out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

nlohmann::json complex_list(const std::vector<std::complex<double>>& zs) {
  auto out = nlohmann::json::array();
  for (const auto& z : zs) out.push_back(to_json(Scalar::approx(z)));
  return out;
}

}  // namespace

nlohmann::json to_json(const Scalar& s) { return s.to_string(); }

nlohmann::json to_json(const ExponentialFit& f) {
  return {{"base", to_json(f.base)},
          {"order", f.order},
          {"p", to_string(f.p)},
          {"holds", f.holds},
          {"residual", f.residual},
          {"reason", f.reason}};
}

nlohmann::json to_json(const GrowthReport& r) {
  nlohmann::json j{{"descriptor", r.descriptor},
                   {"base", r.base_knot},
                   {"pattern", r.pattern},
                   {"degree", r.degree},
                   {"values", scalars(r.values)},
                   {"fits", r.fit.fits},
                   {"fitted_degree", r.fit.fits ? nlohmann::json(r.fit.degree) : nlohmann::json(nullptr)},
                   {"verdict", r.consistent ? "ConsistentWithDegree" : "Exceeds"}};
  j["exponential_fit"] = r.exponential ? to_json(*r.exponential) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const LawReport& r) {
  return {{"family", to_string(r.family)},
          {"pattern", r.pattern},
          {"point", to_json(r.point)},
          {"order", r.order},
          {"values", scalars(r.values)},
          {"verdict", r.law.holds ? "LawHolds" : "LawFails"},
          {"law", to_json(r.law)}};
}

nlohmann::json to_json(const DegreeBoundReport& r) {
  nlohmann::json j{{"degree", r.degree},
                   {"seed", r.seed},
                   {"tested", r.tested},
                   {"verdict", r.all_vanish ? "AllVanish" : "Counterexample"}};
  if (r.counterexample) {
    j["counterexample"] = {{"index", *r.counterexample},
                           {"source", r.counterexample_source},
                           {"value", to_json(r.counterexample_value)}};
  }
  return j;
}

nlohmann::json to_json(const CriterionVerdict& v) {
  auto evaluated = nlohmann::json::array();
  for (const auto& w : v.evaluated)
    evaluated.push_back({{"knot", w.knot},
                         {"g", to_json(w.g)},
                         {"g10", to_json(w.g10)},
                         {"g01", to_json(w.g01)},
                         {"g02", to_json(w.g02)}});
  return {{"point", {{"a", to_json(v.b)}, {"z", to_json(v.y)}}},
          {"orders", {v.m, v.n}},
          {"hypothesis", to_string(v.hypothesis)},
          {"witness", v.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.witness)},
          {"evaluated", evaluated}};
}

nlohmann::json to_json(const RootSet& r) {
  if (r.everything) return "all";
  return complex_list(r.roots);
}

nlohmann::json to_json(const HomflyLocus& l) {
  return {{"knot", l.knot},
          {"value_zero_or_one", to_json(l.value)},
          {"slope_zero", to_json(l.slope)},
          {"curvature_zero", to_json(l.curvature)},
          {"union", to_json(l.combined())}};
}

nlohmann::json to_json(const TaylorVerdict& v) {
  return {{"family", to_string(v.family)},
          {"outcome", to_string(v.outcome)},
          {"g", scalars(v.g)},
          {"witness", v.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.witness)},
          {"witness_fired", v.witness_fired},
          {"f_value", to_json(v.f_value)},
          {"f_slope", to_json(v.f_slope)},
          {"composed", scalars(v.composed)},
          {"note", v.note}};
}

}  // namespace knotinv
