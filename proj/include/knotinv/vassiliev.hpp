#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotinv/descriptor.hpp"
#include "knotinv/diagram.hpp"
#include "knotinv/interp.hpp"
#include "knotinv/laurent.hpp"
#include "knotinv/skein.hpp"
#include "knotinv/table.hpp"

namespace knotinv {

// ---------------------------------------------------------------- evaluation

// Raises NotAKnot for links. Polynomials are computed once per call.
Scalar eval_invariant(const DescriptorPtr& v, const LinkDiagram& k, SkeinEngine& engine = default_engine());

inline constexpr int kMaxDoublePoints = 12;

// Sum over all resolutions of (-1)^(negative crossings) v(resolution).
// Raises DiagramTooLarge above kMaxDoublePoints double points.
Scalar eval_singular(const DescriptorPtr& v, const SingularDiagram& s, SkeinEngine& engine = default_engine());

struct SingularSample {
  std::string source;  // knot name the diagram was built from, e.g. "3_1#4_1"
  SingularDiagram diagram;
};

struct SampleSet {
  std::uint64_t seed = 0;
  std::vector<SingularSample> samples;
};

// Random double points on table knots and connected sums of up to
// `max_summands` of them. Deterministic in the seed.
SampleSet singular_samples(int double_points, int count, std::uint64_t seed,
                           const KnotTable& table = default_table(), int max_summands = 3);

struct DegreeBoundReport {
  int degree = 0;
  std::uint64_t seed = 0;
  std::size_t tested = 0;
  bool all_vanish = true;
  // First sample with a nonzero value. Vanishing everywhere is evidence only.
  std::optional<std::size_t> counterexample;
  std::string counterexample_source;
  Scalar counterexample_value;
};

// Every sample must carry exactly degree + 1 double points.
DegreeBoundReport degree_bound_test(const DescriptorPtr& v, int degree, const SampleSet& samples,
                                    SkeinEngine& engine = default_engine());

// ---------------------------------------------------------------- growth

// v_i = c^i p(i) for i > order, with p of degree <= order.
struct ExponentialFit {
  Scalar base;
  int order = 0;
  LaurentPoly p{"i"};
  bool holds = false;
  double residual = 0.0;
  std::string reason;
};

struct GrowthReport {
  std::string descriptor;
  std::string base_knot;
  std::string pattern;
  int degree = 0;
  std::vector<Scalar> values;  // v(K # L^i), i = 0..i_max
  DegreeFit fit;
  bool consistent = false;  // fit.fits
  std::optional<ExponentialFit> exponential;
};

// Raises TooFewValues when i_max < degree + 2. When the degree test fails and
// v is a single derivative of a multiplicative polynomial, the report also
// carries the exponential law with base f_L(point).
GrowthReport growth_sequence(const DescriptorPtr& v, const NamedKnot& base, const NamedKnot& pattern, int i_max,
                             int degree, double tol = kDefaultTolerance, SkeinEngine& engine = default_engine());

enum class Family { Jones, Conway, Alexander, Q };
std::string to_string(Family f);
LaurentPoly family_polynomial(Family f, const LinkDiagram& k, SkeinEngine& engine = default_engine());

struct LawReport {
  Family family = Family::Jones;
  std::string pattern;
  Scalar point;
  int order = 0;
  std::vector<Scalar> values;  // f^(order)_{L^i}(point), i = 0..i_max
  ExponentialFit law;
};

// Fits f^(m)_{L^i}(a) / f_L(a)^i by a degree-m polynomial through
// i = m+1..2m+1 and checks the remaining points. Requires i_max >= 2m + 2.
LawReport growth_law_check(Family family, const NamedKnot& pattern, const Scalar& a, int m, int i_max,
                           double tol = kDefaultTolerance, SkeinEngine& engine = default_engine());

// ---------------------------------------------------------------- criteria

enum class Hypothesis {
  // g != 0, 1 with nonzero first derivatives in both variables.
  NonVassilievFirstOrder,
  // g != 0, 1, g_a != 0, g_z = 0, g_zz != 0; applies to even z-orders.
  NonVassilievSecondOrder,
  Inconclusive,
};
std::string to_string(Hypothesis h);

struct WitnessValues {
  std::string knot;
  Scalar g, g10, g01, g02;
};

struct CriterionVerdict {
  Scalar b, y;
  int m = 0, n = 0;
  Hypothesis hypothesis = Hypothesis::Inconclusive;
  std::string witness;  // empty when inconclusive
  std::vector<WitnessValues> evaluated;
};

// 3_1, 4_1 and 6_1 from the default table.
std::vector<NamedKnot> default_witnesses();

// Looks for a witness knot whose HOMFLY values at (b, y) rule out
// P^(m,n)(b, y) being of finite type. Exact points fire exactly; approximate
// points need a margin of 10 tol. Inconclusive makes no claim either way.
// Raises PoleAtZero for b = 0.
CriterionVerdict criterion_point(const Scalar& b, const Scalar& y, int m, int n,
                                 const std::vector<NamedKnot>& witnesses = default_witnesses(),
                                 double tol = kDefaultTolerance, SkeinEngine& engine = default_engine());

struct RootSet {
  bool everything = false;  // the polynomial vanished identically
  std::vector<std::complex<double>> roots;
};

struct HomflyLocus {
  std::string knot;
  RootSet value;      // P(a,0) in {0, 1}
  RootSet slope;      // dP/da (a,0) = 0
  RootSet curvature;  // d2P/dz2 (a,0) = 0
  RootSet combined() const;
};

// Distinct nonzero complex roots, found from the squarefree part by a
// companion-matrix eigenvalue solve followed by Newton polishing.
RootSet polynomial_roots(const LaurentPoly& p);
RootSet unite(const RootSet& a, const RootSet& b, double tol = 1e-8);
RootSet intersect(const RootSet& a, const RootSet& b, double tol = 1e-8);

HomflyLocus homfly_locus(const NamedKnot& k, SkeinEngine& engine = default_engine());

enum class TaylorOutcome { VassilievCoefficients, NotVassiliev, Inconclusive };
std::string to_string(TaylorOutcome o);

struct TaylorVerdict {
  Family family = Family::Jones;
  TaylorOutcome outcome = TaylorOutcome::Inconclusive;
  std::vector<Scalar> g;  // g(a), g'(a), g''(a)/2!, ...
  std::string witness;
  bool witness_fired = false;
  Scalar f_value, f_slope;  // witness f_L(g(a)), f_L'(g(a))
  std::vector<Scalar> composed;  // Taylor coefficients of f_L o g at a
  std::string note;
};

// Coefficients of f_K o g for the family, classified by g(a). Raises
// DegenerateG when g'(a) = 0.
TaylorVerdict taylor_criterion(const std::vector<Scalar>& g, Family family, double tol = kDefaultTolerance,
                               SkeinEngine& engine = default_engine());

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const ExponentialFit& f);
nlohmann::json to_json(const GrowthReport& r);
nlohmann::json to_json(const LawReport& r);
nlohmann::json to_json(const DegreeBoundReport& r);
nlohmann::json to_json(const CriterionVerdict& v);
nlohmann::json to_json(const RootSet& r);
nlohmann::json to_json(const HomflyLocus& l);
nlohmann::json to_json(const TaylorVerdict& v);

}  // namespace knotinv
