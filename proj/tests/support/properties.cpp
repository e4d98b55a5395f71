#include "properties.hpp"

#include <random>
#include <sstream>

#include "bracket_oracle.hpp"
#include "knotinv/error.hpp"
#include "knotinv/skein.hpp"
#include "knotinv/vassiliev.hpp"
#include "random_diagrams.hpp"

namespace knotinv::testing {

namespace {

LaurentPoly2 monomial2(const std::string& v1, int e1, const std::string& v2, int e2) {
  LaurentPoly2 p(v1, v2);
  p.add_term(HalfInt::integer(e1), HalfInt::integer(e2), 1);
  return p;
}

// Runs `body` for each case with its own generator; body returns an empty
// string on success and a description otherwise. Library errors count as
// failures.
template <class Body>
PropertyResult run_cases(const std::string& name, std::uint64_t seed, int cases, Body body) {
  PropertyResult result;
  result.name = name;
  for (int i = 0; i < cases; ++i) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
    std::string failure;
    try {
      failure = body(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++result.cases;
    if (!failure.empty()) {
      if (result.failures++ == 0)
        result.first_failure = "seed " + std::to_string(seed + static_cast<std::uint64_t>(i)) + ": " + failure;
    }
  }
  return result;
}

LaurentPoly2 unoriented_kauffman(const LinkDiagram& d, SkeinEngine& engine) {
  const int w = writhe(d);
  return engine.kauffman(d) * monomial2("a", w, "x", 0);
}

}  // namespace

PropertyResult check_multiplicativity(std::uint64_t seed, int cases) {
  SkeinEngine engine;
  return run_cases("multiplicativity", seed, cases, [&](std::mt19937_64& rng) -> std::string {
    const LinkDiagram k = random_knot(rng, 7);
    const LinkDiagram l = random_knot(rng, 7);
    const LinkDiagram sum = connected_sum(k, l);
    if (engine.homfly(sum) != engine.homfly(k) * engine.homfly(l)) return "HOMFLY of " + to_pd_string(sum);
    if (engine.kauffman(sum) != engine.kauffman(k) * engine.kauffman(l)) return "Kauffman of " + to_pd_string(sum);
    return {};
  });
}

PropertyResult check_skein_identity(std::uint64_t seed, int cases) {
  SkeinEngine engine;
  return run_cases("skein identity", seed, cases, [&](std::mt19937_64& rng) -> std::string {
    const LinkDiagram d = random_diagram(rng, 8);
    if (d.size() == 0) return {};
    const std::size_t c = std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng);
    const LinkDiagram other = switch_crossing(d, c);
    const bool positive = d.crossings()[c].sign > 0;
    const LinkDiagram& plus = positive ? d : other;
    const LinkDiagram& minus = positive ? other : d;

    const LaurentPoly2 lhs = engine.homfly(plus) * monomial2("a", 1, "z", 0) -
                             engine.homfly(minus) * monomial2("a", -1, "z", 0);
    const LaurentPoly2 rhs = engine.homfly(smooth_crossing(d, c, Smoothing::Oriented)) * monomial2("a", 0, "z", 1);
    if (lhs != rhs) return "HOMFLY skein at crossing " + std::to_string(c) + " of " + to_pd_string(d);

    const LaurentPoly2 k_lhs = unoriented_kauffman(d, engine) + unoriented_kauffman(other, engine);
    const LaurentPoly2 k_rhs = (unoriented_kauffman(smooth_crossing(d, c, Smoothing::Unoriented0), engine) +
                                unoriented_kauffman(smooth_crossing(d, c, Smoothing::UnorientedInf), engine)) *
                               monomial2("a", 0, "x", 1);
    if (k_lhs != k_rhs) return "Kauffman skein at crossing " + std::to_string(c) + " of " + to_pd_string(d);
    return {};
  });
}

PropertyResult check_simplify_invariance(std::uint64_t seed, int cases) {
  SkeinEngine engine;
  return run_cases("simplify invariance", seed, cases, [&](std::mt19937_64& rng) -> std::string {
    const int strands = std::uniform_int_distribution<int>(2, 3)(rng);
    const int length = std::uniform_int_distribution<int>(1, 6)(rng);
    auto word = random_braid(rng, strands, length);
    const LinkDiagram d = braid_closure(word, strands);

    // Markov stabilization adds a kink; a cancelling pair adds a bigon.
    auto stabilized = word;
    stabilized.push_back({strands - 1, std::bernoulli_distribution(0.5)(rng) ? 1 : -1});
    auto padded = word;
    const int k = std::uniform_int_distribution<int>(0, strands - 2)(rng);
    const auto at = static_cast<std::ptrdiff_t>(std::uniform_int_distribution<std::size_t>(0, word.size())(rng));
    padded.insert(padded.begin() + at, {{k, 1}, {k, -1}});

    const LaurentPoly2 p = engine.homfly(d);
    const LaurentPoly2 f = engine.kauffman(d);
    for (const LinkDiagram& e : {braid_closure(stabilized, strands + 1), braid_closure(padded, strands)}) {
      for (const LinkDiagram& g : {e, simplify(e)}) {
        if (engine.homfly(g) != p) return "HOMFLY changed for " + to_pd_string(g);
        if (engine.kauffman(g) != f) return "Kauffman changed for " + to_pd_string(g);
      }
    }
    const LinkDiagram s = simplify(d);
    if (s.size() > d.size()) return "simplify grew " + to_pd_string(d);
    if (engine.homfly(s) != p || engine.kauffman(s) != f) return "simplify changed " + to_pd_string(d);
    return {};
  });
}

PropertyResult check_cache_transparency(std::uint64_t seed, int cases) {
  SkeinEngine cached;
  SkeinEngine plain(SkeinOptions{16, false, true});
  SkeinEngine unfactored(SkeinOptions{16, false, false});
  return run_cases("cache transparency", seed, cases, [&](std::mt19937_64& rng) -> std::string {
    const bool composite = std::bernoulli_distribution(0.3)(rng);
    const LinkDiagram d =
        composite ? bundled_table().resolve(random_table_sum(rng, 2)) : random_diagram(rng, 8);
    const LaurentPoly2 first = cached.homfly(d);
    const LaurentPoly2 first_f = cached.kauffman(d);
    if (plain.homfly(d) != first || plain.kauffman(d) != first_f) return "uncached differs on " + to_pd_string(d);
    if (!composite && (unfactored.homfly(d) != first || unfactored.kauffman(d) != first_f))
      return "unfactored differs on " + to_pd_string(d);
    if (cached.homfly(d) != first || cached.kauffman(d) != first_f) return "cache hit differs on " + to_pd_string(d);
    return {};
  });
}

PropertyResult check_resolution_bilinearity(std::uint64_t seed, int cases) {
  SkeinEngine engine;
  const std::vector<DescriptorPtr> invariants = {
      parse_descriptor("a2"), parse_descriptor("a4"), parse_descriptor("jones_deriv(2; 1)"),
      parse_descriptor("homfly_deriv(1, 1; 2, 1/2)"), parse_descriptor("q_deriv(1; 3)")};
  return run_cases("resolution bilinearity", seed, cases, [&](std::mt19937_64& rng) -> std::string {
    const LinkDiagram k = random_knot(rng, 8);
    std::vector<int> idx(k.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, idx.size()))(rng);
    const SingularDiagram s(k, std::set<int>(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count)));
    const auto point = static_cast<std::size_t>(idx[0]);
    const auto& v = invariants[std::uniform_int_distribution<std::size_t>(0, invariants.size() - 1)(rng)];
    const Scalar whole = eval_singular(v, s, engine);
    const Scalar split = eval_singular(v, resolve(s, point, 1), engine) - eval_singular(v, resolve(s, point, -1), engine);
    if (!(whole == split)) return to_string(v) + " at " + std::to_string(point) + " of " + to_pd_string(k);
    return {};
  });
}

PropertyResult check_jones_oracle(std::uint64_t seed, int cases) {
  SkeinEngine engine;
  return run_cases("jones state sum", seed, cases, [&](std::mt19937_64& rng) -> std::string {
    const LinkDiagram d = random_diagram(rng, 8);
    if (jones(d, engine) != jones_in_skein_convention(d)) return to_pd_string(d);
    return {};
  });
}

}  // namespace knotinv::testing
