#include <doctest.h>

#include "bracket_oracle.hpp"
#include "knotinv/error.hpp"
#include "knotinv/skein.hpp"
#include "knotinv/table.hpp"
#include "properties.hpp"
#include "random_diagrams.hpp"

using namespace knotinv;

namespace {

LinkDiagram knot(const char* name) { return bundled_table().resolve(name); }

void check_property(const testing::PropertyResult& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_SUITE("skein") {
  TEST_CASE("golden HOMFLY polynomials") {
    CHECK(to_string(homfly(knot("3_1"))) == "-1*a^-4 + 2*a^-2 + 1*a^-2*z^2");
    CHECK(to_string(homfly(knot("4_1"))) == "1*a^-2 + -1 + -1*z^2 + 1*a^2");
    CHECK(to_string(homfly(knot("6_1"))) == "1*a^-4 + -1*a^-2 + -1*a^-2*z^2 + -1*z^2 + 1*a^2");
    CHECK(to_string(homfly(LinkDiagram::unknot())) == "1");
  }

  TEST_CASE("unlinks") {
    const LinkDiagram two = testing::braid_closure({}, 2);
    // (a - a^-1) / z has no Laurent form in a, z alone; check the relation.
    LaurentPoly2 z("a", "z"), diff("a", "z");
    z.add_term(HalfInt::integer(0), HalfInt::integer(1), 1);
    diff.add_term(HalfInt::integer(1), HalfInt::integer(0), 1);
    diff.add_term(HalfInt::integer(-1), HalfInt::integer(0), -1);
    CHECK(homfly(two) * z == diff);
  }

  TEST_CASE("derived polynomials") {
    CHECK(to_string(jones(knot("3_1"))) == "-1*t^-4 + 1*t^-3 + 1*t^-1");
    CHECK(to_string(jones(knot("4_1"))) == "1*t^-2 + -1*t^-1 + 1 + -1*t^1 + 1*t^2");
    CHECK(to_string(conway(knot("3_1"))) == "1 + 1*z^2");
    CHECK(to_string(conway(knot("5_1"))) == "1 + 3*z^2 + 1*z^4");
    CHECK(to_string(conway(knot("5_2"))) == "1 + 2*z^2");
    CHECK(to_string(conway(knot("6_2"))) == "1 + -1*z^2 + -1*z^4");
    CHECK(to_string(conway(knot("6_3"))) == "1 + 1*z^2 + 1*z^4");
    CHECK(to_string(qpoly(knot("3_1"))) == "-3 + 2*x^1 + 2*x^2");
    CHECK(to_string(qpoly(knot("4_1"))) == "-3 + -2*x^1 + 4*x^2 + 2*x^3");
    CHECK(conway_degree(knot("5_1")) == 4);
  }

  TEST_CASE("Alexander from HOMFLY is symmetric with value 1 at 1") {
    for (const auto& e : bundled_table().entries()) {
      const LaurentPoly a = alexander(e.diagram);
      CHECK(evaluate(a, 1) == Scalar(1));
      for (const auto& [exp, c] : a.terms()) CHECK(a.coeff(HalfInt::halves(-exp.twice())) == c);
    }
  }

  TEST_CASE("knot polynomials lie in their lattices") {
    for (const auto& e : bundled_table().entries()) {
      CHECK(in_homfly_knot_lattice(homfly(e.diagram)));
      CHECK(in_kauffman_knot_lattice(kauffman(e.diagram)));
    }
  }

  TEST_CASE("Jones matches the bracket state sum") {
    CHECK(to_string(testing::jones_by_state_sum(knot("3_1"))) == "1*t^1 + 1*t^3 + -1*t^4");
    for (const auto& e : bundled_table().entries()) CHECK(jones(e.diagram) == testing::jones_in_skein_convention(e.diagram));
    check_property(testing::check_jones_oracle(500, 100));
  }

  TEST_CASE("crossing budget") {
    SkeinEngine small(SkeinOptions{4, true, true});
    CHECK(small.homfly(knot("3_1")) == homfly(knot("3_1")));
    try {
      small.homfly(knot("5_1"));
      FAIL("expected DiagramTooLarge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DiagramTooLarge);
    }
    // Factors are bounded separately.
    CHECK(small.homfly(bundled_table().resolve("3_1^3")) == homfly(knot("3_1")).pow(3));
  }

  TEST_CASE("cache bookkeeping") {
    SkeinEngine engine;
    engine.homfly(knot("6_2"));
    CHECK(engine.cache_size() > 0);
    engine.clear_cache();
    CHECK(engine.cache_size() == 0);
  }

  TEST_CASE("property: multiplicativity") { check_property(testing::check_multiplicativity(100, 100)); }
  TEST_CASE("property: skein identity") { check_property(testing::check_skein_identity(200, 100)); }
  TEST_CASE("property: simplify invariance") { check_property(testing::check_simplify_invariance(300, 100)); }
  TEST_CASE("property: cache transparency") { check_property(testing::check_cache_transparency(400, 100)); }
}
