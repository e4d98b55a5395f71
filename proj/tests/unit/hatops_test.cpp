#include <doctest.h>

#include "knotinv/error.hpp"
#include "knotinv/hatops.hpp"
#include "knotinv/vassiliev.hpp"

using namespace knotinv;

namespace {

NamedKnot knot(const char* name) { return bundled_table().named(name); }
const NamedKnot kUnknot{"unknot", LinkDiagram::unknot()};

std::vector<Scalar> at(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_SUITE("hatops") {
  TEST_CASE("bar operation") {
    const HatResult sq = bar_op(parse_descriptor("a2 * a2"), 4, kUnknot, knot("3_1"));
    CHECK(to_string(sq.poly) == "1*x^2");
    CHECK(sq.poly.evaluate(at({1})) == Scalar(1));
    CHECK(to_string(bar_op(parse_descriptor("a2"), 2, knot("4_1"), knot("3_1")).poly) == "-1 + 1*x^1");
    CHECK(to_string(bar_op(parse_descriptor("1"), 3, kUnknot, knot("5_2")).poly) == "1");
  }

  TEST_CASE("star operation") {
    const HatResult a2 = star_op(parse_descriptor("a2"), 2, knot("3_1"), knot("4_1"));
    CHECK(to_string(a2.poly) == "-1 + 1*x^1");
    CHECK(a2.poly.evaluate(at({0})) == Scalar(-1));
    const HatResult prod = star_op(parse_descriptor("a2 * jones_deriv(3; 1)"), 5, knot("3_1"), kUnknot);
    CHECK(prod.poly.evaluate(at({1})) == Scalar(54));
    CHECK(prod.degrees_bounded());
    CHECK(to_string(star_op(parse_descriptor("7/2"), 2, knot("3_1"), knot("4_1")).poly) == "7/2");
  }

  TEST_CASE("additive invariants give affine results") {
    for (const char* text : {"a2", "jones_deriv(3; 1)"})
      for (const auto& e : bundled_table().entries()) {
        const NamedKnot k{e.name, e.diagram};
        CHECK(bar_op(parse_descriptor(text), 4, kUnknot, k).poly.degree_in(0) <= 1);
        CHECK(star_op(parse_descriptor(text), 4, knot("5_1"), k).poly.degree_in(0) <= 1);
      }
  }

  TEST_CASE("hat operation") {
    CHECK(to_string(hat_op(parse_descriptor("a2"), 2, kUnknot, {knot("3_1")}).poly) == "1*x1^1");
    CHECK(to_string(hat_op(parse_descriptor("a2"), 2, knot("3_1"), {}).poly) == "1*x0^1");
    CHECK(to_string(hat_op(parse_descriptor("1"), 2, knot("3_1"), {knot("4_1")}).poly) == "1");

    const auto v = parse_descriptor("a2 * a2 + a4");
    const HatResult h = hat_op(v, 4, knot("3_1"), {knot("4_1")});
    CHECK(h.grid.values.size() == 25);
    CHECK(h.grid_consistent(0.0));
    CHECK(h.degrees_bounded());
    // Fixing x1 = 0 gives the bar polynomial of 3_1, fixing x0 = 0 the star polynomial of the unknot.
    const HatResult bar = bar_op(v, 4, kUnknot, knot("3_1"));
    const HatResult star = star_op(v, 4, knot("4_1"), kUnknot);
    for (int x = 0; x <= 6; ++x) {
      CHECK(h.poly.evaluate(at({x, 0})) == bar.poly.evaluate(at({x})));
      CHECK(h.poly.evaluate(at({0, x})) == star.poly.evaluate(at({x})));
    }
  }

  TEST_CASE("grid budget") {
    try {
      hat_op(parse_descriptor("a2"), 4, kUnknot, {knot("3_1"), knot("4_1"), knot("5_1")}, 100);
      FAIL("expected GridBudgetExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GridBudgetExceeded);
    }
  }

  TEST_CASE("rank") {
    const auto one = parse_descriptor("1"), a2 = parse_descriptor("a2");
    CHECK(rank_report({one, a2}, {kUnknot, knot("3_1")}).rank == 2);
    const RankReport prop = rank_report({a2, parse_descriptor("scale(2, a2)")}, {knot("3_1"), knot("5_1")});
    CHECK(prop.rank == 1);
    CHECK(prop.independent == std::vector<std::size_t>{0});

    std::vector<DescriptorPtr> basis;
    for (const char* t : {"1", "a2", "jones_deriv(3; 1)", "a2 * a2", "a4", "jones_deriv(4; 1)"})
      basis.push_back(parse_descriptor(t));
    std::vector<NamedKnot> knots;
    for (const char* k : {"unknot", "3_1", "4_1", "5_1", "5_2", "6_1"}) knots.push_back(knot(k));
    CHECK(rank_report(basis, knots).rank == 6);
  }

  TEST_CASE("fraction-free elimination") {
    const RankReport r = matrix_rank({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(r.rank == 2);
    CHECK(r.independent == std::vector<std::size_t>{0, 1});
    // Lexicographically first: a zero leading column is skipped.
    CHECK(matrix_rank({{0, 1, 1}, {0, 2, 3}}).independent == std::vector<std::size_t>{1, 2});
    const Scalar i = Scalar::imaginary_unit();
    CHECK(matrix_rank({{1, i}, {i, Scalar(-1)}}).rank == 1);
  }

  TEST_CASE("JSON form") {
    const auto j = to_json(bar_op(parse_descriptor("a2"), 2, knot("4_1"), knot("3_1")));
    CHECK(j["operation"] == "bar");
    CHECK(j["polynomial"] == "-1 + 1*x^1");
    CHECK(j["grid"].size() == 3);
    CHECK(j["grid"][2]["value"] == "1");
  }
}
