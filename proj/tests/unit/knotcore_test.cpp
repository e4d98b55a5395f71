#include <doctest.h>

#include <functional>
#include <random>
#include <sstream>

#include "knotinv/error.hpp"
#include "knotinv/table.hpp"
#include "random_diagrams.hpp"

using namespace knotinv;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("knotcore") {
  TEST_CASE("PD parsing") {
    const LinkDiagram t = parse_pd("X[1,5,2,4] X[3,1,4,6], X[5,3,6,2]");
    CHECK(t.size() == 3);
    CHECK(t.is_knot());
    CHECK(writhe(t) == 3);
    CHECK(to_pd_string(t) == "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    CHECK(parse_pd(to_pd_string(t)) == t);
  }

  TEST_CASE("malformed PD codes") {
    CHECK(kind_of([] { parse_pd("X[1,2,3]"); }) == ErrorKind::MalformedPD);
    CHECK(kind_of([] { parse_pd("Y[1,2,3,4]"); }) == ErrorKind::MalformedPD);
    CHECK(kind_of([] { parse_pd("X[1,5,2,4] X[3,1,4,6]"); }) == ErrorKind::InvalidPD);
  }

  TEST_CASE("components and links") {
    // Hopf link as the closure of sigma_1^2.
    const LinkDiagram hopf = testing::braid_closure({{0, 1}, {0, 1}}, 2);
    CHECK(hopf.components() == 2);
    CHECK_FALSE(hopf.is_knot());
    CHECK(hopf.traced_components().size() == 2);
    const LinkDiagram circles = testing::braid_closure({}, 3);
    CHECK(circles.components() == 3);
  }

  TEST_CASE("connected sums add crossings and stay knots") {
    const auto& t = bundled_table();
    const LinkDiagram s = connected_sum(t.resolve("3_1"), t.resolve("4_1"));
    CHECK(s.size() == 7);
    CHECK(s.is_knot());
    CHECK(writhe(s) == writhe(t.resolve("3_1")) + writhe(t.resolve("4_1")));
    CHECK(self_sum(t.resolve("3_1"), 0).is_canonical_unknot());
    CHECK(kind_of([&] { connected_sum(testing::braid_closure({{0, 1}, {0, 1}}, 2), s); }) == ErrorKind::NotAKnot);
  }

  TEST_CASE("crossing switches flip signs and are involutions") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
      const LinkDiagram d = testing::random_diagram(rng, 8);
      if (d.size() == 0) continue;
      const std::size_t c = std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng);
      const LinkDiagram s = switch_crossing(d, c);
      CHECK(s.crossings()[c].sign == -d.crossings()[c].sign);
      CHECK(switch_crossing(s, c) == d);
      CHECK(writhe(s) == writhe(d) - 2 * d.crossings()[c].sign);
    }
  }

  TEST_CASE("oriented smoothing changes component count by one") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
      const LinkDiagram d = testing::random_diagram(rng, 8);
      if (d.size() == 0) continue;
      const std::size_t c = std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng);
      const LinkDiagram s = smooth_crossing(d, c, Smoothing::Oriented);
      CHECK(s.size() == d.size() - 1);
      CHECK(std::abs(s.components() - d.components()) == 1);
    }
  }

  TEST_CASE("simplify removes kinks and bigons") {
    CHECK(simplify(testing::braid_closure({{0, 1}}, 2)).is_canonical_unknot());
    CHECK(simplify(testing::braid_closure({{0, 1}, {0, -1}}, 2)).size() == 0);
    const LinkDiagram trefoil = testing::braid_closure({{0, 1}, {0, 1}, {0, 1}}, 2);
    CHECK(simplify(trefoil).size() == 3);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
      const LinkDiagram d = testing::random_diagram(rng, 8);
      const LinkDiagram s = simplify(d);
      CHECK(s.size() <= d.size());
      CHECK(s.components() == d.components());
      CHECK(simplify(s) == s);
    }
  }

  TEST_CASE("singular diagrams and resolutions") {
    const LinkDiagram k = bundled_table().resolve("4_1");
    SingularDiagram s = singularize(singularize(k, 0), 2);
    CHECK(s.double_points() == std::set<int>{0, 2});
    const auto all = full_resolutions(s);
    CHECK(all.size() == 4);
    int negatives = 0;
    for (const auto& r : all) negatives += r.negatives;
    CHECK(negatives == 4);
    CHECK(kind_of([&] { resolve(s, 1, 1); }) == ErrorKind::NotADoublePoint);
    CHECK(kind_of([&] { singularize(k, 9); }) == ErrorKind::IndexOutOfRange);
    CHECK(resolve(s, 0, 1).base().crossings()[0].sign == 1);
  }

  TEST_CASE("bundled table") {
    const auto& t = bundled_table();
    for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"}) {
      const KnotTableEntry* e = t.find(name);
      REQUIRE(e != nullptr);
      CHECK(e->diagram.is_knot());
    }
    CHECK(t.find("3_1")->pd.size() == 3);
    CHECK(t.resolve("unknot").is_canonical_unknot());
    CHECK(t.resolve("3_1^2").size() == 6);
    CHECK(t.resolve("3_1#4_1#5_1").size() == 12);
    CHECK(kind_of([&] { t.resolve("9_42"); }) == ErrorKind::UnknownKnot);
  }

  TEST_CASE("table parsing errors") {
    std::istringstream missing_pd(R"({"name": "3_1"})");
    CHECK(kind_of([&] { parse_table(missing_pd); }) == ErrorKind::MalformedEntry);
    std::istringstream duplicate(R"({"name": "4_1", "pd": [[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]}
{"name": "4_1", "pd": [[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]})");
    CHECK(kind_of([&] { parse_table(duplicate); }) == ErrorKind::DuplicateName);
    std::istringstream link(R"({"name": "hopf", "pd": [[1,3,2,4],[3,1,4,2]]})");
    CHECK(kind_of([&] { parse_table(link); }) == ErrorKind::MalformedEntry);
    CHECK(kind_of([] { load_table("/nonexistent/knots.jsonl"); }) == ErrorKind::FileNotFound);

    std::istringstream good("\n{\"name\": \"t\", \"pd\": [[1,5,2,4],[3,1,4,6],[5,3,6,2]]}\n");
    CHECK(parse_table(good).entries().size() == 1);
  }
}
