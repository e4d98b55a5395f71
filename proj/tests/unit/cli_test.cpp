#include <doctest.h>

#include <sstream>

#include "knotinv/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = knotinv::cli::run(args, out, err);
  return {code, out.str()};
}

std::vector<std::string> with_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  return args;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("poly prints canonical text") {
    const Result r = run({"poly", "--knot", "3_1", "--which", "homfly"});
    CHECK(r.code == 0);
    CHECK(r.out == "-1*a^-4 + 2*a^-2 + 1*a^-2*z^2\n");
    CHECK(run({"poly", "--knot", "4_1", "--which", "jones"}).out == "1*t^-2 + -1*t^-1 + 1 + -1*t^1 + 1*t^2\n");
  }

  TEST_CASE("Kanenobu identity through the command line") {
    const Result q = run({"eval", "--inv", "q_deriv(1; -2)", "--knot", "4_1"});
    const Result j = run({"eval", "--inv", "jones_deriv(2; 1)", "--knot", "4_1"});
    CHECK(q.code == 0);
    CHECK(q.out == "6\n");
    CHECK(q.out == j.out);
  }

  TEST_CASE("criterion at the trivial point") {
    const Result r = run(with_json({"criterion", "--point", "a=1,z=0", "--orders", "1,2"}));
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["hypothesis"] == "Inconclusive");
    const Result fired = run(with_json({"criterion", "--point", "a=1/2+I,z=2", "--orders", "1,1"}));
    CHECK(nlohmann::json::parse(fired.out)["hypothesis"] == "NonVassilievFirstOrder");
  }

  TEST_CASE("domain errors exit 2 with a JSON line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"eval", "--inv", "a2", "--knot", "9_42"},
             {"criterion", "--point", "a=0,z=1", "--orders", "0,0"},
             {"criterion", "--point", "a=1+,z=1", "--orders", "0,0"},
             {"eval", "--inv", "jones_deriv(3 1)", "--knot", "3_1"}}) {
      const Result r = run(args);
      CHECK(r.code == 2);
      const auto j = nlohmann::json::parse(r.out);
      CHECK(j["error"]["kind"].is_string());
      CHECK(r.out.find('\n') == r.out.size() - 1);
    }
    CHECK(nlohmann::json::parse(run({"criterion", "--point", "a=0,z=1", "--orders", "0,0"}).out)["error"]["kind"] ==
          "PoleAtZero");
  }

  TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"poly"}).code == 1);
    CHECK(run({"poly", "--knot", "3_1", "--which", "bogus"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("text output is rendered from JSON") {
    const std::vector<std::vector<std::string>> commands = {
        {"poly", "--knot", "5_2", "--which", "kauffman"},
        {"eval", "--inv", "a2 * a4", "--knot", "6_2"},
        {"growth", "--inv", "jones_deriv(1; 2)", "--base", "unknot", "--pattern", "3_1", "--imax", "6", "--degree", "1"},
        {"law", "--family", "jones", "--pattern", "3_1", "--at", "2", "--order", "1"},
        {"criterion", "--point", "a=2,z=3/2", "--orders", "1,1", "--witnesses", "3_1,4_1"},
        {"taylor", "--family", "jones", "--g", "2,1"},
        {"locus", "--knot", "4_1"},
        {"hat", "--inv", "a2", "--degree", "2", "--knot", "3_1", "--patterns", "4_1"},
        {"hat", "--inv", "a2", "--degree", "2", "--knot", "3_1", "--bar", "4_1"},
        {"rank", "--invs", "1;a2;jones_deriv(3;1)", "--knots", "unknot,3_1,4_1,5_1"},
        {"singular", "--inv", "a2", "--knot", "4_1", "--points", "0,1"},
        {"bound", "--inv", "a2", "--degree", "2", "--count", "5", "--seed", "3"},
    };
    for (const auto& args : commands) {
      const Result text = run(args);
      const Result json = run(with_json(args));
      INFO(args[0]);
      REQUIRE(text.code == 0);
      REQUIRE(json.code == 0);
      CHECK(knotinv::cli::render_text(nlohmann::json::parse(json.out)) == text.out);
      CHECK(run(args).out == text.out);
    }
  }

  TEST_CASE("crossing budget flag") {
    const Result r = run({"--max-crossings", "3", "poly", "--knot", "5_1"});
    CHECK(r.code == 2);
    CHECK(nlohmann::json::parse(r.out)["error"]["kind"] == "DiagramTooLarge");
    CHECK(run({"poly", "--knot", "5_1", "--max-crossings", "5"}).code == 0);
  }
}
