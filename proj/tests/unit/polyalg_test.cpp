#include <doctest.h>

#include <random>

#include "knotinv/error.hpp"
#include "knotinv/interp.hpp"
#include "knotinv/laurent.hpp"

using namespace knotinv;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long>> terms, const std::string& var = "t") {
  LaurentPoly p(var);
  for (auto [e, c] : terms) p.add_term(HalfInt::integer(e), c);
  return p;
}

LaurentPoly random_poly(std::mt19937_64& rng, const std::string& var = "t") {
  std::uniform_int_distribution<int> exp(-4, 4), count(0, 4);
  std::uniform_int_distribution<long> coef(-5, 5);
  LaurentPoly p(var);
  for (int i = count(rng); i > 0; --i) p.add_term(HalfInt::halves(exp(rng)), coef(rng));
  return p;
}

Scalar random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 4);
  long n = num(rng);
  if (n == 0) n = 1;
  return Scalar(mpq_class(n, den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_SUITE("polyalg") {
  TEST_CASE("scalar arithmetic stays exact") {
    const Scalar i = Scalar::imaginary_unit();
    CHECK(i * i == Scalar(-1));
    CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) == Scalar::rational(5, 6));
    CHECK((Scalar(1) / (Scalar(1) + i)).to_string() == "(1/2-1/2*I)");
    CHECK(Scalar(3).pow(-2) == Scalar::rational(1, 9));
    CHECK(Scalar::rational(-1, 2).to_string() == "-1/2");
    CHECK(principal_sqrt(Scalar::rational(9, 4)) == Scalar::rational(3, 2));
    CHECK_FALSE(principal_sqrt(Scalar(2)).is_exact());
  }

  TEST_CASE("exact and approximate never compare equal") {
    CHECK_FALSE(Scalar(1) == Scalar::approx({1.0, 0.0}));
    CHECK(approx_equal(Scalar(1), Scalar::approx({1.0 + 1e-12, 0.0})));
  }

  TEST_CASE("canonical text") {
    CHECK(to_string(poly({{-4, -1}, {-3, 1}, {-1, 1}})) == "-1*t^-4 + 1*t^-3 + 1*t^-1");
    CHECK(to_string(LaurentPoly("t")) == "0");
    LaurentPoly h = LaurentPoly::half_difference("t");
    CHECK(to_string(h) == "-1*t^(-1/2) + 1*t^(1/2)");
  }

  TEST_CASE("multiplication is commutative and distributes") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
      const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
      LaurentPoly a = random_poly(rng), b = random_poly(rng);
      // Integral exponents keep evaluation exact at arbitrary points.
      LaurentPoly ai("t"), bi("t");
      for (const auto& [e, c] : a.terms()) ai.add_term(HalfInt::integer(e.twice()), c);
      for (const auto& [e, c] : b.terms()) bi.add_term(HalfInt::integer(e.twice()), c);
      const Scalar x = random_point(rng);
      CHECK(evaluate(ai * bi, x) == evaluate(ai, x) * evaluate(bi, x));
      CHECK(evaluate(ai + bi, x) == evaluate(ai, x) + evaluate(bi, x));
    }
  }

  TEST_CASE("derivatives") {
    const LaurentPoly j = poly({{-4, -1}, {-3, 1}, {-1, 1}});
    CHECK(evaluate(derivative(j, "t", 2), 1) == Scalar(-6));
    CHECK(evaluate(derivative(j, "t", 3), 1) == Scalar(54));
    CHECK(derivative(poly({{3, 1}}), "t", 4).is_zero());
    CHECK_THROWS_AS(derivative(j, "z", 1), Error);
  }

  TEST_CASE("half-integer powers") {
    CHECK(power(Scalar(4), HalfInt::halves(1)) == Scalar(2));
    CHECK_THROWS_AS(power(Scalar(-1), HalfInt::halves(1)), Error);
    CHECK_THROWS_AS(power(Scalar(0), HalfInt::integer(-1)), Error);
    CHECK_FALSE(power(Scalar(2), HalfInt::halves(1)).is_exact());
  }

  TEST_CASE("exact division") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
      LaurentPoly a = random_poly(rng), b = random_poly(rng);
      if (b.is_zero()) continue;
      CHECK(divide_exact(a * b, b) == a);
    }
    CHECK_THROWS_AS(divide_exact(poly({{0, 1}}), poly({{0, 1}, {1, 1}})), Error);
  }

  TEST_CASE("two-variable substitution") {
    LaurentPoly2 p("a", "z");
    p.add_term(HalfInt::integer(-4), HalfInt::integer(0), -1);
    p.add_term(HalfInt::integer(-2), HalfInt::integer(0), 2);
    p.add_term(HalfInt::integer(-2), HalfInt::integer(2), 1);
    const LaurentPoly jones = substitute(p, poly({{1, 1}}), LaurentPoly::half_difference("t"));
    CHECK(jones == poly({{-4, -1}, {-3, 1}, {-1, 1}}));
    CHECK(p.coefficient_of("z", HalfInt::integer(2)) == poly({{-2, 1}}, "a"));
    CHECK_THROWS_AS(p.index_of("q"), Error);
  }

  TEST_CASE("shift and series composition") {
    const LaurentPoly p = poly({{0, 1}, {1, 2}, {2, 3}});
    CHECK(shift_argument(p, Scalar(1)) == poly({{0, 6}, {1, 8}, {2, 3}}));
    // f(t) = t^2 composed with g(x) = 1 + x at 0 gives 1 + 2x + x^2.
    const auto c = series_compose(poly({{2, 1}}), {Scalar(1), Scalar(1), Scalar(0)}, 2);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Scalar(1));
    CHECK(c[1] == Scalar(2));
    CHECK(c[2] == Scalar(1));
  }

  TEST_CASE("interpolation reproduces polynomial data") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
      const int degree = std::uniform_int_distribution<int>(0, 5)(rng);
      LaurentPoly p("x");
      for (int e = 0; e <= degree; ++e) p.add_term(HalfInt::integer(e), random_point(rng));
      std::vector<Scalar> values;
      for (int i = 0; i <= degree + 2; ++i) values.push_back(evaluate(p, Scalar(i)));
      CHECK(interp_grid(values, "x") == p);
      const DegreeFit fit = finite_diff_degree(values, degree);
      CHECK(fit.fits);
      CHECK(fit.degree <= degree);
    }
  }

  TEST_CASE("finite differences") {
    const std::vector<Scalar> squares = {0, 1, 4, 9, 16};
    const auto d = forward_differences(squares);
    CHECK(d[0] == Scalar(0));
    CHECK(d[1] == Scalar(1));
    CHECK(d[2] == Scalar(2));
    CHECK(d[3] == Scalar(0));
    CHECK(finite_diff_degree(squares, 2) == DegreeFit{true, 2});
    CHECK_FALSE(finite_diff_degree(std::vector<Scalar>{1, 2, 4, 8, 16}, 2).fits);
    CHECK_THROWS_AS(finite_diff_degree(squares, 4), Error);
  }

  TEST_CASE("multigrid interpolation") {
    Grid g;
    g.dims = 2;
    g.side = 3;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.values[{i, j}] = Scalar(i * j + 2 * j * j - 1);
    const MultiPoly p = interp_multigrid(g);
    CHECK(p.coeff({1, 1}) == Scalar(1));
    CHECK(p.coeff({0, 2}) == Scalar(2));
    CHECK(p.coeff({0, 0}) == Scalar(-1));
    CHECK(p.degree_in(0) == 1);
    g.values.erase({2, 2});
    CHECK_THROWS_AS(interp_multigrid(g), Error);
  }
}
