#include <doctest.h>

#include <random>

#include "isect/fanalg.hpp"
#include "test_util.hpp"

using namespace isect;

namespace {

// The fan-linear example on the fan of a = b = (1): g0 = r + 2s, g1 = 2r + s.
FanLinearFunction example_function() {
  FanLinearFunction f;
  f.cone_coeffs = {{Rational(1, 1), Rational(2, 1)},
                   {Rational(2, 1), Rational(1, 1)}};
  return f;
}

}  // namespace

TEST_CASE("evaluate the example function") {
  Fan fan = build_fan(test::make_ep({1}, {1}));
  FanLinearFunction f = example_function();
  CHECK(evaluate(f, fan, {1, 2}) == 5);
  CHECK(evaluate(f, fan, {0, 0}) == 0);
  // (1,1) is on the shared face; both pieces give 3
  CHECK(evaluate(f, fan, {1, 1}) == 3);
  CHECK(evaluate(f, fan, {2, 1}) == 5);  // assigned to cone 1: 2*2 + 1
}

TEST_CASE("evaluate is homogeneous within a cone") {
  Fan fan = build_fan(test::make_ep({1}, {1}));
  FanLinearFunction f = example_function();
  for (Int r = 0; r <= 5; ++r)
    for (Int s = 0; s <= 5; ++s) {
      if (r == 0 && s == 0) continue;
      Int base = evaluate(f, fan, {r, s});
      for (Int k = 2; k <= 5; ++k)
        CHECK(evaluate(f, fan, {k * r, k * s}) == k * base);
    }
}

TEST_CASE("check_fan_linear accepts the example") {
  Fan fan = build_fan(test::make_ep({1}, {1}));
  FanLinearCheck res = check_fan_linear(example_function(), fan, 10);
  CHECK(res.ok);
  CHECK_FALSE(res.exact_subadditivity);
  CHECK(res.box_bound == 10);
}

TEST_CASE("check_fan_linear flags face disagreement") {
  Fan fan = build_fan(test::make_ep({1}, {1}));
  FanLinearFunction f;
  // g0 = r + 2s, g1 = r + s: values 3 vs 2 on the shared ray (1,1)
  f.cone_coeffs = {{Rational(1, 1), Rational(2, 1)},
                   {Rational(1, 1), Rational(1, 1)}};
  FanLinearCheck res = check_fan_linear(f, fan, 10);
  REQUIRE_FALSE(res.ok);
  REQUIRE(res.violation.has_value());
  CHECK(res.violation->kind == "face-disagreement");
  CHECK(res.violation->p1 == LatticePoint2{1, 1});
}

TEST_CASE("check_fan_linear flags non-integral values") {
  Fan fan = build_fan(test::make_ep({1}, {1}));
  FanLinearFunction f;
  f.cone_coeffs = {{Rational(1, 2), Rational(2, 1)},
                   {Rational(2, 1), Rational(1, 1)}};
  FanLinearCheck res = check_fan_linear(f, fan, 6);
  REQUIRE_FALSE(res.ok);
  REQUIRE(res.violation.has_value());
  CHECK(res.violation->kind == "non-integral");
}

TEST_CASE("check_fan_linear flags a subadditivity violation") {
  // g0 = 2r + s, g1 = r + 2s agree on the face (value 3 at (1,1)) but the
  // graph bends upward there: f(0,1) + f(1,0) = 2 < 3 = f(1,1).
  Fan fan = build_fan(test::make_ep({1}, {1}));
  FanLinearFunction f;
  f.cone_coeffs = {{Rational(2, 1), Rational(1, 1)},
                   {Rational(1, 1), Rational(2, 1)}};
  FanLinearCheck res = check_fan_linear(f, fan, 5);
  REQUIRE_FALSE(res.ok);
  REQUIRE(res.violation.has_value());
  CHECK(res.violation->kind == "subadditivity");
  CHECK(res.violation->p1 == LatticePoint2{0, 1});
  CHECK(res.violation->p2 == LatticePoint2{1, 0});
}

TEST_CASE("max-form functions pass with exact subadditivity") {
  std::mt19937 rng(2718);
  for (int iter = 0; iter < 20; ++iter) {
    ExponentPair ep = test::random_ep(rng, 3, 6, false);
    Fan fan = build_fan(ep);
    for (std::size_t t = 0; t < ep.size(); ++t) {
      FanLinearFunction f = max_form_function(ep, t);
      FanLinearCheck res = check_fan_linear(f, fan, 6);
      CHECK(res.ok);
      CHECK(res.exact_subadditivity);
      // the pieces agree with the max everywhere on a box
      for (Int r = 0; r <= 6; ++r)
        for (Int s = 0; s <= 6; ++s)
          CHECK(evaluate(f, fan, {r, s}) ==
                std::max(ep.a[t] * r, ep.b[t] * s));
    }
  }
}

TEST_CASE("normality holds for intersection-algebra input") {
  NormalityResult res = normality_check(test::make_ep({5}, {2}), 12, 4);
  CHECK(res.normal);
  CHECK_FALSE(res.counterexample.has_value());
}

TEST_CASE("normality holds for the fan-linear example") {
  Fan fan = build_fan(test::make_ep({1}, {1}));
  std::vector<FanLinearFunction> fs{example_function()};
  NormalityResult res = normality_check(fs, fan, 10, 4);
  CHECK(res.normal);
}

TEST_CASE("normality scan finds the planted non-saturated semigroup") {
  // threshold 2r+1 on odd r but 2r on even r: z=(2,1,s) fails membership
  // while 2z=(4,2,2s) passes, so the semigroup is not saturated
  auto member = [](std::span<const Int> z) {
    Int need = 2 * z[1] + (z[1] % 2 == 1 ? 1 : 0);
    return z[0] >= need;
  };
  NormalityResult res = normality_check(1, 8, 4, member);
  REQUIRE_FALSE(res.normal);
  REQUIRE(res.counterexample.has_value());
  CHECK(res.counterexample->z == std::vector<Int>{2, 1, 0});
  CHECK(res.counterexample->multiplier == 2);
}

TEST_CASE("rational coefficients with integral lattice values are accepted") {
  // fan of a=(2), b=(2): rays (0,1), (1,1), (1,0); g = (r+s)/2 is integral
  // on the even lattice of cone 0? No: (1,1) gives 1, (0,1) gives 1/2.
  Fan fan = build_fan(test::make_ep({2}, {2}));
  FanLinearFunction f;
  f.cone_coeffs = {{Rational(1, 2), Rational(1, 2)},
                   {Rational(1, 2), Rational(1, 2)}};
  FanLinearCheck res = check_fan_linear(f, fan, 5);
  CHECK_FALSE(res.ok);  // value 1/2 at the basis point (0,1)
  CHECK(res.violation->kind == "non-integral");
}
