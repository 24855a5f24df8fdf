#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "isect/algebra.hpp"
#include "isect/oracle.hpp"
#include "test_util.hpp"

using namespace isect;
using test::elem;

TEST_CASE("oracle_intersection_exponents") {
  CHECK(oracle_intersection_exponents(test::make_ep({5}, {2}), 1, 3) ==
        std::vector<Int>{6});
  CHECK(oracle_intersection_exponents(test::make_ep({5}, {2}), 0, 0) ==
        std::vector<Int>{0});
  CHECK(oracle_intersection_exponents(test::make_ep({3, 2}, {1, 3}), 2, 1) ==
        std::vector<Int>{6, 4});
}

TEST_CASE("oracle_hilbert_basis") {
  Fan fan = build_fan(test::make_ep({5}, {2}));
  BoxSpec box;
  box.rs_bound = 8;
  auto basis0 = oracle_hilbert_basis(fan.cones[0], box);
  CHECK(basis0 == std::vector<LatticePoint2>{{0, 1}, {1, 3}, {2, 5}});

  // degenerate ray
  Cone2D ray;
  ray.ray_high = {2, 2};
  ray.ray_low = {3, 3};
  ray.primitive_high = {1, 1};
  ray.primitive_low = {1, 1};
  ray.degenerate = true;
  CHECK(oracle_hilbert_basis(ray, box) == std::vector<LatticePoint2>{{1, 1}});

  BoxSpec tiny;
  tiny.rs_bound = 3;
  CHECK_THROWS_AS(oracle_hilbert_basis(fan.cones[0], tiny), Error);
}

TEST_CASE("oracle_minimal_positive") {
  BoxSpec box;
  box.rs_bound = 8;
  box.m_bound = 50;
  auto minimal = oracle_minimal_positive(test::make_ep({5}, {2}), box);
  std::set<EPhiElement> got(minimal.begin(), minimal.end());
  std::set<EPhiElement> want{elem({1, 3, 2, 1, 7}), elem({2, 5, 1, 1, 11}),
                             elem({1, 1, 1, 4, 6}), elem({1, 2, 1, 2, 6})};
  CHECK(got == want);

  auto unit = oracle_minimal_positive(test::make_ep({1}, {1}), box);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].vec == std::vector<Int>{1, 1, 1, 1, 2});

  // antichain
  for (const auto& x : minimal)
    for (const auto& y : minimal) {
      if (x == y) continue;
      bool dominated = true;
      for (std::size_t i = 0; i < x.vec.size(); ++i)
        if (x.vec[i] > y.vec[i]) dominated = false;
      CHECK_FALSE(dominated);
    }
}

TEST_CASE("oracle_semigroup_closure") {
  BoxSpec box;
  box.rs_bound = 3;
  box.m_bound = 3;
  auto single = oracle_semigroup_closure({{1, 1, 1}}, box);
  CHECK(single == std::vector<std::vector<Int>>{
                      {0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}});

  auto empty = oracle_semigroup_closure({}, box);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  CHECK_THROWS_AS(oracle_semigroup_closure({{0, 0, 0}}, box), Error);
}

TEST_CASE("randomized oracle agreement sweep") {
  std::mt19937 rng(100861);
  for (int seed = 0; seed < 100; ++seed) {
    ExponentPair ep = test::random_ep(rng, 3, 6, false);
    Fan fan = build_fan(ep);

    for (const Cone2D& c : fan.cones) {
      BoxSpec box;
      box.rs_bound = std::max(c.primitive_high.r + c.primitive_low.r,
                              c.primitive_high.s + c.primitive_low.s);
      CHECK(hilbert_basis(c).points == oracle_hilbert_basis(c, box));
    }

    if (is_non_degenerate(ep))
      CHECK(minimal_positive(ep) ==
            oracle_minimal_positive(ep, default_box(ep)));

    // every claimed fundamental element really is fundamental
    for (const auto& e : fund_elements(ep).all())
      CHECK(oracle_is_fundamental(ep, e));

    // generator closure equals the membership predicate on a small box
    if (seed % 10 == 0) {
      std::vector<std::vector<Int>> logs;
      for (const auto& g : generators(ep)) logs.push_back(g.log());
      BoxSpec box;
      box.rs_bound = 4;
      box.m_bound = 30;
      auto closure = oracle_semigroup_closure(logs, box);
      std::set<std::vector<Int>> closure_set(closure.begin(), closure.end());
      std::vector<Int> v(ep.size() + 2, 0);
      std::function<void(std::size_t)> scan = [&](std::size_t t) {
        if (t == ep.size()) {
          for (Int r = 0; r <= 4; ++r)
            for (Int s = 0; s <= 4; ++s) {
              v[ep.size()] = r;
              v[ep.size() + 1] = s;
              bool member = true;
              for (std::size_t u = 0; u < ep.size(); ++u)
                if (v[u] < std::max(ep.a[u] * r, ep.b[u] * s)) member = false;
              CHECK(member == (closure_set.count(v) == 1));
            }
          return;
        }
        for (Int x = 0; x <= 30; x += 3) {
          v[t] = x;
          scan(t + 1);
        }
      };
      scan(0);
    }
  }
}
