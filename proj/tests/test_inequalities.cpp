#include <doctest.h>

#include <cmath>

#include "divbound/binary.hpp"
#include "divbound/inequalities.hpp"
#include "divbound/rng.hpp"

using namespace divbound;

TEST_CASE("algebraic identity behind the Hellinger bound") {
  for (int i = 0; i < 100; ++i) {
    double d = i / 100.0;
    double lhs = 1.0 - std::sqrt(1.0 - d);
    double rhs = d / (1.0 + std::sqrt(1.0 - d));
    CHECK(std::abs(lhs - rhs) <= 1e-14);
  }
}

TEST_CASE("hellinger_td_bound") {
  DiscreteDist eq({0.0, 1.0}, {0.4, 0.6});
  auto same = hellinger_td_bound(eq, eq);
  CHECK(same.lhs == doctest::Approx(0.0));
  CHECK(same.rhs == doctest::Approx(0.0));
  CHECK(same.prior_rhs == doctest::Approx(0.0));

  auto [r, rdag] = binary_pair(0.6);
  auto attained = hellinger_td_bound(r, rdag);
  CHECK(attained.rhs == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(attained.lhs == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::abs(attained.slack) <= 1e-10);
  CHECK(attained.improvement >= 0.0);

  DiscreteDist p({0.0, 1.0}, {0.9, 0.1});
  DiscreteDist q({0.0, 1.0}, {0.5, 0.5});
  auto generic = hellinger_td_bound(p, q);
  CHECK(generic.slack >= 0.0);
  CHECK(generic.improvement >= 0.0);
  CHECK(generic.slack == doctest::Approx(generic.lhs - generic.rhs));
}

TEST_CASE("bhattacharyya_relation equality cases") {
  DiscreteDist p({0.0, 1.0}, {0.4, 0.6});
  auto same = bhattacharyya_relation(p, p);
  CHECK(same.rhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(same.slack) <= 1e-12);
  CHECK(same.improvement == 0.0);

  DiscreteDist a({0.0, 1.0}, {1.0, 0.0});
  DiscreteDist b({0.0, 1.0}, {0.0, 1.0});
  auto disjoint = bhattacharyya_relation(a, b);
  CHECK(std::abs(disjoint.slack) <= 1e-12);

  auto [r, rdag] = binary_pair(0.6);
  auto swapped = bhattacharyya_relation(r, rdag);
  CHECK(swapped.rhs == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bhattacharyya identity on swapped binary pairs") {
  for (int i = 0; i <= 20; ++i) {
    double t = i / 20.0;
    auto [r, rdag] = binary_pair(t);
    double z = bhattacharyya_coefficient(r, rdag);
    double d = triangular_discrimination(r, rdag);
    CHECK(std::abs(d + z * z - 1.0) <= 1e-12);
  }
}

TEST_CASE("js_td_bound") {
  DiscreteDist eq({0.0, 1.0}, {0.4, 0.6});
  auto same = js_td_bound(eq, eq);
  CHECK(same.lhs == doctest::Approx(0.0));
  CHECK(same.rhs == doctest::Approx(0.0));

  auto [r, rdag] = binary_pair(0.5);
  auto attained = js_td_bound(r, rdag);
  CHECK(attained.rhs == doctest::Approx(0.1308120359411370).epsilon(1e-10));
  CHECK(std::abs(attained.slack) <= 1e-10);

  DiscreteDist p({0.0, 1.0}, {0.7, 0.3});
  DiscreteDist q({0.0, 1.0}, {0.3, 0.7});
  auto generic = js_td_bound(p, q);
  CHECK(generic.slack >= 0.0);
  CHECK(generic.improvement >= 0.0);
}

TEST_CASE("the two forms of the JS right side agree") {
  auto js = make_binary(catalog_generator("js"));
  for (int i = 0; i <= 50; ++i) {
    double d = i / 50.0 * 0.99;
    double via_entropy = std::log(2.0) - binary_entropy(std::sqrt(d));
    CHECK(std::abs(via_entropy - js.g(std::sqrt(d))) <= 1e-12);
  }
}

TEST_CASE("binary-pair equality characterization over t") {
  for (int i = 0; i <= 19; ++i) {
    double t = i / 20.0;
    auto [r, rdag] = binary_pair(t);
    CHECK(std::abs(hellinger_td_bound(r, rdag).slack) <= 1e-10);
    CHECK(std::abs(js_td_bound(r, rdag).slack) <= 1e-10);
  }
}

TEST_CASE("tightness ordering against the prior bounds on random pairs") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng.integer(4));
    std::vector<double> support(n);
    for (int i = 0; i < n; ++i) support[i] = i;
    DiscreteDist p(support, rng.simplex(n));
    DiscreteDist q(support, rng.simplex(n));
    CHECK(hellinger_td_bound(p, q).improvement >= -1e-10);
    CHECK(js_td_bound(p, q).improvement >= -1e-10);
    CHECK(hellinger_td_bound(p, q).slack >= -1e-10);
    CHECK(js_td_bound(p, q).slack >= -1e-10);
  }
}

TEST_CASE("JS linear minorant") {
  CHECK(js_linear_minorant_check(1000));
  CHECK_THROWS_AS(js_linear_minorant_check(10), ValidationError);

  auto js = make_binary(catalog_generator("js"));
  // endpoint: g(1) = ln 2 >= 1/2
  CHECK(js.g(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(js.g(1.0) >= 0.5);
  // asymptotically tight at 0: ratio -> 1 from above
  double t = 1e-4;
  double ratio = js.g(std::sqrt(t)) / (0.5 * t);
  CHECK(ratio >= 1.0);
  CHECK(ratio <= 1.001);
}

TEST_CASE("binary entropy edges") {
  CHECK(binary_entropy(0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(binary_entropy(1.0) == doctest::Approx(0.0));
}
