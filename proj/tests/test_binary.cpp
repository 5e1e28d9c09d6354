#include <doctest.h>

#include <cmath>
#include <limits>

#include "divbound/binary.hpp"

using namespace divbound;

namespace {

double v_of(double t) { return (1.0 - t) / (1.0 + t); }

}  // namespace

TEST_CASE("g matches the closed forms of the catalog") {
  auto td = make_binary(catalog_generator("td"));
  auto h2 = make_binary(catalog_generator("hellinger2"));
  auto kl = make_binary(catalog_generator("kl"));
  for (int i = 1; i <= 49; ++i) {
    double t = i / 50.0;
    CHECK(td.g(t) == doctest::Approx(t * t).epsilon(1e-12));
  }
  CHECK(h2.g(0.6) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(kl.g(0.5) == doctest::Approx(0.5493061443340548).epsilon(1e-14));
}

TEST_CASE("g(0)=0 and strict monotonicity") {
  for (const auto& gen : catalog()) {
    CAPTURE(gen.name);
    auto bd = make_binary(gen);
    CHECK(std::abs(bd.g(0.0)) <= 1e-14);
    double prev = 0.0;
    for (int i = 1; i <= 64; ++i) {
      double t = i / 65.0;
      double cur = bd.g(t);
      CHECK(cur > prev);
      CHECK(bd.g1(t) > 0.0);
      prev = cur;
    }
  }
}

TEST_CASE("g agrees with the f-divergence of the binary pair both ways") {
  for (const auto& gen : catalog()) {
    CAPTURE(gen.name);
    auto bd = make_binary(gen);
    for (int i = 1; i <= 19; ++i) {
      double t = i / 20.0;
      auto [r, rdag] = binary_pair(t);
      CHECK(bd.g(t) == doctest::Approx(f_divergence(gen, r, rdag)).epsilon(1e-12));
      CHECK(bd.g(t) == doctest::Approx(f_divergence(gen, rdag, r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("g1 matches central differences of g") {
  for (const auto& gen : catalog()) {
    CAPTURE(gen.name);
    auto bd = make_binary(gen);
    for (double t = 0.05; t <= 0.951; t += 0.05) {
      double h = 1e-6;
      double fd = (bd.g(t + h) - bd.g(t - h)) / (2.0 * h);
      CHECK(bd.g1(t) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("strict derivative lower bound from convexity") {
  for (const auto& gen : catalog()) {
    CAPTURE(gen.name);
    auto bd = make_binary(gen);
    for (double t = 0.05; t <= 0.951; t += 0.05) {
      double inner = (gen.f1(v_of(-t)) - gen.f1(v_of(t))) / (1.0 + t);
      CHECK(bd.g1(t) > inner);
      CHECK(inner > 0.0);
    }
  }
}

TEST_CASE("g at 1 follows the generator limits") {
  CHECK(make_binary(catalog_generator("td")).g_at_1() == doctest::Approx(1.0));
  CHECK(make_binary(catalog_generator("hellinger2")).g_at_1() == doctest::Approx(1.0));
  CHECK(make_binary(catalog_generator("js")).g_at_1() ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(std::isinf(make_binary(catalog_generator("kl")).g_at_1()));
}

TEST_CASE("inverse_G closed-form points") {
  auto td = make_binary(catalog_generator("td"));
  CHECK(inverse_G(td, 0.25) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(inverse_G(td, 0.0) == 0.0);
  CHECK(inverse_G(td, 2.0) == 1.0);  // beyond g(1-) = 1

  auto h2 = make_binary(catalog_generator("hellinger2"));
  CHECK(inverse_G(h2, 0.2) == doctest::Approx(0.6).epsilon(1e-10));

  CHECK_THROWS_AS(inverse_G(td, -0.5), DomainError);
}

TEST_CASE("inverse_G round trips in both directions") {
  for (const auto& gen : catalog()) {
    CAPTURE(gen.name);
    auto bd = make_binary(gen);
    for (double t = 0.05; t <= 0.951; t += 0.05) {
      CHECK(inverse_G(bd, bd.g(t)) == doctest::Approx(t).epsilon(1e-10));
    }
    double tmax = bd.g(0.99);
    for (int i = 0; i <= 20; ++i) {
      double target = tmax * i / 20.0;
      CHECK(bd.g(inverse_G(bd, target)) ==
            doctest::Approx(target).epsilon(1e-10));
    }
  }
}

TEST_CASE("condition certificates for the catalog") {
  for (const auto& gen : catalog()) {
    CAPTURE(gen.name);
    auto cert = check_condition(make_binary(gen), 512);
    CHECK(cert.satisfied);
    CHECK(cert.min_margin >= -1e-9);
    CHECK(cert.monotone_ok);
    CHECK(cert.grid.size() == 512);
    CHECK(cert.grid.front() > 0.0);
    CHECK(cert.grid.back() < 1.0);
  }
  // strictly positive margins away from the TD equality case
  for (const char* name : {"kl", "hellinger2", "js"}) {
    auto cert = check_condition(make_binary(catalog_generator(name)), 512);
    CHECK(cert.min_margin > 0.0);
  }
  CHECK_THROWS_AS(check_condition(make_binary(catalog_generator("td")), 50),
                  ValidationError);
}

TEST_CASE("condition rejects the sqrt negative control") {
  auto analytic = BinaryDivergence::from_scalar(
      "sqrt", [](double t) { return std::sqrt(t); },
      [](double t) { return 0.5 / std::sqrt(t); },
      [](double t) { return -0.25 / (t * std::sqrt(t)); }, 1.0);
  auto cert = check_condition(analytic, 400);
  CHECK(!cert.satisfied);
  CHECK(cert.min_margin < 0.0);
  CHECK(!cert.monotone_ok);

  // same verdict with finite-difference derivatives only
  auto fd_only = BinaryDivergence::from_scalar(
      "sqrt-fd", [](double t) { return std::sqrt(t); }, {}, {}, 1.0);
  CHECK(!check_condition(fd_only, 400).satisfied);

  // unspecified limit at 1 resolves to the edge value, keeping inverses sane
  auto defaulted =
      BinaryDivergence::from_scalar("sqrt-default", [](double t) { return std::sqrt(t); });
  CHECK(defaulted.g_at_1() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(inverse_G(defaulted, 0.5) == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("condition reports non-finite curvature with the offending t") {
  auto bad = BinaryDivergence::from_scalar(
      "bad", [](double t) { return t; }, [](double) { return 1.0; },
      [](double t) {
        return t > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
      },
      1.0);
  CHECK_THROWS_AS(check_condition(bad, 128), EvaluationError);
}

TEST_CASE("finite-difference g2 fallback tracks the analytic value") {
  auto gen = catalog_generator("js");
  auto with_f2 = make_binary(gen);
  gen.f2 = nullptr;
  auto without_f2 = make_binary(gen);
  for (double t = 0.1; t <= 0.91; t += 0.1) {
    CHECK(without_f2.g2(t) ==
          doctest::Approx(with_f2.g2(t)).epsilon(1e-5));
  }
  CHECK(check_condition(without_f2, 256).satisfied);
}

TEST_CASE("G squared is concave for the catalog, not for the control") {
  for (const auto& gen : catalog()) {
    CAPTURE(gen.name);
    CHECK(concavity_check_G_squared(make_binary(gen), 300));
  }
  auto sqrt_bd = BinaryDivergence::from_scalar(
      "sqrt", [](double t) { return std::sqrt(t); },
      [](double t) { return 0.5 / std::sqrt(t); },
      [](double t) { return -0.25 / (t * std::sqrt(t)); }, 1.0);
  CHECK(!concavity_check_G_squared(sqrt_bd, 300));
}
