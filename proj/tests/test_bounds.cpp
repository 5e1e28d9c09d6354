#include <doctest.h>

#include <cmath>
#include <limits>

#include "divbound/bounds.hpp"
#include "divbound/rng.hpp"

using namespace divbound;

namespace {

BinaryDivergence bd_of(const char* name) {
  return make_binary(catalog_generator(name));
}

BinaryDivergence sqrt_control() {
  return BinaryDivergence::from_scalar(
      "sqrt", [](double t) { return std::sqrt(t); },
      [](double t) { return 0.5 / std::sqrt(t); },
      [](double t) { return -0.25 / (t * std::sqrt(t)); }, 1.0);
}

}  // namespace

TEST_CASE("theorem1 closed-form values") {
  auto td = theorem1_bound(bd_of("td"), 0.36);
  CHECK(td.bound_value == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(td.tight);
  CHECK(td.basis == "theorem1");

  auto h2 = theorem1_bound(bd_of("hellinger2"), 0.36);
  CHECK(h2.bound_value == doctest::Approx(0.2).epsilon(1e-12));

  auto js = theorem1_bound(bd_of("js"), 0.25);
  CHECK(js.bound_value ==
        doctest::Approx(0.1308120359411370).epsilon(1e-12));
}

TEST_CASE("theorem1 attained pair achieves the bound") {
  for (const auto& gen : catalog()) {
    CAPTURE(gen.name);
    auto bd = make_binary(gen);
    for (double d : {0.04, 0.36, 0.64}) {
      auto res = theorem1_bound(bd, d);
      REQUIRE(res.attained_pair.has_value());
      const auto& [p, q] = *res.attained_pair;
      CHECK(triangular_discrimination(p, q) == doctest::Approx(d).epsilon(1e-12));
      CHECK(symmetrized_divergence(gen, p, q) ==
            doctest::Approx(res.bound_value).epsilon(1e-10));
      CHECK(res.bound_value == doctest::Approx(bd.g(res.argument)).epsilon(1e-12));
    }
  }
}

TEST_CASE("theorem1 errors") {
  CHECK_THROWS_AS(theorem1_bound(bd_of("kl"), 1.5), DomainError);
  CHECK_THROWS_AS(theorem1_bound(bd_of("kl"), -0.1), DomainError);
  try {
    theorem1_bound(sqrt_control(), 0.25);
    FAIL("expected ConditionError");
  } catch (const ConditionError& e) {
    CHECK(!e.certificate.satisfied);
    CHECK(e.certificate.min_margin < 0.0);
  }
}

TEST_CASE("theorem1 bound is monotone in d") {
  for (const auto& gen : catalog()) {
    auto bd = make_binary(gen);
    double prev = -1.0;
    for (double d = 0.0; d <= 0.9001; d += 0.1) {
      double cur = theorem1_bound(bd, d).bound_value;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("tv bound values and attainment") {
  auto res = tv_bound(bd_of("kl"), 0.5);
  CHECK(res.bound_value == doctest::Approx(0.5493061443340548).epsilon(1e-14));
  CHECK(res.basis == "tv-remark");
  CHECK(res.tight);
  const auto& [p, q] = *res.attained_pair;
  CHECK(total_variation(p, q) == doctest::Approx(0.5).epsilon(1e-14));

  CHECK(tv_bound(bd_of("js"), 0.0).bound_value == doctest::Approx(0.0));
  CHECK(tv_bound(bd_of("td"), 0.5).bound_value == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(tv_bound(bd_of("td"), 1.1), DomainError);

  // no certificate requirement for the remark-based variant
  CHECK_NOTHROW(tv_bound(sqrt_control(), 0.3));
}

TEST_CASE("tv bound against a small brute-force search over binary pairs") {
  // minimize the symmetrized KL over two-point pairs with TV = 0.5
  auto kl = catalog_generator("kl");
  double best = std::numeric_limits<double>::infinity();
  const int res = 400;
  for (int i = 0; i <= res; ++i) {
    for (int j = 0; j <= res; ++j) {
      double p = static_cast<double>(i) / res;
      double q = static_cast<double>(j) / res;
      if (std::abs(std::abs(p - q) - 0.5) > 1e-9) continue;
      std::vector<double> pm = {p, 1.0 - p}, qm = {q, 1.0 - q};
      double sym = 0.5 * (f_divergence_masses(kl, pm, qm) +
                          f_divergence_masses(kl, qm, pm));
      best = std::min(best, sym);
    }
  }
  CHECK(best == doctest::Approx(tv_bound(bd_of("kl"), 0.5).bound_value)
                    .epsilon(1e-4));
}

TEST_CASE("theorem2 s statistic") {
  CHECK(theorem2_s({3.0, 1.0, 3.0, 2.0}) == 0.0);
  CHECK(theorem2_s({1.0, 1.0, 0.0, 1.0}) ==
        doctest::Approx(0.4472135954999579).epsilon(1e-15));
  CHECK(theorem2_s({0.5, 0.0, -0.5, 0.0}) == doctest::Approx(1.0));
  CHECK(theorem2_s({0.0, 0.0, 0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(theorem2_s({0.0, -1.0, 0.0, 1.0}), ValidationError);

  // equal variances: s collapses to r bit-for-bit
  for (double sigma : {0.25, 1.0, 1.75}) {
    for (double a : {0.5, 1.0, 3.0}) {
      double s = theorem2_s({a, sigma, 0.0, sigma});
      double r = std::abs(a) / std::sqrt(4.0 * sigma * sigma + a * a);
      CHECK(s == r);
    }
  }
}

TEST_CASE("theorem2 bound values") {
  auto res = theorem2_bound(bd_of("kl"), {1.0, 1.0, 0.0, 1.0});
  CHECK(res.bound_value == doctest::Approx(0.4304089409640040).epsilon(1e-12));
  CHECK(res.tight);
  CHECK(res.basis == "theorem2");
  REQUIRE(res.attained_pair.has_value());

  // TD reduces to s^2
  for (double a : {0.0, 0.5, 2.0}) {
    MomentSpec spec{a, 0.7, 0.0, 1.3};
    double s = theorem2_s(spec);
    auto tdres = theorem2_bound(bd_of("td"), spec);
    CHECK(tdres.bound_value == doctest::Approx(s * s).epsilon(1e-12));
    CHECK(!tdres.tight);  // unequal variances
    CHECK(!tdres.attained_pair.has_value());
  }

  auto zero = theorem2_bound(bd_of("js"), {2.0, 1.0, 2.0, 1.0});
  CHECK(zero.bound_value == doctest::Approx(0.0));
  CHECK(zero.tight);

  // degenerate sigma=0 with distinct means: KL bound is +inf and attained
  auto inf_res = theorem2_bound(bd_of("kl"), {0.5, 0.0, -0.5, 0.0});
  CHECK(std::isinf(inf_res.bound_value));
  const auto& [dp, dq] = *inf_res.attained_pair;
  CHECK(std::isinf(symmetrized_divergence(catalog_generator("kl"), dp, dq)));

  CHECK_THROWS_AS(theorem2_bound(sqrt_control(), MomentSpec{1.0, 1.0, 0.0, 1.0}),
                  ConditionError);
}

TEST_CASE("lemma3 pair construction") {
  auto [p, q] = lemma3_pair({1.0, 1.0, 0.0, 1.0});
  double root5 = std::sqrt(5.0);
  CHECK(p.support[0] == doctest::Approx(0.5 - root5 / 2.0).epsilon(1e-15));
  CHECK(p.support[1] == doctest::Approx(0.5 + root5 / 2.0).epsilon(1e-15));
  CHECK(p.mass[0] == doctest::Approx(0.2763932022500210).epsilon(1e-12));
  CHECK(p.mass[1] == doctest::Approx(0.7236067977499789).epsilon(1e-12));
  CHECK(q.mass[0] == doctest::Approx(p.mass[1]).epsilon(1e-15));
  auto mp = moments(p);
  auto mq = moments(q);
  CHECK(mp.mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mp.variance == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mq.mean == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mq.variance == doctest::Approx(1.0).epsilon(1e-12));

  // a = 0: both uniform on {-sigma, +sigma}
  auto [u, v] = lemma3_pair({0.0, 1.0, 0.0, 1.0});
  CHECK(u.support == std::vector<double>{-1.0, 1.0});
  CHECK(u.mass == std::vector<double>{0.5, 0.5});
  CHECK(v.mass == u.mass);

  // sigma = 0: point masses at the two means
  auto [a, b] = lemma3_pair({0.5, 0.0, -0.5, 0.0});
  CHECK(a.mass == std::vector<double>{0.0, 1.0});
  CHECK(b.mass == std::vector<double>{1.0, 0.0});
  CHECK(moments(a).mean == doctest::Approx(0.5));
  CHECK(moments(a).variance == doctest::Approx(0.0));
  CHECK(moments(b).mean == doctest::Approx(-0.5));

  // negative offset mirrors the masses
  auto [n1, n2] = lemma3_pair({0.0, 1.0, 1.0, 1.0});
  CHECK(moments(n1).mean == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(moments(n2).mean == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(lemma3_pair(MomentSpec{1.0, 1.0, 0.0, 2.0}), ValidationError);
}

TEST_CASE("lower-bound properties on random pairs") {
  Rng rng(2024);
  auto gens = catalog();
  std::vector<BinaryDivergence> bds;
  for (const auto& gen : gens) bds.push_back(make_binary(gen));
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng.integer(5));
    std::vector<double> support(n);
    for (int i = 0; i < n; ++i) support[i] = i;
    DiscreteDist p(support, rng.simplex(n));
    DiscreteDist q(support, rng.simplex(n));
    double droot = std::sqrt(triangular_discrimination(p, q));
    auto m_p = moments(p);
    auto m_q = moments(q);
    double s = theorem2_s({m_p.mean, std::sqrt(m_p.variance), m_q.mean,
                           std::sqrt(m_q.variance)});
    for (std::size_t i = 0; i < gens.size(); ++i) {
      double sym = symmetrized_divergence(gens[i], p, q);
      CHECK(sym >= bds[i].g(droot) - 1e-10);
      CHECK(sym >= bds[i].g(s) - 1e-10);
    }
  }
}

TEST_CASE("translation invariance of s with dyadic inputs") {
  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    double m_p = static_cast<double>(static_cast<long>(rng.integer(33)) - 16) / 8.0;
    double m_q = static_cast<double>(static_cast<long>(rng.integer(33)) - 16) / 8.0;
    double sp = static_cast<double>(1 + rng.integer(8)) / 4.0;
    double sq = static_cast<double>(1 + rng.integer(8)) / 4.0;
    double s = theorem2_s({m_p, sp, m_q, sq});
    for (double c : {1.0, -4.0, 16.0}) {
      CHECK(theorem2_s({m_p + c, sp, m_q + c, sq}) == s);
    }
  }
}
