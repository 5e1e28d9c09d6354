#include "divbound/binary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "divbound/rng.hpp"

namespace divbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double fd_step(double t) { return std::max(1e-5, 1e-5 * t); }

// central difference with the stencil clamped into (0, 1)
double central_diff(const std::function<double(double)>& fn, double t) {
  double h = fd_step(t);
  h = std::min({h, 0.5 * t, 0.5 * (1.0 - kEdgeEps - t)});
  if (!(h > 0.0)) h = fd_step(t);
  return (fn(t + h) - fn(t - h)) / (2.0 * h);
}

}  // namespace

BinaryDivergence BinaryDivergence::from_generator(FGenerator gen) {
  BinaryDivergence bd;
  bd.name_ = gen.name;
  bd.g_at_1_ = gen.f_at_0 + gen.slope_at_inf;  // Definition evaluated at t=1

  auto f = gen.f;
  auto f1 = gen.f1;
  auto f2 = gen.f2;

  bd.g_ = [f, lim = bd.g_at_1_](double t) {
    if (t >= 1.0) return lim;
    if (t == 0.0) return f(1.0);
    double a = (1.0 + t) / (1.0 - t);
    double b = (1.0 - t) / (1.0 + t);
    return 0.5 * (1.0 - t) * f(a) + 0.5 * (1.0 + t) * f(b);
  };

  bd.g1_ = [f, f1](double t) {
    double vm = (1.0 + t) / (1.0 - t);  // v(-t)
    double vp = (1.0 - t) / (1.0 + t);  // v(t)
    return 0.5 * (f(vp) - f(vm)) + f1(vm) / (1.0 - t) - f1(vp) / (1.0 + t);
  };

  if (f2) {
    bd.g2_ = [f2](double t) {
      double um = 1.0 - t, up = 1.0 + t;
      return 2.0 * f2(up / um) / (um * um * um) +
             2.0 * f2(um / up) / (up * up * up);
    };
  } else {
    auto g1 = bd.g1_;
    bd.g2_ = [g1](double t) { return central_diff(g1, t); };
  }

  bd.gen_ = std::move(gen);
  return bd;
}

BinaryDivergence BinaryDivergence::from_scalar(std::string name,
                                               std::function<double(double)> g,
                                               std::function<double(double)> g1,
                                               std::function<double(double)> g2,
                                               double g_at_1) {
  BinaryDivergence bd;
  bd.name_ = std::move(name);
  bd.g_ = std::move(g);
  bd.g_at_1_ = std::isnan(g_at_1) ? bd.g_(1.0 - kEdgeEps) : g_at_1;
  if (g1) {
    bd.g1_ = std::move(g1);
  } else {
    auto gf = bd.g_;
    bd.g1_ = [gf](double t) { return central_diff(gf, t); };
  }
  if (g2) {
    bd.g2_ = std::move(g2);
  } else {
    auto d1 = bd.g1_;
    bd.g2_ = [d1](double t) { return central_diff(d1, t); };
  }
  return bd;
}

double BinaryDivergence::g(double t) const { return g_(t); }
double BinaryDivergence::g1(double t) const { return g1_(t); }
double BinaryDivergence::g2(double t) const { return g2_(t); }

BinaryDivergence make_binary(const FGenerator& gen) {
  return BinaryDivergence::from_generator(gen);
}

double inverse_G(const BinaryDivergence& bd, double T) {
  if (!(T >= 0.0)) throw DomainError("inverse_G: T must be >= 0");
  if (T == 0.0) return 0.0;
  double lim = bd.g_at_1();
  if (std::isfinite(lim) && T >= lim) return 1.0;

  double lo = 0.0, hi = 1.0 - kEdgeEps;
  if (bd.g(hi) <= T) return hi;  // diverging g: approach 1 monotonically
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double v = bd.g(mid) - T;
    if (v == 0.0) return mid;
    (v < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ConditionCertificate check_condition(const BinaryDivergence& bd, int grid_size,
                                     double tol_cond) {
  if (grid_size < 100) {
    throw ValidationError("check_condition: grid_size must be >= 100");
  }
  ConditionCertificate cert;
  cert.tol = tol_cond;
  cert.grid.resize(grid_size);
  const double b = 1.0 - kEdgeEps;
  for (int j = 0; j < grid_size; ++j) {
    // Chebyshev midpoints mapped to (0, b), ascending
    double x = std::cos(std::numbers::pi * (grid_size - 0.5 - j) / grid_size);
    cert.grid[j] = 0.5 * b * (1.0 + x);
  }

  cert.min_margin = kInf;
  cert.monotone_ok = true;
  double prev_ratio = -kInf;
  for (double t : cert.grid) {
    double d2 = bd.g2(t);
    if (!std::isfinite(d2)) {
      throw EvaluationError("check_condition: non-finite g'' at t=" +
                            std::to_string(t));
    }
    double d1 = bd.g1(t);
    double margin = t * d2 - d1;
    if (margin < cert.min_margin) {
      cert.min_margin = margin;
      cert.witness = t;
    }
    double ratio = d1 / t;
    if (ratio < prev_ratio - std::max(1e-9, 1e-9 * std::abs(prev_ratio))) {
      cert.monotone_ok = false;
    }
    prev_ratio = ratio;
  }
  cert.satisfied = cert.min_margin >= -tol_cond;
  return cert;
}

bool concavity_check_G_squared(const BinaryDivergence& bd, int pairs,
                               std::uint64_t seed) {
  const double tmax = bd.g(0.99);
  const double tol = 1e-8;
  Rng rng(seed);
  for (int i = 0; i < pairs; ++i) {
    double T1 = rng.uniform(0.0, tmax);
    double T2 = rng.uniform(0.0, tmax);
    double gm = inverse_G(bd, 0.5 * (T1 + T2));
    double ga = inverse_G(bd, T1);
    double gb = inverse_G(bd, T2);
    if (gm * gm < 0.5 * (ga * ga + gb * gb) - tol) return false;
  }
  return true;
}

}  // namespace divbound
