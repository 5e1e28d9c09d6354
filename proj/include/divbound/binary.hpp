#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "divbound/fgen.hpp"

namespace divbound {

// g may only be probed on [0, 1 - kEdgeEps]; several generators diverge at 1.
inline constexpr double kEdgeEps = 1e-9;

// Certificate for the hypothesis "(1/t) g'(t) non-decreasing", probed as
// t*g''(t) - g'(t) >= 0 on a Chebyshev grid.
struct ConditionCertificate {
  bool satisfied = false;
  std::vector<double> grid;
  double min_margin = 0.0;
  double witness = 0.0;       // t achieving min_margin
  double tol = 1e-9;          // tol_cond used for the verdict
  bool monotone_ok = false;   // discrete cross-check: g1(t)/t non-decreasing
};

// check_condition failed as a precondition of a bound; carries the evidence.
class ConditionError : public std::runtime_error {
 public:
  ConditionError(const std::string& what, ConditionCertificate cert)
      : std::runtime_error(what), certificate(std::move(cert)) {}
  ConditionCertificate certificate;
};

// The scalar function g(t) = D_f(R_t || R_t^dagger) on [0,1), with its
// first two derivatives and the limit at 1. Immutable after construction.
class BinaryDivergence {
 public:
  // g from the two-term closed form of the generator; g' from the exact
  // derivative identity; g'' from the analytic expression in f'' when the
  // generator provides one, else central differences.
  static BinaryDivergence from_generator(FGenerator gen);

  // Inject a raw scalar g (used for negative controls); missing derivatives
  // fall back to central differences with h = max(1e-5, 1e-5*t), and a NaN
  // g_at_1 is replaced by g evaluated at the edge of the domain.
  static BinaryDivergence from_scalar(
      std::string name, std::function<double(double)> g,
      std::function<double(double)> g1 = {},
      std::function<double(double)> g2 = {},
      double g_at_1 = std::numeric_limits<double>::quiet_NaN());

  double g(double t) const;
  double g1(double t) const;
  double g2(double t) const;
  double g_at_1() const { return g_at_1_; }
  const std::string& name() const { return name_; }
  const FGenerator* generator() const { return gen_ ? &*gen_ : nullptr; }

 private:
  BinaryDivergence() = default;

  std::string name_;
  std::optional<FGenerator> gen_;
  std::function<double(double)> g_;
  std::function<double(double)> g1_;
  std::function<double(double)> g2_;
  double g_at_1_ = 0.0;
};

BinaryDivergence make_binary(const FGenerator& gen);

// Inverse of g: the t in [0,1] with g(t)=T, by bisection (200 iterations,
// derivative-free). Returns 1 for T >= g(1-) when that limit is finite.
// Throws DomainError for T < 0.
double inverse_G(const BinaryDivergence& bd, double T);

// Probe t*g'' - g' >= -tol_cond on a Chebyshev grid of (0, 1-kEdgeEps).
// grid_size >= 100. Throws EvaluationError naming t if g'' is non-finite
// inside the grid.
ConditionCertificate check_condition(const BinaryDivergence& bd, int grid_size,
                                     double tol_cond = 1e-9);

// Midpoint-concavity spot check of G(T)^2 on random T pairs in [0, g(0.99)].
bool concavity_check_G_squared(const BinaryDivergence& bd, int pairs,
                               std::uint64_t seed = 20240817);

}  // namespace divbound
