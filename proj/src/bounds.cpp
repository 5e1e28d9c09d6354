#include "divbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace divbound {

void validate(const MomentSpec& spec) {
  if (!(spec.sigma_p >= 0.0) || !(spec.sigma_q >= 0.0)) {
    throw ValidationError("moment spec: variances must be >= 0");
  }
  if (!std::isfinite(spec.m_p) || !std::isfinite(spec.m_q) ||
      !std::isfinite(spec.sigma_p) || !std::isfinite(spec.sigma_q)) {
    throw ValidationError("moment spec: non-finite entry");
  }
}

namespace {

void require_condition(const BinaryDivergence& bd, int grid) {
  auto cert = check_condition(bd, grid);
  if (!cert.satisfied) {
    throw ConditionError("condition (1/t)g'(t) non-decreasing fails for '" +
                             bd.name() + "'",
                         std::move(cert));
  }
}

}  // namespace

BoundResult theorem1_bound(const BinaryDivergence& bd, double d,
                           int condition_grid) {
  if (!(d >= 0.0 && d <= 1.0)) {
    throw DomainError("theorem1_bound: d outside [0,1]");
  }
  require_condition(bd, condition_grid);
  BoundResult res;
  res.argument = std::sqrt(d);
  res.bound_value = bd.g(res.argument);
  res.attained_pair = binary_pair(res.argument);
  res.tight = true;
  res.basis = "theorem1";
  return res;
}

BoundResult tv_bound(const BinaryDivergence& bd, double tv) {
  if (!(tv >= 0.0 && tv <= 1.0)) {
    throw DomainError("tv_bound: tv outside [0,1]");
  }
  BoundResult res;
  res.argument = tv;
  res.bound_value = bd.g(tv);
  res.attained_pair = binary_pair(tv);
  res.tight = true;
  res.basis = "tv-remark";
  return res;
}

double theorem2_s(const MomentSpec& spec) {
  validate(spec);
  double a = spec.a();
  if (a == 0.0) return 0.0;
  double denom = 2.0 * (spec.sigma_p * spec.sigma_p + spec.sigma_q * spec.sigma_q) +
                 a * a;
  return std::abs(a) / std::sqrt(denom);
}

BoundResult theorem2_bound(const BinaryDivergence& bd, const MomentSpec& spec,
                           int condition_grid) {
  double s = theorem2_s(spec);
  require_condition(bd, condition_grid);
  BoundResult res;
  res.argument = s;
  res.bound_value = bd.g(s);
  res.basis = "theorem2";
  if (spec.sigma_p == spec.sigma_q) {
    res.tight = true;
    res.attained_pair = lemma3_pair(spec);
  }
  return res;
}

std::pair<DiscreteDist, DiscreteDist> lemma3_pair(const MomentSpec& spec) {
  validate(spec);
  if (spec.sigma_p != spec.sigma_q) {
    throw ValidationError("lemma3_pair: requires sigma_p == sigma_q");
  }
  const double sigma = spec.sigma_p;
  const double a = spec.a();
  const double c = 0.5 * (spec.m_p + spec.m_q);
  const double x = 0.5 * std::sqrt(4.0 * sigma * sigma + a * a);

  if (x == 0.0) {
    // fully degenerate: P = Q = point mass at the common mean
    DiscreteDist point({c}, {1.0});
    return {point, point};
  }

  const double r = std::min(1.0, std::abs(a) / (2.0 * x));
  double lo = 0.5 * (1.0 - r), hi = 0.5 * (1.0 + r);
  // mass (1-r)/2 of R_r sits on -x*sgn(a)+c; sgn(0):=1
  if (a < 0.0) std::swap(lo, hi);
  return {DiscreteDist({c - x, c + x}, {lo, hi}),
          DiscreteDist({c - x, c + x}, {hi, lo})};
}

}  // namespace divbound
