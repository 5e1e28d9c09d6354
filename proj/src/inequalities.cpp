#include "divbound/inequalities.hpp"

#include <cmath>

#include "divbound/binary.hpp"

namespace divbound {

namespace {

const FGenerator& hellinger_gen() {
  static const FGenerator g = catalog_generator("hellinger2");
  return g;
}

const FGenerator& js_gen() {
  static const FGenerator g = catalog_generator("js");
  return g;
}

}  // namespace

double binary_entropy(double t) {
  auto part = [](double m) { return m > 0.0 ? -m * std::log(m) : 0.0; };
  return part(0.5 * (1.0 - t)) + part(0.5 * (1.0 + t));
}

IneqReport hellinger_td_bound(const DiscreteDist& P, const DiscreteDist& Q) {
  IneqReport rep;
  double d = triangular_discrimination(P, Q);
  rep.lhs = f_divergence(hellinger_gen(), P, Q);
  rep.rhs = d / (1.0 + std::sqrt(std::max(0.0, 1.0 - d)));
  rep.prior_rhs = 0.5 * d;
  rep.slack = rep.lhs - rep.rhs;
  rep.improvement = rep.rhs - rep.prior_rhs;
  return rep;
}

IneqReport bhattacharyya_relation(const DiscreteDist& P, const DiscreteDist& Q) {
  IneqReport rep;
  double d = triangular_discrimination(P, Q);
  double z = bhattacharyya_coefficient(P, Q);
  rep.lhs = 1.0;
  rep.rhs = d + z * z;
  rep.slack = rep.lhs - rep.rhs;  // constraint is rhs <= 1
  rep.prior_rhs = rep.rhs;
  rep.improvement = 0.0;
  return rep;
}

IneqReport js_td_bound(const DiscreteDist& P, const DiscreteDist& Q) {
  IneqReport rep;
  double d = triangular_discrimination(P, Q);
  rep.lhs = f_divergence(js_gen(), P, Q);
  rep.rhs = std::log(2.0) - binary_entropy(std::sqrt(d));
  rep.prior_rhs = 0.5 * d;
  rep.slack = rep.lhs - rep.rhs;
  rep.improvement = rep.rhs - rep.prior_rhs;
  return rep;
}

bool js_linear_minorant_check(int grid_size) {
  if (grid_size < 100) {
    throw ValidationError("js_linear_minorant_check: grid_size must be >= 100");
  }
  auto bd = make_binary(js_gen());
  for (int i = 1; i <= grid_size; ++i) {
    double t = static_cast<double>(i) / grid_size;
    if (bd.g(std::sqrt(t)) < 0.5 * t - 1e-12) return false;
  }
  return true;
}

}  // namespace divbound
