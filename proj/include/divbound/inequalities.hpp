#pragma once

#include "divbound/fgen.hpp"

namespace divbound {

// One inequality evaluation, oriented so slack >= 0 means it holds, with
// the weaker previously-known right side for comparison.
struct IneqReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;        // lhs - rhs (orientation-normalized)
  double prior_rhs = 0.0;
  double improvement = 0.0;  // rhs - prior_rhs
};

// binary entropy of R_t, natural log
double binary_entropy(double t);

// H^2(P,Q) >= 1 - sqrt(1 - TD) = TD / (1 + sqrt(1 - TD)); prior bound TD/2.
IneqReport hellinger_td_bound(const DiscreteDist& P, const DiscreteDist& Q);

// TD + Z^2 <= 1 for the Bhattacharyya coefficient Z; reported with
// lhs = 1, rhs = TD + Z^2, slack = 1 - rhs.
IneqReport bhattacharyya_relation(const DiscreteDist& P, const DiscreteDist& Q);

// JS(P,Q) >= ln 2 - H_b(R_sqrt(TD)); prior bound TD/2 (nats).
IneqReport js_td_bound(const DiscreteDist& P, const DiscreteDist& Q);

// g_js(sqrt(t)) >= t/2 on a grid of (0,1]; the linear minorant behind the
// "tighter than TD/2" comparison.
bool js_linear_minorant_check(int grid_size);

}  // namespace divbound
