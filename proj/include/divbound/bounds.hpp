#pragma once

#include <optional>
#include <string>
#include <utility>

#include "divbound/binary.hpp"
#include "divbound/fgen.hpp"

namespace divbound {

// Mean/variance constraint tuple. a = m_p - m_q is the derived offset.
struct MomentSpec {
  double m_p = 0.0;
  double sigma_p = 0.0;
  double m_q = 0.0;
  double sigma_q = 0.0;

  double a() const { return m_p - m_q; }
};

void validate(const MomentSpec& spec);

struct BoundResult {
  double bound_value = 0.0;  // g(argument), may be +inf
  double argument = 0.0;     // the t fed to g (sqrt(d), tv, or s)
  bool tight = false;
  std::optional<std::pair<DiscreteDist, DiscreteDist>> attained_pair;
  std::string basis;  // "theorem1" | "theorem2" | "tv-remark"
};

// Tight lower bound on the symmetrized f-divergence over pairs with
// triangular discrimination d: g(sqrt(d)), attained by (R_sqrt(d), swap).
// Requires the condition certificate; throws ConditionError otherwise.
BoundResult theorem1_bound(const BinaryDivergence& bd, double d,
                           int condition_grid = 512);

// Variant under a fixed total variation distance: g(tv), attained by
// (R_tv, swap). Needs only convexity, so no certificate is required;
// results carry basis="tv-remark" to mark the weaker hypothesis.
BoundResult tv_bound(const BinaryDivergence& bd, double tv);

// s = |a| / sqrt(2(sigma_p^2 + sigma_q^2) + a^2); 0 when everything is 0.
double theorem2_s(const MomentSpec& spec);

// Lower bound g(s) under given means and variances; tight (with the
// moment-matched two-point pair attached) only when sigma_p == sigma_q.
BoundResult theorem2_bound(const BinaryDivergence& bd, const MomentSpec& spec,
                           int condition_grid = 512);

// The attaining pair for equal variances: two-point measures on
// {-x*sgn(a)+c, x*sgn(a)+c}, x = sqrt(4 sigma^2 + a^2)/2, c = (m_p+m_q)/2,
// with masses ((1-r)/2, (1+r)/2) and the swap. sgn(a):=1 when a=0.
std::pair<DiscreteDist, DiscreteDist> lemma3_pair(const MomentSpec& spec);

}  // namespace divbound
