#pragma once

#include <span>

#include "divbound/bounds.hpp"
#include "divbound/fgen.hpp"

namespace divbound {

struct OracleOptions {
  double feas_tol = 1e-4;   // |TD - d| feasibility band
  double penalty = 100.0;   // exact-penalty weight on the constraint
  int top_k = 10;           // coarse candidates kept for refinement
  bool refine = true;
  double min_step = 1e-8;   // refinement terminates below this step
};

struct OracleResult {
  double value;  // least symmetrized divergence found
  double delta;  // TD of the best pair
  DiscreteDist best_p;
  DiscreteDist best_q;
};

// Brute-force minimum of the symmetrized divergence over pairs of mass
// vectors on a shared support of the given size, constrained to
// |TD(P,Q) - d| <= feas_tol: coarse simplex grid with an exact penalty,
// then transfer-move pattern search from the best top_k grid points.
// Throws SearchError when no feasible candidate is found.
OracleResult min_symmetrized_given_td(const FGenerator& gen, double d,
                                      int support_size, int resolution,
                                      const OracleOptions& opt = {});

// Brute-force minimum under the four moment constraints (equal variances).
// Two-point supports are solved in closed form from the moment equations;
// three-point supports are searched over support triples with masses solved
// exactly per triple.
OracleResult min_symmetrized_given_moments(const FGenerator& gen,
                                           const MomentSpec& spec,
                                           int support_size, int resolution,
                                           const OracleOptions& opt = {});

struct SedrakyanResult {
  bool holds;
  bool equality;
};

// sum u^2/v >= (sum u)^2 / sum v for v > 0; equality iff u = c*v.
SedrakyanResult sedrakyan_check(std::span<const double> u,
                                std::span<const double> v);

struct TwoPointAttainment {
  double delta;
  double s_squared;
  bool matches_s_squared;
  bool sedrakyan_equality;
  DiscreteDist p;
  DiscreteDist q;
};

// Construct the two-point pair with the requested (possibly unequal)
// variances by solving the moment system, and verify that its TD equals
// s^2 with the Sedrakyan equality condition holding. Throws
// ConstructionError when the system has no solution (a = 0 with
// sigma_p != sigma_q).
TwoPointAttainment td_two_point_attainment(const MomentSpec& spec);

}  // namespace divbound
