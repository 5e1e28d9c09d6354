#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divbound/errors.hpp"

namespace divbound {

// Convex generator of an f-divergence: f on (0,inf) with f(1)=0, its first
// two derivatives, and the extended-real limits that drive the zero-mass
// conventions. f2 may be empty for custom generators; consumers fall back
// to finite differences.
struct FGenerator {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> f1;
  std::function<double(double)> f2;
  double f_at_0 = 0.0;        // lim_{t->0+} f(t), may be +inf
  double slope_at_inf = 0.0;  // lim_{u->inf} f(u)/u, may be +inf
};

// f(1)=0 within 1e-12 and strict convexity on a probe grid over
// (0,1) u (1,10). Throws ValidationError.
void validate_generator(const FGenerator& gen);

// Built-in catalog: td, kl, hellinger2, js.
std::vector<FGenerator> catalog();

// Lookup by name; accepts the aliases listed in the README
// (td|triangular, kl, hellinger|hellinger2|h2, js|jensen-shannon).
FGenerator catalog_generator(const std::string& name);

// Finite distribution over strictly increasing real outcomes. Zero masses
// are permitted; masses sum to 1 within 1e-12.
struct DiscreteDist {
  std::vector<double> support;
  std::vector<double> mass;

  DiscreteDist(std::vector<double> support_, std::vector<double> mass_)
      : support(std::move(support_)), mass(std::move(mass_)) {
    validate(*this);
  }

  std::size_t size() const { return support.size(); }

  friend void validate(const DiscreteDist& d);
};

struct Moments {
  double mean;
  double variance;
};

// Divergence kernel on pre-aligned mass vectors. Implements the
// conventions 0*f(0/0)=0, 0*f(a/0)=a*slope_at_inf, q*f(0/q)=q*f(0).
// Returns +inf when any term is infinite.
double f_divergence_masses(const FGenerator& gen, std::span<const double> p,
                           std::span<const double> q);

// D_f(P||Q) = sum_i q_i f(p_i/q_i); requires P and Q on the same support
// list (AlignmentError otherwise).
double f_divergence(const FGenerator& gen, const DiscreteDist& P,
                    const DiscreteDist& Q);

// (D_f(P||Q)+D_f(Q||P))/2
double symmetrized_divergence(const FGenerator& gen, const DiscreteDist& P,
                              const DiscreteDist& Q);

Moments moments(const DiscreteDist& d);

// Merge two supports into a common sorted list, padding absent points with
// zero mass. The divergences require pre-aligned inputs; this is the one
// sanctioned way to produce them.
std::pair<DiscreteDist, DiscreteDist> align_supports(const DiscreteDist& P,
                                                     const DiscreteDist& Q);

// The two-element pair (R_t, R_t^dagger): masses ((1-t)/2,(1+t)/2) and the
// swap, on support {x_lo, x_hi} (canonical {0,1}).
std::pair<DiscreteDist, DiscreteDist> binary_pair(double t, double x_lo = 0.0,
                                                  double x_hi = 1.0);

// Named divergences used throughout; all natural-log based.
double triangular_discrimination(const DiscreteDist& P, const DiscreteDist& Q);
double total_variation(const DiscreteDist& P, const DiscreteDist& Q);
double bhattacharyya_coefficient(const DiscreteDist& P, const DiscreteDist& Q);

}  // namespace divbound
