#pragma once

#include <vector>

#include "divbound/fgen.hpp"

namespace divbound {

// Continuous-time Markov jump process with a time-independent rate matrix.
// rates is row-major with rates[n*n_states + m] = transition rate from
// state m to state n; off-diagonals are >= 0 and columns sum to zero.
struct MarkovSystem {
  int n_states = 0;
  std::vector<double> rates;
  std::vector<double> p0;
  double tau = 0.0;
  double dt = 0.0;

  double rate(int n, int m) const { return rates[n * n_states + m]; }
};

void validate(const MarkovSystem& sys);

// Fixed-step classical Runge-Kutta integration of dp/dt = R p from 0 to tau;
// returns p at every step boundary (tau/dt + 1 vectors). Probabilities are
// clamped at tiny negative excursions and renormalized when the simplex
// drift exceeds 1e-12; excursions beyond -1e-9 raise StepSizeError.
std::vector<std::vector<double>> evolve(const MarkovSystem& sys);

struct ThermoReport {
  double sigma = 0.0;            // total entropy production (nats)
  double sigma_ps = 0.0;         // pseudo-entropy production
  double activity = 0.0;         // dynamical activity
  double kl_identity_gap = 0.0;  // |sigma - activity * D(P||P^dagger)|
  double td_identity_gap = 0.0;  // |sigma_ps - 2 * activity * TD(P,P^dagger)|
  double bound_rhs = 0.0;        // activity * g_kl(sqrt(sigma_ps/(2 activity)))
  double bound_slack = 0.0;      // sigma - bound_rhs
};

struct ThermoTraceRow {
  double t;
  double sigma_rate;
  double activity_rate;
  double sigma_ps_rate;
};

// Discrete path measures over (node k, ordered pair (n,m), n != m), flattened
// as index = k*n*(n-1) + position of (n,m) in row-major order skipping the
// diagonal. forward[i] = K_nm(t_k) w_k / A, reverse[i] = K_mn(t_k) w_k / A
// with trapezoid weights w_k; both sum to 1.
struct PathMeasures {
  std::vector<double> forward;
  std::vector<double> reverse;
};

PathMeasures path_measures(const MarkovSystem& sys);

// Integrate the edge fluxes K_nm(t) = p_m(t) R_nm along the trajectory.
// Reported sigma / sigma_ps / activity use composite Simpson over the step
// boundaries; the discrete path measures P(n,m,t_k) = K_nm(t_k) w_k / A_tau
// use trapezoid weights w_k, so the identity gaps expose the trapezoid
// discretization error (second order in dt, zero at stationarity).
// sigma is +inf when some flux has no reverse flux (local detailed balance
// broken on the trajectory).
ThermoReport thermo_report(const MarkovSystem& sys,
                           std::vector<ThermoTraceRow>* trace = nullptr);

// activity * g_kl(sqrt(sigma_ps / (2 activity))), the entropy-production
// lower bound. Requires activity > 0 and sigma_ps <= 2 * activity.
double tku_bound(double sigma_ps, double activity);

}  // namespace divbound
