#include "divbound/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "divbound/binary.hpp"

namespace divbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

long step_count(const MarkovSystem& sys) {
  double ratio = sys.tau / sys.dt;
  long m = std::llround(ratio);
  if (std::abs(ratio - static_cast<double>(m)) > 1e-6 * std::max(1.0, ratio)) {
    throw ValidationError("markov system: tau/dt must be an integer");
  }
  return m;
}

// composite Simpson weights over m intervals of width h (3/8 tail when odd)
std::vector<double> simpson_weights(long m, double h) {
  std::vector<double> w(m + 1, 0.0);
  if (m == 1) {
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  long even_part = (m % 2 == 0) ? m : m - 3;
  for (long i = 0; i + 2 <= even_part; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (m % 2 != 0) {
    double c = 3.0 * h / 8.0;
    w[m - 3] += c;
    w[m - 2] += 3.0 * c;
    w[m - 1] += 3.0 * c;
    w[m] += c;
  }
  return w;
}

std::vector<double> trapezoid_weights(long m, double h) {
  std::vector<double> w(m + 1, h);
  w[0] = w[m] = 0.5 * h;
  return w;
}

const FGenerator& kl_gen() {
  static const FGenerator g = catalog_generator("kl");
  return g;
}

const BinaryDivergence& kl_binary() {
  static const BinaryDivergence bd = make_binary(kl_gen());
  return bd;
}

double kahan_sum(const std::vector<double>& xs) {
  double sum = 0.0, c = 0.0;
  for (double x : xs) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

void validate(const MarkovSystem& sys) {
  if (sys.n_states < 1) throw ValidationError("markov system: n_states < 1");
  const std::size_t n = static_cast<std::size_t>(sys.n_states);
  if (sys.rates.size() != n * n) {
    throw ValidationError("markov system: rates must be n_states^2 entries");
  }
  if (sys.p0.size() != n) {
    throw ValidationError("markov system: p0 length mismatch");
  }
  for (std::size_t nn = 0; nn < n; ++nn) {
    for (std::size_t mm = 0; mm < n; ++mm) {
      double r = sys.rates[nn * n + mm];
      if (!std::isfinite(r)) throw ValidationError("markov system: non-finite rate");
      if (nn != mm && r < 0.0) {
        throw ValidationError("markov system: negative off-diagonal rate");
      }
    }
  }
  for (std::size_t mm = 0; mm < n; ++mm) {
    double col = 0.0;
    for (std::size_t nn = 0; nn < n; ++nn) col += sys.rates[nn * n + mm];
    if (std::abs(col) > 1e-9) {
      throw ValidationError("markov system: column " + std::to_string(mm) +
                            " does not sum to zero");
    }
  }
  double mass = 0.0;
  for (double p : sys.p0) {
    if (!(p >= 0.0)) throw ValidationError("markov system: negative p0 entry");
    mass += p;
  }
  if (std::abs(mass - 1.0) > 1e-12) {
    throw ValidationError("markov system: p0 is not on the simplex");
  }
  if (!(sys.dt > 0.0)) throw ValidationError("markov system: dt must be > 0");
  if (!(sys.tau >= 0.0)) throw ValidationError("markov system: tau must be >= 0");
  step_count(sys);
}

std::vector<std::vector<double>> evolve(const MarkovSystem& sys) {
  validate(sys);
  const int n = sys.n_states;
  const long steps = step_count(sys);
  const double h = sys.dt;

  auto deriv = [&](const std::vector<double>& p, std::vector<double>& dp) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += sys.rates[i * n + j] * p[j];
      dp[i] = acc;
    }
  };

  std::vector<std::vector<double>> traj;
  traj.reserve(steps + 1);
  std::vector<double> p = sys.p0;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  traj.push_back(p);
  for (long s = 0; s < steps; ++s) {
    deriv(p, k1);
    for (int i = 0; i < n; ++i) tmp[i] = p[i] + 0.5 * h * k1[i];
    deriv(tmp, k2);
    for (int i = 0; i < n; ++i) tmp[i] = p[i] + 0.5 * h * k2[i];
    deriv(tmp, k3);
    for (int i = 0; i < n; ++i) tmp[i] = p[i] + h * k3[i];
    deriv(tmp, k4);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      p[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (p[i] < 0.0) {
        if (p[i] < -1e-9) {
          throw StepSizeError(
              "evolve: probability went below -1e-9 at t=" +
              std::to_string((s + 1) * h) + "; reduce dt");
        }
        p[i] = 0.0;
      }
      sum += p[i];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      for (int i = 0; i < n; ++i) p[i] /= sum;
    }
    traj.push_back(p);
  }
  return traj;
}

namespace {

struct Computation {
  ThermoReport report;
  std::vector<double> path_p, path_q;
};

Computation compute_report(const MarkovSystem& sys,
                           std::vector<ThermoTraceRow>* trace) {
  const auto traj = evolve(sys);
  const int n = sys.n_states;
  const long steps = step_count(sys);
  if (steps == 0) {
    throw DegenerateSystemError("thermo_report: zero horizon has no activity");
  }

  const auto ws = simpson_weights(steps, sys.dt);
  const auto wt = trapezoid_weights(steps, sys.dt);

  double activity = 0.0, sigma = 0.0, sigma_ps = 0.0, activity_trap = 0.0;
  std::vector<double> flux(n * n, 0.0);
  std::vector<double> path_p, path_q;
  path_p.reserve((steps + 1) * n * (n - 1));
  path_q.reserve((steps + 1) * n * (n - 1));
  if (trace) trace->reserve(steps + 1);

  for (long k = 0; k <= steps; ++k) {
    const auto& p = traj[k];
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) flux[a * n + b] = p[b] * sys.rate(a, b);
      }
    }
    double act_rate = 0.0, sig_rate = 0.0, ps_rate = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        double kf = flux[a * n + b], kr = flux[b * n + a];
        double tot = kf + kr;
        if (tot <= 0.0) continue;
        act_rate += tot;
        double diff = kf - kr;
        ps_rate += 2.0 * diff * diff / tot;
        if (kf > 0.0 && kr > 0.0) {
          sig_rate += diff * std::log(kf / kr);
        } else {
          sig_rate = kInf;  // one-way flux: local detailed balance broken
        }
      }
    }
    activity += ws[k] * act_rate;
    activity_trap += wt[k] * act_rate;
    sigma += ws[k] * sig_rate;
    sigma_ps += ws[k] * ps_rate;
    if (trace) {
      trace->push_back({k * sys.dt, sig_rate, act_rate, ps_rate});
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        path_p.push_back(wt[k] * flux[a * n + b]);
        path_q.push_back(wt[k] * flux[b * n + a]);
      }
    }
  }

  if (!(activity > 0.0) || !(activity_trap > 0.0)) {
    throw DegenerateSystemError("thermo_report: zero dynamical activity");
  }

  // normalize by the realized sum so the path measure is exactly on the simplex
  double mass = kahan_sum(path_p);
  for (double& x : path_p) x /= mass;
  for (double& x : path_q) x /= mass;

  double kl_pq = f_divergence_masses(kl_gen(), path_p, path_q);
  double td_pq = 0.0;
  for (std::size_t i = 0; i < path_p.size(); ++i) {
    double s = path_p[i] + path_q[i];
    if (s <= 0.0) continue;
    double d = path_p[i] - path_q[i];
    td_pq += d * d / s;
  }
  td_pq *= 0.5;

  ThermoReport rep;
  rep.sigma = sigma;
  rep.sigma_ps = sigma_ps;
  rep.activity = activity;
  double kl_route = activity * kl_pq;
  rep.kl_identity_gap = (std::isinf(sigma) && std::isinf(kl_route))
                            ? 0.0
                            : std::abs(sigma - kl_route);
  rep.td_identity_gap = std::abs(sigma_ps - 2.0 * activity * td_pq);
  rep.bound_rhs = tku_bound(std::min(sigma_ps, 2.0 * activity), activity);
  rep.bound_slack = (std::isinf(rep.sigma) && std::isinf(rep.bound_rhs))
                        ? 0.0
                        : rep.sigma - rep.bound_rhs;
  return {rep, std::move(path_p), std::move(path_q)};
}

}  // namespace

ThermoReport thermo_report(const MarkovSystem& sys,
                           std::vector<ThermoTraceRow>* trace) {
  return compute_report(sys, trace).report;
}

PathMeasures path_measures(const MarkovSystem& sys) {
  auto c = compute_report(sys, nullptr);
  return {std::move(c.path_p), std::move(c.path_q)};
}

double tku_bound(double sigma_ps, double activity) {
  if (!(activity > 0.0)) {
    throw DomainError("tku_bound: activity must be > 0");
  }
  if (!(sigma_ps >= 0.0) || sigma_ps > 2.0 * activity) {
    throw DomainError("tku_bound: sigma_ps must lie in [0, 2*activity]");
  }
  if (sigma_ps == 0.0) return 0.0;
  double t = std::sqrt(sigma_ps / (2.0 * activity));
  return activity * kl_binary().g(std::min(t, 1.0));
}

}  // namespace divbound
