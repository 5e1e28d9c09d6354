#include "divbound/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace divbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double td_masses(std::span<const double> p, std::span<const double> q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double s = p[i] + q[i];
    if (s <= 0.0) continue;
    double d = p[i] - q[i];
    acc += d * d / s;
  }
  return 0.5 * acc;
}

double sym_masses(const FGenerator& gen, std::span<const double> p,
                  std::span<const double> q) {
  return 0.5 *
         (f_divergence_masses(gen, p, q) + f_divergence_masses(gen, q, p));
}

// all mass vectors (k_0/res, ..., k_{n-1}/res) with sum k_i = res
void enumerate_simplex(int n, int res, std::vector<std::vector<double>>& out) {
  std::vector<int> k(n, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == n - 1) {
      k[idx] = left;
      std::vector<double> m(n);
      for (int i = 0; i < n; ++i) m[i] = static_cast<double>(k[i]) / res;
      out.push_back(std::move(m));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, res);
}

struct TdCandidate {
  std::vector<double> p, q;
  double sym = kInf, delta = 0.0, score = kInf;
};

void eval_td(const FGenerator& gen, double d, double penalty, TdCandidate& c) {
  c.delta = td_masses(c.p, c.q);
  c.sym = sym_masses(gen, c.p, c.q);
  c.score = std::isfinite(c.sym) ? c.sym + penalty * std::abs(c.delta - d)
                                 : kInf;
}

// First-improvement pattern search over mass-transfer moves with quadratic
// penalty continuation. The |TD - d| kink of the ranking score stalls
// coordinate moves on the constraint manifold; a smooth penalty keeps
// single-coordinate moves descending (linear gain beats quadratic penalty
// for small steps), and raising mu pins TD to d within ~V'/(2 mu).
void refine_td(const FGenerator& gen, double d, const OracleOptions& opt,
               int resolution, TdCandidate& c) {
  const int n = static_cast<int>(c.p.size());
  long evals = 0;
  for (double mu : {1e2, 1e4, 1e6}) {
    auto penalized = [&](double sym, double delta) {
      if (!std::isfinite(sym)) return kInf;
      double r = delta - d;
      return sym + mu * r * r;
    };
    double score = penalized(c.sym, c.delta);
    double step = 1.0 / resolution;
    while (step >= opt.min_step && evals < 600000) {
      bool improved = false;
      for (std::vector<double>* dist : {&c.p, &c.q}) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double delta_m = std::min(step, (*dist)[i]);
            if (delta_m <= 0.0) continue;
            (*dist)[i] -= delta_m;
            (*dist)[j] += delta_m;
            double delta = td_masses(c.p, c.q);
            double sym = sym_masses(gen, c.p, c.q);
            double trial = penalized(sym, delta);
            ++evals;
            if (trial < score) {
              c.sym = sym;
              c.delta = delta;
              score = trial;
              improved = true;
            } else {
              (*dist)[i] += delta_m;
              (*dist)[j] -= delta_m;
            }
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }
  c.score = std::isfinite(c.sym) ? c.sym + opt.penalty * std::abs(c.delta - d)
                                 : kInf;
}

DiscreteDist dist_on_index_support(const std::vector<double>& mass) {
  std::vector<double> support(mass.size());
  for (std::size_t i = 0; i < mass.size(); ++i) support[i] = static_cast<double>(i);
  // grid masses sum to 1 exactly (integers over res); refined ones drift
  std::vector<double> m = mass;
  double sum = 0.0;
  for (double x : m) sum += x;
  for (double& x : m) x /= sum;
  return DiscreteDist(std::move(support), std::move(m));
}

// masses on a fixed 3-point support matching mean/second-moment, solved by
// Cramer's rule; returns false when the solution leaves the simplex
bool solve_three_point_masses(const std::array<double, 3>& y, double mean,
                              double second, std::array<double, 3>& m) {
  double y0 = y[0], y1 = y[1], y2 = y[2];
  double det = (y1 - y0) * (y2 - y0) * (y2 - y1);
  if (std::abs(det) < 1e-12) return false;
  // rows: [1 1 1; y; y^2] * m = [1, mean, second]
  double d0 = (y1 * y2 * (y2 - y1)) - mean * (y2 * y2 - y1 * y1) +
              second * (y2 - y1);
  double d1 = -(y0 * y2 * (y2 - y0)) + mean * (y2 * y2 - y0 * y0) -
              second * (y2 - y0);
  double d2 = (y0 * y1 * (y1 - y0)) - mean * (y1 * y1 - y0 * y0) +
              second * (y1 - y0);
  m = {d0 / det, d1 / det, d2 / det};
  double sum = 0.0;
  for (double& x : m) {
    if (x < -1e-12) return false;
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  for (double& x : m) x /= sum;
  return true;
}

}  // namespace

OracleResult min_symmetrized_given_td(const FGenerator& gen, double d,
                                      int support_size, int resolution,
                                      const OracleOptions& opt) {
  if (support_size < 2 || support_size > 4) {
    throw ValidationError("td oracle: support_size must be in {2,3,4}");
  }
  if (!(d > 0.0 && d < 1.0)) {
    throw DomainError("td oracle: d must be in (0,1)");
  }
  if (resolution < 1) throw ValidationError("td oracle: resolution must be >= 1");

  std::vector<std::vector<double>> grid;
  enumerate_simplex(support_size, resolution, grid);

  std::vector<TdCandidate> best;
  auto consider = [&](TdCandidate&& c) {
    if (!std::isfinite(c.score)) return;
    if (static_cast<int>(best.size()) < opt.top_k) {
      best.push_back(std::move(c));
      std::sort(best.begin(), best.end(),
                [](const auto& a, const auto& b) { return a.score < b.score; });
    } else if (c.score < best.back().score) {
      best.back() = std::move(c);
      std::sort(best.begin(), best.end(),
                [](const auto& a, const auto& b) { return a.score < b.score; });
    }
  };

  for (const auto& p : grid) {
    for (const auto& q : grid) {
      TdCandidate c;
      c.p = p;
      c.q = q;
      eval_td(gen, d, opt.penalty, c);
      consider(std::move(c));
    }
  }

  if (opt.refine) {
    for (auto& c : best) refine_td(gen, d, opt, resolution, c);
  }

  const TdCandidate* winner = nullptr;
  for (const auto& c : best) {
    if (std::abs(c.delta - d) > opt.feas_tol) continue;
    if (!winner || c.sym < winner->sym) winner = &c;
  }
  if (!winner) {
    throw SearchError("td oracle: no pair with |TD - d| <= " +
                      std::to_string(opt.feas_tol) +
                      " found; increase resolution");
  }
  return {winner->sym, winner->delta, dist_on_index_support(winner->p),
          dist_on_index_support(winner->q)};
}

OracleResult min_symmetrized_given_moments(const FGenerator& gen,
                                           const MomentSpec& spec,
                                           int support_size, int resolution,
                                           const OracleOptions& opt) {
  validate(spec);
  if (spec.sigma_p != spec.sigma_q) {
    throw ValidationError("moments oracle: requires sigma_p == sigma_q");
  }
  if (support_size != 2 && support_size != 3) {
    throw ValidationError("moments oracle: support_size must be 2 or 3");
  }
  const double sigma = spec.sigma_p;
  const double a = spec.a();
  const double c = 0.5 * (spec.m_p + spec.m_q);

  if (support_size == 2) {
    if (a == 0.0) {
      // P = Q meets the constraints; the minimum is exactly zero
      DiscreteDist d0 = sigma > 0.0
                            ? DiscreteDist({c - sigma, c + sigma}, {0.5, 0.5})
                            : DiscreteDist({c}, {1.0});
      return {0.0, 0.0, d0, d0};
    }
    // centered two-point support forced by the moment system
    double x = 0.5 * std::sqrt(4.0 * sigma * sigma + a * a);
    double p = std::clamp((x - 0.5 * a) / (2.0 * x), 0.0, 1.0);
    double q = std::clamp((x + 0.5 * a) / (2.0 * x), 0.0, 1.0);
    DiscreteDist P({c - x, c + x}, {p, 1.0 - p});
    DiscreteDist Q({c - x, c + x}, {q, 1.0 - q});
    return {symmetrized_divergence(gen, P, Q),
            triangular_discrimination(P, Q), P, Q};
  }

  // three-point: search support triples, solve masses per triple
  if (resolution < 4) {
    throw ValidationError("moments oracle: resolution must be >= 4");
  }
  const double x_opt = 0.5 * std::sqrt(4.0 * sigma * sigma + a * a);
  const double span = 2.0 * std::max({x_opt, sigma, 0.5 * std::abs(a)}) + 0.5;
  const double mu_p = spec.m_p, mu_q = spec.m_q;
  const double m2_p = sigma * sigma + mu_p * mu_p;
  const double m2_q = sigma * sigma + mu_q * mu_q;

  struct Cand {
    std::array<double, 3> y;
    std::array<double, 3> mp, mq;
    double sym = kInf;
  };

  auto eval_support = [&](const std::array<double, 3>& y, Cand& out) {
    if (!(y[0] < y[1] && y[1] < y[2])) return false;
    if (y[1] - y[0] < 1e-7 || y[2] - y[1] < 1e-7) return false;
    std::array<double, 3> mp, mq;
    if (!solve_three_point_masses(y, mu_p, m2_p, mp)) return false;
    if (!solve_three_point_masses(y, mu_q, m2_q, mq)) return false;
    double sym = sym_masses(gen, mp, mq);
    if (!std::isfinite(sym)) return false;
    out = {y, mp, mq, sym};
    return true;
  };

  std::vector<Cand> best;
  auto consider = [&](const Cand& cand) {
    if (static_cast<int>(best.size()) < opt.top_k) {
      best.push_back(cand);
    } else if (cand.sym < best.back().sym) {
      best.back() = cand;
    } else {
      return;
    }
    std::sort(best.begin(), best.end(),
              [](const auto& u, const auto& v) { return u.sym < v.sym; });
  };

  std::vector<double> axis(resolution);
  for (int i = 0; i < resolution; ++i) {
    axis[i] = c - span + 2.0 * span * i / (resolution - 1);
  }
  for (int i = 0; i < resolution; ++i) {
    for (int j = i + 1; j < resolution; ++j) {
      for (int k = j + 1; k < resolution; ++k) {
        Cand cand;
        if (eval_support({axis[i], axis[j], axis[k]}, cand)) consider(cand);
      }
    }
  }
  if (best.empty()) {
    throw SearchError("moments oracle: no feasible support found");
  }

  if (opt.refine) {
    const double step0 = 2.0 * span / (resolution - 1);
    for (auto& cand : best) {
      double step = step0;
      long evals = 0;
      while (step >= opt.min_step * std::max(1.0, span) && evals < 200000) {
        bool improved = false;
        for (int axis_i = 0; axis_i < 3; ++axis_i) {
          for (double dir : {+1.0, -1.0}) {
            std::array<double, 3> y = cand.y;
            y[axis_i] += dir * step;
            Cand trial;
            ++evals;
            if (eval_support(y, trial) && trial.sym < cand.sym) {
              cand = trial;
              improved = true;
            }
          }
        }
        if (!improved) step *= 0.5;
      }
    }
    std::sort(best.begin(), best.end(),
              [](const auto& u, const auto& v) { return u.sym < v.sym; });
  }

  const Cand& w = best.front();
  DiscreteDist P({w.y[0], w.y[1], w.y[2]}, {w.mp[0], w.mp[1], w.mp[2]});
  DiscreteDist Q({w.y[0], w.y[1], w.y[2]}, {w.mq[0], w.mq[1], w.mq[2]});
  return {w.sym, triangular_discrimination(P, Q), P, Q};
}

SedrakyanResult sedrakyan_check(std::span<const double> u,
                                std::span<const double> v) {
  if (u.size() != v.size() || u.empty()) {
    throw ValidationError("sedrakyan_check: length mismatch or empty input");
  }
  double sum_ratio = 0.0, sum_u = 0.0, sum_v = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(v[i] > 0.0)) {
      throw ValidationError("sedrakyan_check: v must be strictly positive");
    }
    sum_ratio += u[i] * u[i] / v[i];
    sum_u += u[i];
    sum_v += v[i];
  }
  double rhs = sum_u * sum_u / sum_v;
  SedrakyanResult res;
  res.holds = sum_ratio >= rhs - 1e-12;
  res.equality = std::abs(sum_ratio - rhs) <= 1e-10;
  if (res.equality) {
    double cc = sum_u / sum_v;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (std::abs(u[i] - cc * v[i]) > 1e-8) {
        res.equality = false;
        break;
      }
    }
  }
  return res;
}

TwoPointAttainment td_two_point_attainment(const MomentSpec& spec) {
  validate(spec);
  const double a = spec.a();
  const double c = 0.5 * (spec.m_p + spec.m_q);
  const double var_p = spec.sigma_p * spec.sigma_p;
  const double var_q = spec.sigma_q * spec.sigma_q;
  const double s2_denom = 2.0 * (var_p + var_q) + a * a;
  const double s_squared = s2_denom > 0.0 ? a * a / s2_denom : 0.0;

  if (a == 0.0) {
    if (spec.sigma_p != spec.sigma_q) {
      throw ConstructionError(
          "td_two_point_attainment: equal means with unequal variances admit "
          "no common two-point support");
    }
    double sigma = spec.sigma_p;
    DiscreteDist d0 = sigma > 0.0
                          ? DiscreteDist({c - sigma, c + sigma}, {0.5, 0.5})
                          : DiscreteDist({c}, {1.0});
    return {0.0, 0.0, true, true, d0, d0};
  }

  // sum and product of the centered support points, from the moment system
  const double S = (var_p - var_q) / a;
  const double prod = -0.25 * s2_denom;
  const double disc = S * S - 4.0 * prod;
  const double root = std::sqrt(disc);
  const double x1 = 0.5 * (S - root);
  const double x2 = 0.5 * (S + root);
  double p = (0.5 * a - x2) / (x1 - x2);
  double q = (-0.5 * a - x2) / (x1 - x2);
  if (p < -1e-9 || p > 1.0 + 1e-9 || q < -1e-9 || q > 1.0 + 1e-9) {
    throw ConstructionError("td_two_point_attainment: mass outside [0,1]");
  }
  p = std::clamp(p, 0.0, 1.0);
  q = std::clamp(q, 0.0, 1.0);

  DiscreteDist P({x1 + c, x2 + c}, {p, 1.0 - p});
  DiscreteDist Q({x1 + c, x2 + c}, {q, 1.0 - q});
  double delta = triangular_discrimination(P, Q);

  // equality condition of the Cauchy-Schwarz step, on this pair
  std::array<double, 2> u = {x1 * (p - q), x2 * ((1.0 - p) - (1.0 - q))};
  std::array<double, 2> v = {x1 * x1 * (p + q), x2 * x2 * (2.0 - p - q)};
  bool sed_eq = sedrakyan_check(u, v).equality;

  return {delta, s_squared, std::abs(delta - s_squared) <= 1e-10, sed_eq, P, Q};
}

}  // namespace divbound
