#include "divbound/fgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace divbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// compensated summation; keeps simplex checks honest for long mass lists
double kahan_sum(std::span<const double> xs) {
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

void validate_generator(const FGenerator& gen) {
  if (!gen.f || !gen.f1) {
    throw ValidationError("generator '" + gen.name + "': f and f1 are required");
  }
  if (std::abs(gen.f(1.0)) > 1e-12) {
    throw ValidationError("generator '" + gen.name + "': f(1) != 0");
  }
  // strict convexity probe over (0,1) u (1,10)
  for (int i = 1; i <= 40; ++i) {
    double t = i <= 20 ? i / 21.0 : 1.0 + 9.0 * (i - 20) / 21.0;
    double curv;
    if (gen.f2) {
      curv = gen.f2(t);
    } else {
      double h = 1e-5 * std::max(1.0, t);
      curv = (gen.f1(t + h) - gen.f1(t - h)) / (2.0 * h);
    }
    if (!(curv > 0.0)) {
      throw ValidationError("generator '" + gen.name +
                            "': f''(t) <= 0 at t=" + std::to_string(t));
    }
  }
}

std::vector<FGenerator> catalog() {
  std::vector<FGenerator> gens;

  FGenerator td;
  td.name = "td";
  td.f = [](double t) { return (1.0 - t) * (1.0 - t) / (2.0 * (1.0 + t)); };
  td.f1 = [](double t) { return (t * t + 2.0 * t - 3.0) / (2.0 * (1.0 + t) * (1.0 + t)); };
  td.f2 = [](double t) { double u = 1.0 + t; return 4.0 / (u * u * u); };
  td.f_at_0 = 0.5;
  td.slope_at_inf = 0.5;
  gens.push_back(std::move(td));

  FGenerator kl;
  kl.name = "kl";
  kl.f = [](double t) { return t * std::log(t); };
  kl.f1 = [](double t) { return std::log(t) + 1.0; };
  kl.f2 = [](double t) { return 1.0 / t; };
  kl.f_at_0 = 0.0;  // t log t -> 0
  kl.slope_at_inf = kInf;
  gens.push_back(std::move(kl));

  FGenerator h2;
  h2.name = "hellinger2";
  h2.f = [](double t) { double s = std::sqrt(t) - 1.0; return 0.5 * s * s; };
  h2.f1 = [](double t) { return 0.5 - 0.5 / std::sqrt(t); };
  h2.f2 = [](double t) { return 0.25 / (t * std::sqrt(t)); };
  h2.f_at_0 = 0.5;
  h2.slope_at_inf = 0.5;
  gens.push_back(std::move(h2));

  FGenerator js;
  js.name = "js";
  js.f = [](double t) {
    return 0.5 * t * std::log(t) - 0.5 * (1.0 + t) * std::log(0.5 * (1.0 + t));
  };
  js.f1 = [](double t) { return 0.5 * std::log(2.0 * t / (1.0 + t)); };
  js.f2 = [](double t) { return 0.5 / (t * (1.0 + t)); };
  js.f_at_0 = 0.5 * std::log(2.0);
  js.slope_at_inf = 0.5 * std::log(2.0);
  gens.push_back(std::move(js));

  return gens;
}

FGenerator catalog_generator(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (key == "td" || key == "triangular") key = "td";
  else if (key == "hellinger" || key == "h2" || key == "hellinger2") key = "hellinger2";
  else if (key == "js" || key == "jensen-shannon") key = "js";
  else if (key == "kl") key = "kl";
  else throw ValidationError("unknown generator '" + name + "'");
  for (auto& g : catalog()) {
    if (g.name == key) return g;
  }
  throw ValidationError("unknown generator '" + name + "'");  // unreachable
}

void validate(const DiscreteDist& d) {
  if (d.support.empty()) throw ValidationError("distribution: empty support");
  if (d.support.size() != d.mass.size()) {
    throw ValidationError("distribution: support/mass length mismatch");
  }
  for (std::size_t i = 0; i + 1 < d.support.size(); ++i) {
    if (!(d.support[i] < d.support[i + 1])) {
      throw ValidationError("distribution: support not strictly increasing");
    }
  }
  for (double m : d.mass) {
    if (!(m >= 0.0)) throw ValidationError("distribution: negative mass");
  }
  if (std::abs(kahan_sum(d.mass) - 1.0) > 1e-12) {
    throw ValidationError("distribution: masses do not sum to 1");
  }
}

double f_divergence_masses(const FGenerator& gen, std::span<const double> p,
                           std::span<const double> q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double pi = p[i], qi = q[i];
    double term;
    if (qi > 0.0) {
      term = pi > 0.0 ? qi * gen.f(pi / qi) : qi * gen.f_at_0;
    } else {
      if (pi <= 0.0) continue;  // 0*f(0/0) := 0
      term = pi * gen.slope_at_inf;
    }
    if (std::isinf(term)) return kInf;
    acc += term;
  }
  return acc;
}

double f_divergence(const FGenerator& gen, const DiscreteDist& P,
                    const DiscreteDist& Q) {
  validate(P);
  validate(Q);
  if (P.support != Q.support) {
    throw AlignmentError("f_divergence: supports differ; align first");
  }
  return f_divergence_masses(gen, P.mass, Q.mass);
}

double symmetrized_divergence(const FGenerator& gen, const DiscreteDist& P,
                              const DiscreteDist& Q) {
  return 0.5 * (f_divergence(gen, P, Q) + f_divergence(gen, Q, P));
}

Moments moments(const DiscreteDist& d) {
  double mean = 0.0, c = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double y = d.mass[i] * d.support[i] - c;
    double t = mean + y;
    c = (t - mean) - y;
    mean = t;
  }
  double var = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double dx = d.support[i] - mean;
    var += d.mass[i] * dx * dx;
  }
  return {mean, var};
}

std::pair<DiscreteDist, DiscreteDist> align_supports(const DiscreteDist& P,
                                                     const DiscreteDist& Q) {
  validate(P);
  validate(Q);
  std::vector<double> merged;
  merged.reserve(P.size() + Q.size());
  std::merge(P.support.begin(), P.support.end(), Q.support.begin(),
             Q.support.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  auto spread = [&](const DiscreteDist& d) {
    std::vector<double> m(merged.size(), 0.0);
    std::size_t j = 0;
    for (std::size_t i = 0; i < merged.size(); ++i) {
      if (j < d.size() && d.support[j] == merged[i]) m[i] = d.mass[j++];
    }
    return m;
  };
  return {DiscreteDist(merged, spread(P)), DiscreteDist(merged, spread(Q))};
}

std::pair<DiscreteDist, DiscreteDist> binary_pair(double t, double x_lo,
                                                  double x_hi) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("binary_pair: t outside [0,1]");
  if (!(x_lo < x_hi)) throw ValidationError("binary_pair: x_lo must be < x_hi");
  double lo = 0.5 * (1.0 - t), hi = 0.5 * (1.0 + t);
  return {DiscreteDist({x_lo, x_hi}, {lo, hi}),
          DiscreteDist({x_lo, x_hi}, {hi, lo})};
}

double triangular_discrimination(const DiscreteDist& P, const DiscreteDist& Q) {
  validate(P);
  validate(Q);
  if (P.support != Q.support) {
    throw AlignmentError("triangular_discrimination: supports differ; align first");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    double p = P.mass[i], q = Q.mass[i];
    double s = p + q;
    if (s <= 0.0) continue;
    double d = p - q;
    acc += d * d / s;
  }
  return 0.5 * acc;
}

double total_variation(const DiscreteDist& P, const DiscreteDist& Q) {
  validate(P);
  validate(Q);
  if (P.support != Q.support) {
    throw AlignmentError("total_variation: supports differ; align first");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    acc += std::abs(P.mass[i] - Q.mass[i]);
  }
  return 0.5 * acc;
}

double bhattacharyya_coefficient(const DiscreteDist& P, const DiscreteDist& Q) {
  validate(P);
  validate(Q);
  if (P.support != Q.support) {
    throw AlignmentError("bhattacharyya_coefficient: supports differ; align first");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    acc += std::sqrt(P.mass[i] * Q.mass[i]);
  }
  return acc;
}

}  // namespace divbound
