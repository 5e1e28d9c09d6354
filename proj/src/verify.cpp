#include "divbound/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "divbound/binary.hpp"
#include "divbound/bounds.hpp"
#include "divbound/inequalities.hpp"
#include "divbound/oracle.hpp"
#include "divbound/rng.hpp"
#include "divbound/thermo.hpp"

namespace divbound::acceptance {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tracker {
  bool pass = true;
  double worst = 0.0;

  // requirement: err <= tol
  void bound(double err, double tol) {
    worst = std::max(worst, err);
    if (!(err <= tol)) pass = false;
  }
  void require(bool ok) {
    if (!ok) pass = false;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

double sym(const FGenerator& gen, const DiscreteDist& p, const DiscreteDist& q) {
  return symmetrized_divergence(gen, p, q);
}

DiscreteDist random_dist(Rng& rng, int n) {
  std::vector<double> support(n);
  for (;;) {
    for (auto& x : support) x = rng.uniform(-3.0, 3.0);
    std::sort(support.begin(), support.end());
    bool distinct = true;
    for (int i = 0; i + 1 < n; ++i) {
      if (support[i + 1] - support[i] < 1e-9) distinct = false;
    }
    if (distinct) break;
  }
  return DiscreteDist(support, rng.simplex(n));
}

std::pair<DiscreteDist, DiscreteDist> random_pair(Rng& rng) {
  int n = 2 + static_cast<int>(rng.integer(7));
  DiscreteDist p = random_dist(rng, n);
  DiscreteDist q(p.support, rng.simplex(n));
  return {std::move(p), std::move(q)};
}

// 3-state ring: forward[i] is the rate i -> i+1 (mod 3), backward the reverse
MarkovSystem ring_system(const std::array<double, 3>& forward,
                         const std::array<double, 3>& backward,
                         std::vector<double> p0, double tau, double dt) {
  MarkovSystem sys;
  sys.n_states = 3;
  sys.rates.assign(9, 0.0);
  auto add = [&](int to, int from, double r) {
    sys.rates[to * 3 + from] += r;
    sys.rates[from * 3 + from] -= r;
  };
  for (int i = 0; i < 3; ++i) {
    add((i + 1) % 3, i, forward[i]);
    add(i, (i + 1) % 3, backward[i]);
  }
  sys.p0 = std::move(p0);
  sys.tau = tau;
  sys.dt = dt;
  return sys;
}

// long-horizon relaxation; good to ~1e-13 for the rings used here
std::vector<double> stationary(MarkovSystem sys) {
  sys.p0.assign(sys.n_states, 1.0 / sys.n_states);
  sys.tau = 60.0;
  sys.dt = 1e-3;
  auto traj = evolve(sys);
  auto p = traj.back();
  double sum = 0.0;
  for (double x : p) sum += x;
  for (double& x : p) x /= sum;
  return p;
}

Outcome c1_binary_closed_forms(std::uint64_t) {
  Tracker tr;
  auto gens = catalog();
  for (const auto& gen : gens) {
    auto bd = make_binary(gen);
    for (int i = 1; i <= 99; ++i) {
      double t = i / 100.0;
      double expect;
      if (gen.name == "td") {
        expect = t * t;
      } else if (gen.name == "hellinger2") {
        expect = 1.0 - std::sqrt(1.0 - t * t);
      } else if (gen.name == "js") {
        expect = 0.5 * (1.0 + t) * std::log(1.0 + t) +
                 0.5 * (1.0 - t) * std::log(1.0 - t);
      } else {
        expect = t * std::log((1.0 + t) / (1.0 - t));
      }
      tr.bound(std::abs(bd.g(t) - expect), 1e-12);
    }
  }
  return {tr.pass, "max closed-form error " + fmt(tr.worst)};
}

Outcome c2_condition_certificates(std::uint64_t) {
  Tracker tr;
  double least_margin = 1e300;
  for (const auto& gen : catalog()) {
    auto cert = check_condition(make_binary(gen), 512);
    tr.require(cert.satisfied);
    tr.require(cert.min_margin >= -1e-9);
    tr.require(cert.monotone_ok);
    least_margin = std::min(least_margin, cert.min_margin);
  }
  auto sqrt_bd = BinaryDivergence::from_scalar(
      "sqrt-control", [](double t) { return std::sqrt(t); },
      [](double t) { return 0.5 / std::sqrt(t); },
      [](double t) { return -0.25 / (t * std::sqrt(t)); }, 1.0);
  auto cert = check_condition(sqrt_bd, 512);
  tr.require(!cert.satisfied);
  return {tr.pass, "catalog min margin " + fmt(least_margin) +
                       ", sqrt control satisfied=" +
                       (cert.satisfied ? "true" : "false")};
}

Outcome c3_theorem1_tightness(std::uint64_t) {
  Tracker tr;
  for (const auto& gen : catalog()) {
    auto bd = make_binary(gen);
    for (double d : {0.01, 0.1, 0.25, 0.5, 0.81}) {
      auto res = theorem1_bound(bd, d);
      const auto& [p, q] = *res.attained_pair;
      tr.bound(std::abs(triangular_discrimination(p, q) - d), 1e-12);
      tr.bound(std::abs(sym(gen, p, q) - res.bound_value), 1e-10);
    }
  }
  return {tr.pass, "max attainment error " + fmt(tr.worst)};
}

Outcome c4_theorem1_lower_bound(std::uint64_t seed) {
  Tracker tr;
  Rng rng(seed);
  auto gens = catalog();
  std::vector<BinaryDivergence> bds;
  for (const auto& gen : gens) bds.push_back(make_binary(gen));
  double min_slack = 1e300;
  for (int trial = 0; trial < 1000; ++trial) {
    auto [p, q] = random_pair(rng);
    double root = std::sqrt(triangular_discrimination(p, q));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      double slack = sym(gens[i], p, q) - bds[i].g(root);
      min_slack = std::min(min_slack, slack);
      tr.require(slack >= -1e-10);
    }
  }
  return {tr.pass, "min slack over 1000 pairs x 4 generators " + fmt(min_slack)};
}

Outcome c5_oracle_equivalence(std::uint64_t) {
  Tracker tr;
  for (const auto& gen : catalog()) {
    auto bd = make_binary(gen);
    for (double d : {0.1, 0.25, 0.5}) {
      for (int size : {2, 3}) {
        int resolution = size == 2 ? 200 : 24;
        auto res = min_symmetrized_given_td(gen, d, size, resolution);
        tr.bound(std::abs(res.value - bd.g(std::sqrt(d))), 5e-3);
      }
    }
  }
  return {tr.pass, "max |oracle - g(sqrt(d))| " + fmt(tr.worst)};
}

Outcome c6_theorem2_equal_variance(std::uint64_t seed) {
  Tracker tr;
  Rng rng(seed + 1);
  auto gens = catalog();
  std::vector<BinaryDivergence> bds;
  for (const auto& gen : gens) bds.push_back(make_binary(gen));
  for (int trial = 0; trial < 100; ++trial) {
    // dyadic means/sigmas so the translation checks can demand bit equality
    double m_p = static_cast<double>(static_cast<long>(rng.integer(65)) - 32) / 8.0;
    double m_q = static_cast<double>(static_cast<long>(rng.integer(65)) - 32) / 8.0;
    double sigma = static_cast<double>(1 + rng.integer(16)) / 8.0;
    MomentSpec spec{m_p, sigma, m_q, sigma};

    auto [p, q] = lemma3_pair(spec);
    auto mp = moments(p);
    auto mq = moments(q);
    tr.bound(std::abs(mp.mean - m_p), 1e-10);
    tr.bound(std::abs(mq.mean - m_q), 1e-10);
    tr.bound(std::abs(mp.variance - sigma * sigma), 1e-10);
    tr.bound(std::abs(mq.variance - sigma * sigma), 1e-10);

    double s = theorem2_s(spec);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      tr.bound(std::abs(sym(gens[i], p, q) - bds[i].g(s)), 1e-10);
    }
    for (double shift : {1.0, -2.0, 3.0}) {
      MomentSpec shifted{m_p + shift, sigma, m_q + shift, sigma};
      tr.require(theorem2_s(shifted) == s);
    }
  }
  return {tr.pass, "max moment/attainment error " + fmt(tr.worst)};
}

Outcome c7_td_inequalities(std::uint64_t seed) {
  Tracker tr;
  Rng rng(seed + 2);
  for (int trial = 0; trial < 1000; ++trial) {
    auto [p, q] = random_pair(rng);
    auto h = hellinger_td_bound(p, q);
    tr.require(h.slack >= -1e-10);
    tr.require(h.improvement >= -1e-10);
    auto j = js_td_bound(p, q);
    tr.require(j.slack >= -1e-10);
    tr.require(j.improvement >= -1e-10);
  }
  DiscreteDist u({0.0, 1.0}, {0.3, 0.7});
  auto eq_same = bhattacharyya_relation(u, u);
  tr.bound(std::abs(eq_same.slack), 1e-12);
  DiscreteDist a({0.0, 1.0}, {1.0, 0.0});
  DiscreteDist b({0.0, 1.0}, {0.0, 1.0});
  auto eq_disjoint = bhattacharyya_relation(a, b);
  tr.bound(std::abs(eq_disjoint.slack), 1e-12);

  auto att = td_two_point_attainment(MomentSpec{0.5, 1.0, -0.5, 2.0});
  tr.bound(std::abs(att.delta - 1.0 / 11.0), 1e-10);
  tr.require(att.matches_s_squared);
  tr.require(att.sedrakyan_equality);
  return {tr.pass, "slacks/improvements nonnegative; delta(1,2,1)=" +
                       fmt(att.delta)};
}

Outcome c8_thermo(std::uint64_t seed) {
  Tracker tr;
  std::ostringstream note;

  // homogeneous biased ring at stationarity
  auto ring = ring_system({2, 2, 2}, {1, 1, 1}, {1.0 / 3, 1.0 / 3, 1.0 / 3},
                          1.0, 1e-3);
  auto rep = thermo_report(ring);
  tr.bound(std::abs(rep.sigma - std::log(2.0)), 1e-6);
  tr.bound(std::abs(rep.activity - 3.0), 1e-6);
  tr.bound(std::abs(rep.sigma_ps - 2.0 / 3.0), 1e-6);
  tr.require(std::abs(rep.bound_slack) <= 1e-8);
  note << "ring sigma err " << fmt(std::abs(rep.sigma - std::log(2.0)));

  // identity gaps shrink as O(dt^2): off-stationary start, dt halved twice
  double prev_kl = 0.0, prev_td = 0.0;
  for (int level = 0; level < 3; ++level) {
    double dt = 2e-3 / (1 << level);
    auto sys = ring_system({2, 2, 2}, {1, 1, 1}, {0.5, 0.3, 0.2}, 1.0, dt);
    auto r = thermo_report(sys);
    if (level > 0) {
      double ratio_kl = prev_kl / r.kl_identity_gap;
      double ratio_td = prev_td / r.td_identity_gap;
      tr.require(ratio_kl > 3.0 && ratio_kl < 5.0);
      tr.require(ratio_td > 3.0 && ratio_td < 5.0);
      if (level == 1) note << ", gap ratios " << fmt(ratio_kl) << "/" << fmt(ratio_td);
    }
    prev_kl = r.kl_identity_gap;
    prev_td = r.td_identity_gap;
  }

  // heterogeneous ring: strictly positive slack at stationarity
  auto hetero = ring_system({5, 2, 3}, {1, 1, 1}, {1.0 / 3, 1.0 / 3, 1.0 / 3},
                            1.0, 1e-3);
  hetero.p0 = stationary(hetero);
  auto hrep = thermo_report(hetero);
  tr.require(hrep.bound_slack > 1e-6);
  note << ", hetero slack " << fmt(hrep.bound_slack);

  // randomized systems: the bound itself
  Rng rng(seed + 3);
  double min_slack = 1e300;
  for (int trial = 0; trial < 100; ++trial) {
    MarkovSystem sys;
    sys.n_states = 3 + static_cast<int>(rng.integer(3));
    int n = sys.n_states;
    sys.rates.assign(n * n, 0.0);
    for (int to = 0; to < n; ++to) {
      for (int from = 0; from < n; ++from) {
        if (to == from) continue;
        double r = rng.uniform(0.1, 5.0);
        sys.rates[to * n + from] = r;
        sys.rates[from * n + from] -= r;
      }
    }
    sys.p0 = rng.simplex(n);
    sys.tau = 1.0;
    sys.dt = 1e-3;
    auto rrep = thermo_report(sys);
    min_slack = std::min(min_slack, rrep.bound_slack);
    tr.require(rrep.bound_slack >= -1e-8);
  }
  note << ", min random slack " << fmt(min_slack);
  return {tr.pass, note.str()};
}

Outcome c9_inverse_round_trip(std::uint64_t) {
  Tracker tr;
  for (const auto& gen : catalog()) {
    auto bd = make_binary(gen);
    double tmax = bd.g(0.99);
    for (int i = 0; i <= 64; ++i) {
      double target = tmax * i / 64.0;
      tr.bound(std::abs(bd.g(inverse_G(bd, target)) - target), 1e-10);
    }
  }
  return {tr.pass, "max round-trip error " + fmt(tr.worst)};
}

}  // namespace

bool run_all(std::ostream& out, std::uint64_t seed) {
  struct Item {
    const char* name;
    std::function<Outcome(std::uint64_t)> fn;
  };
  const std::vector<Item> items = {
      {"C1 binary closed forms", c1_binary_closed_forms},
      {"C2 condition certificates", c2_condition_certificates},
      {"C3 theorem-1 tightness", c3_theorem1_tightness},
      {"C4 theorem-1 lower bound", c4_theorem1_lower_bound},
      {"C5 oracle equivalence", c5_oracle_equivalence},
      {"C6 theorem-2 equal variances", c6_theorem2_equal_variance},
      {"C7 triangular-discrimination inequalities", c7_td_inequalities},
      {"C8 thermo identities and bound", c8_thermo},
      {"C9 inverse round trip", c9_inverse_round_trip},
  };
  bool all = true;
  for (const auto& item : items) {
    Outcome oc;
    try {
      oc = item.fn(seed);
    } catch (const std::exception& e) {
      oc = {false, std::string("exception: ") + e.what()};
    }
    all = all && oc.pass;
    out << (oc.pass ? "[PASS] " : "[FAIL] ") << item.name << " — "
        << oc.detail << "\n";
  }
  return all;
}

}  // namespace divbound::acceptance
