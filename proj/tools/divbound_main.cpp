#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "divbound/binary.hpp"
#include "divbound/bounds.hpp"
#include "divbound/inequalities.hpp"
#include "divbound/json_io.hpp"
#include "divbound/oracle.hpp"
#include "divbound/thermo.hpp"
#include "divbound/verify.hpp"

namespace {

using namespace divbound;

std::string csv_num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15e", v);
  return buf;
}

std::string read_stdin() {
  std::istreambuf_iterator<char> begin(std::cin), end;
  return std::string(begin, end);
}

// flag value "-" pulls the JSON document from stdin
std::string resolve_json_arg(const std::string& value) {
  if (value == "-") return read_stdin();
  return value;
}

struct GlobalOpts {
  std::string log_base = "e";
  std::uint64_t seed = acceptance::kDefaultSeed;
  double tol = 1e-9;

  double scale() const {
    if (log_base == "2") return 1.0 / std::log(2.0);
    if (log_base == "10") return 1.0 / std::log(10.0);
    return 1.0;
  }
};

void emit_bound_curves(int points) {
  auto gens = catalog();
  std::vector<BinaryDivergence> bds;
  for (const auto& gen : gens) bds.push_back(make_binary(gen));
  std::cout << "x,g_td,g_kl,g_hellinger2,g_js,"
               "t1_td,t1_kl,t1_hellinger2,t1_js,"
               "hellinger_rhs,hellinger_prior,js_rhs,js_prior\n";
  for (int i = 0; i <= points; ++i) {
    double x = static_cast<double>(i) / points;
    double root = std::sqrt(x);
    std::cout << csv_num(x);
    for (auto& bd : bds) std::cout << ',' << csv_num(bd.g(x));
    for (auto& bd : bds) std::cout << ',' << csv_num(bd.g(root));
    double h_rhs = x / (1.0 + std::sqrt(std::max(0.0, 1.0 - x)));
    double js_rhs = std::log(2.0) - binary_entropy(root);
    std::cout << ',' << csv_num(h_rhs) << ',' << csv_num(0.5 * x) << ','
              << csv_num(js_rhs) << ',' << csv_num(0.5 * x) << '\n';
  }
}

void emit_ineq_sweep(const std::string& name, int points) {
  std::cout << "t,lhs,rhs,prior_rhs\n";
  for (int i = 0; i <= points; ++i) {
    double t = static_cast<double>(i) / points;
    auto [p, q] = binary_pair(t);
    IneqReport rep;
    if (name == "hellinger") rep = hellinger_td_bound(p, q);
    else if (name == "js") rep = js_td_bound(p, q);
    else rep = bhattacharyya_relation(p, q);
    std::cout << csv_num(t) << ',' << csv_num(rep.lhs) << ','
              << csv_num(rep.rhs) << ',' << csv_num(rep.prior_rhs) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight lower bounds for symmetric f-divergences via binary divergences"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--log-base", g.log_base, "Output log base for divergence values")
      ->check(CLI::IsMember({"e", "2", "10"}));
  app.add_option("--seed", g.seed, "Seed for randomized sweeps");
  app.add_option("--tol", g.tol, "Condition-certificate tolerance");
  bool as_json = true, as_csv = false;
  app.add_flag("--json", as_json, "JSON output (default)");
  app.add_flag("--csv", as_csv, "CSV output where supported");

  std::string gen_name, dist_p, dist_q, ineq_name = "hellinger", system_json,
      trace_csv, sweep_name = "hellinger";
  double delta = 0.0, tv = 0.0, mp = 0.0, sp = 0.0, mq = 0.0, sq = 0.0,
         sigma = 0.0;
  int grid = 512, points = 99, support = 2, resolution = 200;

  auto* cmd_condition = app.add_subcommand("condition", "Certificate for (1/t)g'(t) non-decreasing");
  cmd_condition->add_option("generator", gen_name)->required();
  cmd_condition->add_option("--grid", grid, "Grid size (>= 100)");

  auto* cmd_t1 = app.add_subcommand("t1", "Bound under fixed triangular discrimination");
  cmd_t1->add_option("generator", gen_name)->required();
  cmd_t1->add_option("--delta", delta, "Triangular discrimination in [0,1]")->required();

  auto* cmd_t2 = app.add_subcommand("t2", "Bound under fixed means and variances");
  cmd_t2->add_option("generator", gen_name)->required();
  cmd_t2->add_option("--mp", mp)->required();
  cmd_t2->add_option("--sp", sp)->required();
  cmd_t2->add_option("--mq", mq)->required();
  cmd_t2->add_option("--sq", sq)->required();

  auto* cmd_tv = app.add_subcommand("tv", "Bound under fixed total variation");
  cmd_tv->add_option("generator", gen_name)->required();
  cmd_tv->add_option("--tv", tv, "Total variation in [0,1]")->required();

  auto* cmd_ineq = app.add_subcommand("ineq", "Triangular-discrimination inequalities");
  cmd_ineq->add_option("inequality", ineq_name, "hellinger|bhattacharyya|js|sweep")->required();
  cmd_ineq->add_option("--dist-p", dist_p, "Distribution JSON or '-' for stdin");
  cmd_ineq->add_option("--dist-q", dist_q, "Distribution JSON or '-' for stdin");
  cmd_ineq->add_option("--name", sweep_name, "Inequality for sweep mode");
  cmd_ineq->add_option("--points", points, "Sweep rows");

  auto* cmd_oracle = app.add_subcommand("oracle", "Brute-force minimization cross-checks");
  auto* cmd_oracle_td = cmd_oracle->add_subcommand("td", "Constrained TD oracle");
  cmd_oracle_td->add_option("generator", gen_name)->required();
  cmd_oracle_td->add_option("--delta", delta)->required();
  cmd_oracle_td->add_option("--support", support, "Support size (2..4)");
  cmd_oracle_td->add_option("--resolution", resolution, "Simplex grid resolution");
  auto* cmd_oracle_mo = cmd_oracle->add_subcommand("moments", "Moment-constrained oracle");
  cmd_oracle_mo->add_option("generator", gen_name)->required();
  cmd_oracle_mo->add_option("--mp", mp)->required();
  cmd_oracle_mo->add_option("--mq", mq)->required();
  cmd_oracle_mo->add_option("--sigma", sigma, "Common standard deviation")->required();
  cmd_oracle_mo->add_option("--support", support, "Support size (2 or 3)");
  cmd_oracle_mo->add_option("--resolution", resolution, "Support grid resolution");

  auto* cmd_thermo = app.add_subcommand("thermo", "Markov jump process entropy-production report");
  cmd_thermo->add_option("--system", system_json, "System JSON or '-' for stdin")->required();
  cmd_thermo->add_option("--trace-csv", trace_csv, "Write per-step rates CSV to this path");

  auto* cmd_sweep = app.add_subcommand("sweep", "CSV of bound curves over [0,1]");
  cmd_sweep->add_option("--points", points, "Rows (plus the x=0 row)");

  auto* cmd_verify = app.add_subcommand("verify", "Run the full acceptance suite");

  // global flags are accepted after the subcommand as well
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  if (as_csv && !cmd_sweep->parsed() && !cmd_ineq->parsed()) {
    std::cerr << "note: --csv applies to sweep outputs; emitting JSON\n";
  }
  (void)as_json;

  const double scale = g.scale();
  try {
    if (cmd_condition->parsed()) {
      auto cert = check_condition(make_binary(catalog_generator(gen_name)),
                                  grid, g.tol);
      std::cout << jsonio::to_json(cert, catalog_generator(gen_name).name, scale)
                << "\n";
      return 0;
    }
    if (cmd_t1->parsed()) {
      auto res = theorem1_bound(make_binary(catalog_generator(gen_name)), delta);
      std::cout << jsonio::to_json(res, scale) << "\n";
      return 0;
    }
    if (cmd_t2->parsed()) {
      auto res = theorem2_bound(make_binary(catalog_generator(gen_name)),
                                MomentSpec{mp, sp, mq, sq});
      std::cout << jsonio::to_json(res, scale) << "\n";
      return 0;
    }
    if (cmd_tv->parsed()) {
      auto res = tv_bound(make_binary(catalog_generator(gen_name)), tv);
      std::cout << jsonio::to_json(res, scale) << "\n";
      return 0;
    }
    if (cmd_ineq->parsed()) {
      if (ineq_name == "sweep") {
        emit_ineq_sweep(sweep_name, points);
        return 0;
      }
      if (dist_p.empty() || dist_q.empty()) {
        std::cerr << "ineq " << ineq_name
                  << " requires --dist-p and --dist-q\n";
        return 2;
      }
      std::string p_text, q_text;
      if (dist_p == "-" && dist_q == "-") {
        // one stdin document holding both distributions
        nlohmann::json both = nlohmann::json::parse(read_stdin());
        p_text = both.at("p").dump();
        q_text = both.at("q").dump();
      } else {
        p_text = resolve_json_arg(dist_p);
        q_text = resolve_json_arg(dist_q);
      }
      DiscreteDist p_raw = jsonio::dist_from_json(p_text);
      DiscreteDist q_raw = jsonio::dist_from_json(q_text);
      auto [p, q] = align_supports(p_raw, q_raw);
      IneqReport rep;
      if (ineq_name == "hellinger") rep = hellinger_td_bound(p, q);
      else if (ineq_name == "bhattacharyya") rep = bhattacharyya_relation(p, q);
      else if (ineq_name == "js") rep = js_td_bound(p, q);
      else {
        std::cerr << "unknown inequality '" << ineq_name << "'\n";
        return 2;
      }
      std::cout << jsonio::to_json(rep, scale) << "\n";
      return 0;
    }
    if (cmd_oracle_td->parsed()) {
      auto gen = catalog_generator(gen_name);
      auto res = min_symmetrized_given_td(gen, delta, support, resolution);
      double closed = make_binary(gen).g(std::sqrt(delta));
      std::cout << jsonio::to_json(res, closed, scale) << "\n";
      return 0;
    }
    if (cmd_oracle_mo->parsed()) {
      auto gen = catalog_generator(gen_name);
      MomentSpec spec{mp, sigma, mq, sigma};
      auto res = min_symmetrized_given_moments(gen, spec, support, resolution);
      double closed = make_binary(gen).g(theorem2_s(spec));
      std::cout << jsonio::to_json(res, closed, scale) << "\n";
      return 0;
    }
    if (cmd_thermo->parsed()) {
      auto sys = jsonio::system_from_json(resolve_json_arg(system_json));
      std::vector<ThermoTraceRow> trace;
      auto rep = thermo_report(sys, trace_csv.empty() ? nullptr : &trace);
      if (!trace_csv.empty()) {
        std::ofstream out(trace_csv);
        if (!out) {
          std::cerr << "cannot write " << trace_csv << "\n";
          return 2;
        }
        out << "t,sigma_rate,activity_rate,sigma_ps_rate\n";
        for (const auto& row : trace) {
          out << csv_num(row.t) << ',' << csv_num(row.sigma_rate) << ','
              << csv_num(row.activity_rate) << ','
              << csv_num(row.sigma_ps_rate) << '\n';
        }
      }
      std::cout << jsonio::to_json(rep) << "\n";
      return 0;
    }
    if (cmd_sweep->parsed()) {
      emit_bound_curves(points);
      return 0;
    }
    if (cmd_verify->parsed()) {
      return acceptance::run_all(std::cout, g.seed) ? 0 : 1;
    }
  } catch (const ConditionError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << jsonio::to_json(e.certificate, gen_name) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
