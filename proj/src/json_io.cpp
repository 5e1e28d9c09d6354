#include "divbound/json_io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace divbound::jsonio {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15e", v);
  return buf;
}

void JsonWriter::comma() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (need_comma_) out_ += ',';
  need_comma_ = true;
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += '{';
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  comma();
  out_ += '[';
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  comma();
  out_ += '"';
  out_ += k;
  out_ += "\":";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  comma();
  out_ += fmt_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  comma();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(long long v) {
  comma();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  comma();
  out_ += '"';
  out_ += v;  // keys/values here never need escaping
  out_ += '"';
  return *this;
}

namespace {

void write_dist(JsonWriter& w, const DiscreteDist& d) {
  w.begin_object();
  w.key("support").begin_array();
  for (double x : d.support) w.value(x);
  w.end_array();
  w.key("mass").begin_array();
  for (double m : d.mass) w.value(m);
  w.end_array();
  w.end_object();
}

}  // namespace

std::string to_json(const DiscreteDist& d) {
  JsonWriter w;
  write_dist(w, d);
  return w.str();
}

std::string to_json(const ConditionCertificate& cert, const std::string& name,
                    double scale) {
  JsonWriter w;
  w.begin_object();
  w.key("generator").value(name);
  w.key("satisfied").value(cert.satisfied);
  w.key("min_margin").value(cert.min_margin * scale);
  w.key("witness").value(cert.witness);
  w.key("tol").value(cert.tol);
  w.key("monotone_crosscheck").value(cert.monotone_ok);
  w.key("grid_size").value(static_cast<long long>(cert.grid.size()));
  w.key("grid").begin_array();
  for (double t : cert.grid) w.value(t);
  w.end_array();
  w.end_object();
  return w.str();
}

std::string to_json(const BoundResult& res, double scale) {
  JsonWriter w;
  w.begin_object();
  w.key("bound").value(res.bound_value * scale);
  w.key("argument").value(res.argument);
  w.key("tight").value(res.tight);
  w.key("basis").value(res.basis);
  if (res.attained_pair) {
    w.key("attained_p");
    write_dist(w, res.attained_pair->first);
    w.key("attained_q");
    write_dist(w, res.attained_pair->second);
  }
  w.end_object();
  return w.str();
}

std::string to_json(const IneqReport& rep, double scale) {
  JsonWriter w;
  w.begin_object();
  w.key("lhs").value(rep.lhs * scale);
  w.key("rhs").value(rep.rhs * scale);
  w.key("slack").value(rep.slack * scale);
  w.key("prior_rhs").value(rep.prior_rhs * scale);
  w.key("improvement").value(rep.improvement * scale);
  w.end_object();
  return w.str();
}

std::string to_json(const ThermoReport& rep) {
  JsonWriter w;
  w.begin_object();
  w.key("sigma").value(rep.sigma);
  w.key("sigma_ps").value(rep.sigma_ps);
  w.key("activity").value(rep.activity);
  w.key("kl_identity_gap").value(rep.kl_identity_gap);
  w.key("td_identity_gap").value(rep.td_identity_gap);
  w.key("bound_rhs").value(rep.bound_rhs);
  w.key("bound_slack").value(rep.bound_slack);
  w.end_object();
  return w.str();
}

std::string to_json(const OracleResult& res, double closed_form, double scale) {
  JsonWriter w;
  w.begin_object();
  w.key("oracle_value").value(res.value * scale);
  w.key("closed_form_bound").value(closed_form * scale);
  w.key("gap").value((res.value - closed_form) * scale);
  w.key("delta").value(res.delta);
  w.key("best_p");
  write_dist(w, res.best_p);
  w.key("best_q");
  write_dist(w, res.best_q);
  w.end_object();
  return w.str();
}

DiscreteDist dist_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("support") || !j.contains("mass")) {
    throw ValidationError(
        "distribution JSON must be {\"support\":[...],\"mass\":[...]}");
  }
  return DiscreteDist(j["support"].get<std::vector<double>>(),
                      j["mass"].get<std::vector<double>>());
}

MarkovSystem system_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MarkovSystem sys;
  sys.n_states = j.at("n_states").get<int>();
  const auto& r = j.at("rates");
  if (r.is_array() && !r.empty() && r[0].is_array()) {
    for (const auto& row : r) {
      auto vals = row.get<std::vector<double>>();
      sys.rates.insert(sys.rates.end(), vals.begin(), vals.end());
    }
  } else {
    sys.rates = r.get<std::vector<double>>();
  }
  sys.p0 = j.at("p0").get<std::vector<double>>();
  sys.tau = j.at("tau").get<double>();
  sys.dt = j.at("dt").get<double>();
  validate(sys);
  return sys;
}

}  // namespace divbound::jsonio
