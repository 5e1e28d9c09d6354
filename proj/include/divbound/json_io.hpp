#pragma once

#include <string>

#include "divbound/binary.hpp"
#include "divbound/bounds.hpp"
#include "divbound/fgen.hpp"
#include "divbound/inequalities.hpp"
#include "divbound/oracle.hpp"
#include "divbound/thermo.hpp"

namespace divbound::jsonio {

// doubles render as %.15e (16 significant digits); the extended reals
// +inf/-inf/nan render as the JSON strings "inf"/"-inf"/"nan"
std::string fmt_double(double v);

// Minimal deterministic JSON emitter; nlohmann emits shortest-round-trip
// doubles and nulls for infinities, neither of which fits the CLI contract.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(bool v);
  JsonWriter& value(long long v);
  JsonWriter& value(const std::string& v);
  std::string str() const { return out_; }

 private:
  void comma();
  std::string out_;
  bool need_comma_ = false;
  bool after_key_ = false;
};

// scale multiplies divergence-valued fields (the CLI --log-base conversion)
std::string to_json(const DiscreteDist& d);
std::string to_json(const ConditionCertificate& cert, const std::string& name,
                    double scale = 1.0);
std::string to_json(const BoundResult& res, double scale = 1.0);
std::string to_json(const IneqReport& rep, double scale = 1.0);
std::string to_json(const ThermoReport& rep);
std::string to_json(const OracleResult& res, double closed_form,
                    double scale = 1.0);

DiscreteDist dist_from_json(const std::string& text);
MarkovSystem system_from_json(const std::string& text);

}  // namespace divbound::jsonio
