#include "bohrlab/report.hpp"

#include <cstdio>

namespace bohrlab::report {

using nlohmann::ordered_json;

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

ordered_json to_json(const verify::VerificationReport& rep) {
  ordered_json j;
  j["functional"] = rep.functional;
  j["family"] = rep.family;
  j["grid"] = {{"a_points", rep.a_points}, {"r_points", rep.r_points}};
  if (!rep.k_values.empty()) j["grid"]["k_values"] = rep.k_values;
  j["tolerance"] = rep.tolerance;
  j["worst_margin"] = rep.worst_margin;
  j["argmax"] = {{"a", rep.argmax.a}, {"r", rep.argmax.r}, {"k", rep.argmax.k},
                 {"theta", rep.argmax.theta}};
  j["pass"] = rep.pass;
  j["radius_provenance"] = rep.radius_provenance;
  j["points"] = rep.points;
  j["flagged"] = rep.flagged;
  return j;
}

ordered_json to_json(const constants::Reproduction& rep) {
  ordered_json j;
  j["id"] = rep.id;
  j["recomputed"] = rep.value;
  j["printed"] = rep.printed;
  j["delta"] = rep.delta;
  j["pass"] = rep.pass;
  j["tolerance"] = rep.tolerance;
  j["converged"] = rep.converged;
  return j;
}

ordered_json to_json(const verify::ProbeResult& probe) {
  ordered_json j;
  j["violated"] = probe.violated;
  j["witness"] = {{"a", probe.a}, {"r", probe.r}, {"k", probe.k}};
  j["margin"] = probe.margin;
  return j;
}

ordered_json to_json(const verify::BoundaryResidual& residual) {
  ordered_json j;
  j["id"] = residual.id;
  j["residual"] = residual.residual;
  j["residual_recomputed"] = residual.residual_recomputed;
  return j;
}

std::string render_document(const std::string& command, ordered_json config_echo,
                            ordered_json results, bool pass) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["config_echo"] = std::move(config_echo);
  doc["results"] = std::move(results);
  doc["pass"] = pass;
  return doc.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<std::pair<double, double>>& rows) {
  std::string out = "param,value\n";
  for (const auto& [param, value] : rows) {
    out += g17(param);
    out += ',';
    out += g17(value);
    out += '\n';
  }
  return out;
}

std::string constants_csv(const std::vector<constants::Reproduction>& rows) {
  std::string out = "id,recomputed,printed,delta,pass\n";
  for (const constants::Reproduction& r : rows) {
    out += r.id;
    out += ',';
    out += g17(r.value);
    out += ',';
    out += g17(r.printed);
    out += ',';
    out += g17(r.delta);
    out += ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

} // namespace bohrlab::report
