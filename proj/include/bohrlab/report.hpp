#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bohrlab/constants.hpp"
#include "bohrlab/verify.hpp"

namespace bohrlab::report {

// Reports are CI artifacts: fixed key order, shortest round-trip decimals,
// no timing fields, so identical configs produce byte-identical files.
inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json to_json(const verify::VerificationReport& rep);
nlohmann::ordered_json to_json(const constants::Reproduction& rep);
nlohmann::ordered_json to_json(const verify::ProbeResult& probe);
nlohmann::ordered_json to_json(const verify::BoundaryResidual& residual);

// {schema_version, command, config_echo, results, pass} rendered with a
// trailing newline.
std::string render_document(const std::string& command, nlohmann::ordered_json config_echo,
                            nlohmann::ordered_json results, bool pass);

// "param,value" CSV, 17-significant-digit decimals, trailing newline.
std::string sweep_csv(const std::vector<std::pair<double, double>>& rows);

// constants table as CSV: id,recomputed,printed,delta,pass
std::string constants_csv(const std::vector<constants::Reproduction>& rows);

} // namespace bohrlab::report
