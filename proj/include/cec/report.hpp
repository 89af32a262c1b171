#pragma once

#include <json.hpp>

#include "cec/certificate.hpp"
#include "cec/consecutive.hpp"
#include "cec/oracle.hpp"
#include "cec/pipeline.hpp"

namespace cec {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

Json to_json(const Cycle& c);
Json to_json(const CycleFamily& f);
Json to_json(const Params& p);
Json to_json(const SearchReport& r);
Json to_json(const OracleResult& r, int k);
/// Report for the single-family engine (not necessarily disjoint).
Json engine_report_json(const std::optional<CycleFamily>& f, const EngineTrace& trace, int k,
                        double eps, const std::string& failure);
Json error_json(const std::string& code, const std::string& message);

/// Checks a certificate document against g. Accepted shapes:
///   {"kind":"cycle","vertices":[...]}, {"kind":"path","vertices":[...]},
///   {"kind":"kss","side_a":[...],"side_b":[...]},
///   {"kind":"theta","cycle":[...],"chord":[x,y]},
///   {"kind":"family","cycles":[[...],...],"disjoint":bool},
///   or a report carrying "family" (disjoint unless "disjoint": false).
/// Throws InvalidInput on a malformed document.
Verdict verify_json_certificate(const Graph& g, const Json& doc);

}  // namespace cec
