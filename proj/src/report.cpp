#include "cec/report.hpp"

#include "cec/error.hpp"

namespace cec {

Json to_json(const Cycle& c) { return Json(c.vertices); }

Json to_json(const CycleFamily& f) {
  Json cycles = Json::array();
  Json lengths = Json::array();
  for (const auto& c : f.cycles) {
    cycles.push_back(to_json(c));
    lengths.push_back(c.length());
  }
  return Json{{"cycles", cycles}, {"lengths", lengths}, {"r", f.r}, {"disjoint", f.disjoint}};
}

Json to_json(const Params& p) {
  Json j{{"k", p.k},
         {"eps", p.eps},
         {"mode", std::string(mode_name(p.mode))},
         {"s", p.s()},
         {"heavy_threshold", p.heavy_fraction()},
         {"budget", p.budget}};
  if (p.depth_budget) j["depth_budget"] = *p.depth_budget;
  if (p.degree_cap_divisor) j["degree_cap_divisor"] = *p.degree_cap_divisor;
  return j;
}

Json to_json(const SearchReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back(Json{{"name", s.name}, {"detail", s.detail}, {"ok", s.ok}});
  Json j{{"schema", kReportSchema},
         {"outcome", r.success ? "success" : "failure"},
         {"stages", stages},
         {"params", to_json(r.params)},
         {"budget_exhausted", r.budget_exhausted}};
  if (r.family) {
    Json fam = to_json(*r.family);
    j["family"] = fam["cycles"];
    j["lengths"] = fam["lengths"];
    j["r"] = fam["r"];
    j["disjoint"] = true;
  } else {
    j["family"] = nullptr;
    j["r"] = nullptr;
  }
  return j;
}

Json to_json(const OracleResult& r, int k) {
  Json witness = nullptr;
  if (r.witness) witness = to_json(*r.witness)["cycles"];
  Json j{{"schema", kReportSchema},
         {"outcome", r.exists ? "success" : "failure"},
         {"oracle", Json{{"exists", r.exists}, {"witness", witness}}},
         {"k", k},
         {"r_range", Json::array({r.r_min, r.r_max})},
         {"nodes_explored", r.nodes_explored}};
  if (r.witness) {
    j["family"] = witness;
    j["r"] = r.witness->r;
    j["disjoint"] = true;
  } else {
    j["family"] = nullptr;
    j["r"] = nullptr;
  }
  return j;
}

Json engine_report_json(const std::optional<CycleFamily>& f, const EngineTrace& tr, int k, double eps,
                        const std::string& failure) {
  Json j{{"schema", kReportSchema},
         {"outcome", f ? "success" : "failure"},
         {"params", Json{{"k", k}, {"eps", eps}}},
         {"engine",
          Json{{"branch", tr.branch},
               {"root", tr.root},
               {"level", tr.level},
               {"refinements", tr.refinements},
               {"roots_tried", tr.roots_tried},
               {"depth_budget", tr.depth_budget},
               {"growth_levels_checked", tr.growth_levels_checked}}}};
  if (f) {
    Json fam = to_json(*f);
    j["family"] = fam["cycles"];
    j["lengths"] = fam["lengths"];
    j["r"] = fam["r"];
    j["disjoint"] = false;
  } else {
    j["family"] = nullptr;
    j["r"] = nullptr;
    j["reason"] = failure;
  }
  return j;
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"schema", kReportSchema}, {"outcome", "error"}, {"error", Json{{"code", code}, {"message", message}}}};
}

namespace {

VertexList vertex_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, std::string(what) + " must be an array");
  VertexList out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::InvalidInput, std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Verdict family_verdict(const Graph& g, const Json& cycles, bool disjoint) {
  if (!cycles.is_array()) throw Error(Errc::InvalidInput, "family must be an array of cycles");
  std::vector<Cycle> cs;
  for (const auto& c : cycles) cs.push_back(Cycle{vertex_list(c, "cycle")});
  CycleFamily f = make_family(std::move(cs), disjoint);
  return verify_certificate(g, f);
}

}  // namespace

Verdict verify_json_certificate(const Graph& g, const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::InvalidInput, "certificate must be a JSON object");
  if (doc.contains("kind")) {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "cycle") return verify_certificate(g, Cycle{vertex_list(doc.at("vertices"), "vertices")});
    if (kind == "path") return verify_certificate(g, PathCert{vertex_list(doc.at("vertices"), "vertices")});
    if (kind == "kss") {
      KssCert k{vertex_list(doc.at("side_a"), "side_a"), vertex_list(doc.at("side_b"), "side_b"), 0};
      k.s = static_cast<int>(k.side_a.size());
      return verify_certificate(g, k);
    }
    if (kind == "theta") {
      VertexList chord = vertex_list(doc.at("chord"), "chord");
      if (chord.size() != 2) throw Error(Errc::InvalidInput, "chord needs two vertices");
      return verify_certificate(g, ThetaGraph{Cycle{vertex_list(doc.at("cycle"), "cycle")}, chord[0], chord[1]});
    }
    if (kind == "family")
      return family_verdict(g, doc.at("cycles"), doc.value("disjoint", true));
    throw Error(Errc::InvalidInput, "unknown certificate kind '" + kind + "'");
  }
  if (doc.contains("family")) {
    if (doc.at("family").is_null()) return Verdict::fail("report carries no family");
    return family_verdict(g, doc.at("family"), doc.value("disjoint", true));
  }
  throw Error(Errc::InvalidInput, "document has neither 'kind' nor 'family'");
}

}  // namespace cec
