#include "report.hpp"

#include <cstdio>
#include <iostream>

namespace bform::cli {

Json report_skeleton(const std::string& command, const std::vector<std::string>& inputs) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["input"] = inputs;
  return j;
}

void fill_report(Json& report, const StructureReport& r) {
  report["verdict"] = r.accept ? "accept" : "reject";
  if (!r.kind.empty()) report["kind"] = r.kind;
  if (r.type) {
    report["type"] = *r.type;
    if (r.formal_type) report["formal_type"] = true;
  }
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    conds.push_back(jc);
  }
  report["conditions"] = conds;
  if (!r.data.empty()) {
    Json data;
    for (const auto& [k, v] : r.data) data[k] = v;
    report["data"] = data;
  }
  if (!r.notes.empty()) report["notes"] = r.notes;
}

int emit(const Json& report, const ReportOptions& opt, double elapsed_ms) {
  Json out = report;
  if (opt.timing) out["elapsed_ms"] = elapsed_ms;
  std::string verdict = out.value("verdict", "accept");
  if (opt.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << out["command"].get<std::string>() << ": " << verdict << "\n";
    if (out.contains("kind"))
      std::cout << "  kind: " << out["kind"].get<std::string>() << "\n";
    if (out.contains("type")) {
      std::cout << "  type: " << out["type"].get<int>();
      if (out.contains("formal_type")) std::cout << " (formal, no GCS induced)";
      std::cout << "\n";
    }
    if (out.contains("pure")) std::cout << "  pure: " << (out["pure"].get<bool>() ? "yes" : "no") << "\n";
    if (out.contains("rank")) std::cout << "  rank: " << out["rank"].get<std::size_t>() << "\n";
    if (out.contains("isotropic"))
      std::cout << "  isotropic: " << (out["isotropic"].get<bool>() ? "yes" : "no") << "\n";
    if (out.contains("basis"))
      for (const auto& row : out["basis"])
        std::cout << "  basis: " << row.get<std::string>() << "\n";
    if (out.contains("conditions"))
      for (const auto& c : out["conditions"]) {
        std::cout << "  [" << (c["pass"].get<bool>() ? "pass" : "FAIL") << "] "
                  << c["name"].get<std::string>();
        if (c.contains("witness"))
          std::cout << "  -- " << c["witness"].get<std::string>();
        std::cout << "\n";
      }
    if (out.contains("data"))
      for (auto it = out["data"].begin(); it != out["data"].end(); ++it)
        std::cout << "  " << it.key() << " = " << it.value().get<std::string>() << "\n";
    if (out.contains("result"))
      std::cout << "  result: " << out["result"].get<std::string>() << "\n";
    if (out.contains("notes"))
      for (const auto& n : out["notes"])
        std::cout << "  note: " << n.get<std::string>() << "\n";
  }
  return verdict == "accept" ? kExitAccept : kExitReject;
}

}  // namespace bform::cli
