#pragma once

#include <json.hpp>
#include <string>

#include "bform/structures.hpp"

namespace bform::cli {

using Json = nlohmann::ordered_json;

// Exit codes: 0 accept/success, 1 reject, 2 usage/parse error.
constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;

struct ReportOptions {
  bool json = false;
  bool timing = true;
};

Json report_skeleton(const std::string& command, const std::vector<std::string>& inputs);
void fill_report(Json& report, const StructureReport& r);

/// Prints the report (human summary or JSON) and returns the exit code.
int emit(const Json& report, const ReportOptions& opt, double elapsed_ms);

}  // namespace bform::cli
