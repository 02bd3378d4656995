#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace poskit {

// One checked item inside a command report. `law` holds the formula the item
// verifies, when there is one; `result` carries structured command output.
struct ReportItem {
  std::string name;
  std::string status;  // "pass" | "fail" | "error"
  std::string law;
  std::string witness;
  nlohmann::json result;
  long cases = 0;
};

struct Report {
  std::string command;
  uint64_t seed = 0;
  std::string status;  // "pass" | "fail" | "error"
  std::vector<ReportItem> items;
  double timing_ms = 0.0;
};

inline void finalize_status(Report& r) {
  r.status = "pass";
  for (const auto& it : r.items) {
    if (it.status == "error") {
      r.status = "error";
      return;
    }
    if (it.status == "fail") r.status = "fail";
  }
}

inline int exit_code(const Report& r) {
  if (r.status == "error") return 2;
  if (r.status == "fail") return 1;
  return 0;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : r.items) {
    nlohmann::json j;
    j["name"] = it.name;
    j["status"] = it.status;
    if (!it.law.empty()) j["law"] = it.law;
    if (!it.witness.empty()) j["witness"] = it.witness;
    if (!it.result.is_null()) j["result"] = it.result;
    if (it.cases > 0) j["cases"] = it.cases;
    items.push_back(std::move(j));
  }
  nlohmann::json out;
  out["command"] = r.command;
  out["seed"] = r.seed;
  out["status"] = r.status;
  out["items"] = std::move(items);
  out["timing_ms"] = r.timing_ms;
  return out;
}

}  // namespace poskit
