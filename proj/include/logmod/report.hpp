#pragma once

#include <functional>

#include "logmod/jsonio.hpp"

namespace logmod {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  Json witness;        // null unless status == Fail
  std::string detail;  // free-form note

  static CheckResult pass(std::string name, std::string detail = "");
  static CheckResult fail(std::string name, Json witness, std::string detail = "");
  static CheckResult skipped(std::string name, std::string detail = "");
};

struct Report {
  Json config = Json::object();
  std::vector<CheckResult> checks;
  Json extra = Json::object();  // orientation flags, scalars, ...
  double timing_seconds = 0.0;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  bool all_passed() const;
  int pass_count() const;
  int fail_count() const;
  // timing is excluded by default so reports stay byte-identical across runs
  Json to_json(bool include_timing = false) const;
  std::string to_text() const;
};

}  // namespace logmod
