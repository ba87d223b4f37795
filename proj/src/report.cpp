#include "logmod/report.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace logmod {

CheckResult CheckResult::pass(std::string name, std::string detail) {
  return CheckResult{std::move(name), CheckStatus::Pass, Json(), std::move(detail)};
}

CheckResult CheckResult::fail(std::string name, Json witness, std::string detail) {
  return CheckResult{std::move(name), CheckStatus::Fail, std::move(witness), std::move(detail)};
}

CheckResult CheckResult::skipped(std::string name, std::string detail) {
  return CheckResult{std::move(name), CheckStatus::Skipped, Json(), std::move(detail)};
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

int Report::pass_count() const {
  int n = 0;
  for (const auto& c : checks) n += (c.status == CheckStatus::Pass);
  return n;
}

int Report::fail_count() const {
  int n = 0;
  for (const auto& c : checks) n += (c.status == CheckStatus::Fail);
  return n;
}

namespace {
const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skipped";
  }
}
}  // namespace

Json Report::to_json(bool include_timing) const {
  Json checks_j = Json::array();
  for (const auto& c : checks) {
    Json cj{{"name", c.name}, {"status", status_str(c.status)}};
    if (c.status == CheckStatus::Fail) cj["witness"] = c.witness;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks_j.push_back(cj);
  }
  Json j{{"config", config}, {"checks", checks_j},
         {"passed", pass_count()}, {"failed", fail_count()},
         {"all_passed", all_passed()}};
  if (!extra.empty()) j["extra"] = extra;
  if (include_timing) j["timing_seconds"] = timing_seconds;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.status == CheckStatus::Pass ? "PASS   "
           : c.status == CheckStatus::Fail ? "FAIL   "
                                           : "SKIP   ")
       << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
    if (c.status == CheckStatus::Fail && !c.witness.is_null())
      os << "       witness: " << c.witness.dump() << "\n";
  }
  os << pass_count() << " passed, " << fail_count() << " failed, "
     << (checks.size() - pass_count() - fail_count()) << " skipped\n";
  return os.str();
}

}  // namespace logmod
