#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace chromstream {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // counterexample on failure
};

// Ordered pass/fail entries produced by the verifiers.
struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  nlohmann::json to_json() const {
    nlohmann::json out;
    out["passed"] = passed();
    out["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      out["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return out;
  }
};

}  // namespace chromstream
