#pragma once
// Tiny pass/fail accumulator used by the relation/theorem suites.
#include <sstream>
#include <string>
#include <vector>

namespace cornered {

struct Report {
  int checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
  void absorb(const Report& r, const std::string& prefix = "") {
    checks += r.checks;
    for (auto& f : r.failures) failures.push_back(prefix.empty() ? f : prefix + ": " + f);
  }
  std::string summary() const {
    std::ostringstream os;
    os << (ok() ? "PASS" : "FAIL") << " (" << checks << " checks";
    if (!ok()) os << ", " << failures.size() << " failures; first: " << failures.front();
    os << ")";
    return os.str();
  }
};

}  // namespace cornered
