#include "semirange/report.hpp"

#include <algorithm>
#include <cstdio>

namespace semirange {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.applicable || c.passed; });
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

CheckRecord& VerificationReport::add(std::string name, std::string anchor, double measured, double tolerance,
                                     std::string detail) {
  checks.push_back({std::move(name), std::move(anchor), measured, tolerance, measured <= tolerance, true,
                    std::move(detail)});
  return checks.back();
}

CheckRecord& VerificationReport::skip(std::string name, std::string anchor, std::string reason) {
  checks.push_back({std::move(name), std::move(anchor), 0.0, 0.0, true, false, std::move(reason)});
  return checks.back();
}

void write_report(std::ostream& os, const VerificationReport& report) {
  char buf[128];
  for (const auto& c : report.checks) {
    os << (!c.applicable ? "SKIP" : c.passed ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.anchor << "]";
    if (c.applicable) {
      std::snprintf(buf, sizeof buf, "  measured=%.6g tol=%.6g", c.measured, c.tolerance);
      os << buf;
    }
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
}

}  // namespace semirange
