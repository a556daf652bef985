#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semirange {

/// One verified statement: `measured` is the slack quantity compared with
/// `tolerance` (passed iff measured <= tolerance, unless stated otherwise).
struct CheckRecord {
  std::string name;
  std::string anchor;  // which result the check exercises
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool applicable = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  void append(const VerificationReport& other);
  CheckRecord& add(std::string name, std::string anchor, double measured, double tolerance, std::string detail = {});
  CheckRecord& skip(std::string name, std::string anchor, std::string reason);
};

/// One line per check: `PASS|FAIL|SKIP  name  [anchor]  measured=... tol=...  detail`.
void write_report(std::ostream& os, const VerificationReport& report);

}  // namespace semirange
