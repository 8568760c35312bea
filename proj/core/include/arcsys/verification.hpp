#pragma once

// The acceptance suite shared by the `verify` command and the acceptance test.

#include <functional>
#include <string>
#include <vector>

#include "arcsys/classification.hpp"
#include "arcsys/enumeration.hpp"
#include "arcsys/twist.hpp"

namespace arcsys {

enum class CheckStatus { pass, fail, reconciled };
const char* status_name(CheckStatus s);

struct CheckEntry {
  std::string id;
  int criterion = 0;  // 1..12 for acceptance criteria, 0 for supporting checks
  std::string statement;
  CheckStatus status = CheckStatus::fail;
  std::string details;
};

struct VerificationOptions {
  int bound = 6;
  int check_bound = 12;
  std::string reference_path;
  // Called after each check completes.
  std::function<void(const CheckEntry&)> on_check;
};

struct VerificationReport {
  int bound = 6;
  int check_bound = 12;
  std::vector<CheckEntry> checks;
  ReconciliationReport reconciliation;
  std::vector<OrbitClass> zero_classes;
  std::vector<OrbitClass> one_classes;
  bool passed() const;
};

VerificationReport run_verification(const VerificationOptions& options);
std::string verification_report_to_json(const VerificationReport& report);

}  // namespace arcsys
