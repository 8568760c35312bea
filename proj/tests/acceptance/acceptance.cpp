// One line per acceptance criterion, then the supporting checks.
// Exit status 0 iff every criterion holds.

#include <cstdio>
#include <iostream>

#include "arcsys/verification.hpp"

int main() {
  arcsys::VerificationOptions opt;
  opt.reference_path = ARCSYS_TEST_REFERENCES;
  arcsys::VerificationReport rep;
  try {
    rep = arcsys::run_verification(opt);
  } catch (const std::exception& e) {
    std::cerr << "acceptance run aborted: " << e.what() << '\n';
    return 1;
  }
  for (const auto& c : rep.checks) {
    const char* verdict = c.status == arcsys::CheckStatus::fail ? "FAIL" : "PASS";
    if (c.criterion > 0)
      std::printf("criterion %2d %s [%s] %s: %s\n", c.criterion, verdict, arcsys::status_name(c.status),
                  c.id.c_str(), c.statement.c_str());
    else
      std::printf("supporting   %s [%s] %s: %s\n", verdict, arcsys::status_name(c.status), c.id.c_str(),
                  c.statement.c_str());
    std::printf("             %s\n", c.details.c_str());
  }
  std::printf("overall %s\n", rep.passed() ? "PASS" : "FAIL");
  return rep.passed() ? 0 : 1;
}
