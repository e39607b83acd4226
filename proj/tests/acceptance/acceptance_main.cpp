// Runs every registered suite at its budget and prints one line per criterion.

#include <cstdio>
#include <string>

#include "suites.hpp"

int main(int argc, char** argv) {
  using namespace hellylat::cli;
  SuiteConfig cfg;
  if (argc > 1) cfg.seed = std::stoull(argv[1]);

  int failures = 0;
  int index = 0;
  for (const auto& s : registry()) {
    ++index;
    const auto r = run_one(s, cfg);
    const double seconds = static_cast<double>(r.millis) / 1000.0;
    const bool in_budget = seconds <= s.budget_seconds;
    const bool ok = r.status == Status::pass && in_budget;
    if (!ok) ++failures;
    std::printf("%s %2d. %-26s %-8s %8.3fs / %4.0fs  %s\n", ok ? "PASS" : "FAIL", index, s.name.c_str(),
                status_name(r.status).c_str(), seconds, s.budget_seconds, s.theorem.c_str());
    if (!ok) std::printf("      witness: %s\n", r.witness.dump().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
