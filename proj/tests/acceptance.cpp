// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
// Time budgets per criterion are pinned in suite.cpp; all other comparisons
// are exact.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "suite.hpp"

int main(int argc, char** argv) {
  repdim::suite::SuiteOptions options;
  if (argc > 1) options.filter = std::string(argv[1]);
  if (options.filter && !repdim::suite::known_filter(*options.filter)) {
    std::fprintf(stderr, "unknown criterion: %s\n", argv[1]);
    return 2;
  }
  int failed = 0;
  repdim::suite::run(options, [&](const repdim::suite::CriterionResult& r) {
    for (const auto& row : r.rows)
      if (row.verdict != repdim::suite::Verdict::Pass)
        std::printf("  %s %s: %s (expected %s)\n", to_string(row.verdict).c_str(), row.instance.c_str(),
                    row.computed.c_str(), row.expected.c_str());
    std::printf("%-4s %-5s %s [%.2f s, budget %.0f s]%s\n", r.passed() ? "PASS" : "FAIL", r.criterion.id.c_str(),
                r.criterion.title.c_str(), r.seconds, r.criterion.budget_seconds, r.warned() ? " (with WARN)" : "");
    std::fflush(stdout);
    if (!r.passed()) ++failed;
  });
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
