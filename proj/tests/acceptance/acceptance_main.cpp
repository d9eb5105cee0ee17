// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one PASS/FAIL line per criterion.
//
//   acceptance_tests --cli <path-to-crosskiss-binary> [--seed N]

#include <cstdio>
#include <cstring>
#include <string>

#include "crosskiss/reproduce.hpp"

int main(int argc, char** argv) {
  crosskiss::ReproduceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) {
      options.cli_path = argv[++i];
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: acceptance_tests --cli <crosskiss binary> [--seed N]\n");
      return 2;
    }
  }

  crosskiss::ReproductionReport report = crosskiss::run_reproduction(options);

  for (const auto& c : report.criteria) {
    std::printf("%s criterion %d (%s) [%.2fs]\n", c.pass ? "PASS" : "FAIL", c.number, c.name.c_str(),
                c.seconds);
    for (const auto& item : c.items) {
      if (!item.pass)
        std::printf("       failed: %s — expected %s, computed %s\n", item.label.c_str(),
                    item.expected.c_str(), item.computed.c_str());
    }
  }
  std::printf("%s\n", report.all_pass ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
  return report.all_pass ? 0 : 1;
}
