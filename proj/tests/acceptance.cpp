// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "dlat/suites.hpp"

int main(int argc, char** argv) {
  dlat::SuiteOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);

  int failed = 0, index = 0;
  for (const std::string& name : dlat::suite_names()) {
    dlat::SuiteResult r = dlat::run_suite(name, opts);
    std::printf("[%s] %2d %-20s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", ++index, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d/%d criteria passed (seed %llu)\n", index - failed, index,
              static_cast<unsigned long long>(opts.seed));
  return failed == 0 ? 0 : 1;
}
