#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "acceptance/checks.hpp"

int main(int argc, char** argv) {
  grouprep::acceptance::CheckConfig cfg;
  CLI::App app{"acceptance checks"};
  app.add_option("--max-lm", cfg.max_lm)->check(CLI::Range(0, 8));
  app.add_option("--order", cfg.order)->check(CLI::Range(1, 40));
  app.add_option("--seed", cfg.seed);
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  double total = 0;
  for (const auto& r : grouprep::acceptance::run_all(cfg)) {
    std::cout << grouprep::acceptance::format_line(r) << std::endl;
    failed += !r.pass;
    total += r.seconds;
  }
  std::printf("%d of 11 criteria failed, %.1f s total\n", failed, total);
  return failed ? 1 : 0;
}
