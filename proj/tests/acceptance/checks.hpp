#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grouprep::acceptance {

struct CheckConfig {
  int max_lm = 4;  // lambda + mu bound for the exact basis checks
  int order = 10;  // quadrature order
  int gf_degree = 6;
  uint64_t seed = 20240611;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

std::vector<CheckResult> run_all(const CheckConfig& cfg);
std::string format_line(const CheckResult& r);

}  // namespace grouprep::acceptance
