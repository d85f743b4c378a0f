#pragma once

#include <string>
#include <vector>

#include "kb/equilibrium.hpp"

namespace kb {

struct PropertyResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // residuals / counterexample, empty on pass
};

struct VerifyOptions {
  // Test hook: offsets every h+* evaluation inside the dual-identity suite,
  // so a nonzero value must make that suite fail.
  double perturb_dual = 0.0;
};

// The bundled property suites, also exposed through `kblb verify`.
std::vector<PropertyResult> verify_dual_identity(const VerifyOptions& opts = {});
std::vector<PropertyResult> verify_legendre_oracle();
std::vector<PropertyResult> verify_fv_equivalence();
std::vector<PropertyResult> verify_h_theorem();

std::vector<std::string> verify_suite_names();
std::vector<PropertyResult> run_verify_suites(const std::vector<std::string>& suites,
                                              const VerifyOptions& opts = {});

}  // namespace kb
