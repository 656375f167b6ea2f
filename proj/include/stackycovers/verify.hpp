#pragma once

#include <string>
#include <vector>

#include "stackycovers/oracle.hpp"
#include "stackycovers/sweep.hpp"

namespace stacky {

struct IdentityResult {
  std::string id;
  std::string cite;  // the criterion being cross-checked
  long long checked = 0;
  long long discrepancies = 0;
  std::vector<std::string> samples;  // first few discrepancy descriptions
};

struct VerifyReport {
  std::vector<IdentityResult> identities;

  bool ok() const;
  long long total_checked() const;
  long long total_discrepancies() const;
};

// Identity families checked by cmd_verify, in report order.
std::vector<std::string> verify_identity_names();

// Runs every theorem-backed shortcut against its enumerative oracle over
// the box. `only` restricts to a single identity family by name.
// `mutation` injects a deliberate perturbation into the numbered
// shortcut (1-based position in verify_identity_names()); 0 means none.
// It exists so the negative-control test can show the oracles catch a
// wrong shortcut, and is only reachable from specially built binaries.
VerifyReport run_verify(const SweepBox& box, const std::string& only = "",
                        ExecMode mode = ExecMode::Parallel, int mutation = 0);

}  // namespace stacky
