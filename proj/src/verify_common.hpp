#ifndef PTMC_SRC_VERIFY_COMMON_HPP
#define PTMC_SRC_VERIFY_COMMON_HPP

#include <optional>
#include <vector>

#include "ptmc/verify.hpp"

namespace ptmc::detail {

struct PreparedCode {
  std::vector<Component> comps;
  std::vector<int> radius;
  /// Set when the code is rejected before any scan (degenerate torus, radius
  /// out of range).
  std::optional<VerifyReport> early;
};

PreparedCode prepare_code(const CodeSet &S, const KappaAssignment &kappa);

/// Builds the failure report; witness[0] is the offending vertex.
VerifyReport failure_report(FailureKind kind, std::vector<Point> witness);

} // namespace ptmc::detail

#endif // PTMC_SRC_VERIFY_COMMON_HPP
