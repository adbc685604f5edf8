#include "divscore/error.hpp"

namespace divscore {

InvariantError::InvariantError(const std::string& invariant, const std::string& detail)
    : Error("invariant violated: " + invariant + (detail.empty() ? "" : " (" + detail + ")")),
      invariant_(invariant) {}

}  // namespace divscore
